#include <map>
#include <random>

#include "bianchi/golden.hpp"
#include "bianchi/isometry.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bianchi;

namespace {

RootSystem exhausted(std::int64_t m, std::size_t max_roots) {
    Budget b;
    b.max_roots = max_roots;
    return run(make_form(m), b);
}

Integer eval(const Polynomial& p, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

}  // namespace

TEST_CASE("preserves_form") {
    const auto f35 = make_form(35);
    CHECK(preserves_form(golden::m35_loxodromic(), f35));
    CHECK(preserves_form(identity4(), f35));
    for (std::int64_t m : {1, 5, 7, 35}) {
        const auto f = make_form(m);
        for (const auto& r : initial_roots(f)) CHECK(preserves_form(reflection_matrix(f, r.vec), f));
    }
    Matrix4 bad = identity4();
    bad[0][0] = 2;
    CHECK_FALSE(preserves_form(bad, f35));
}

TEST_CASE("characteristic polynomial") {
    const auto& g = golden::m35_loxodromic();
    const auto p = charpoly(g);
    REQUIRE(p.size() == 5);
    CHECK(p[4] == 1);
    Integer tr = 0;
    for (int i = 0; i < 4; ++i) tr += g[i][i];
    CHECK(p[3] == -tr);
    CHECK(p[0] == determinant(g));
    // det(x I - g) at a few integers
    for (long x : {-3, -1, 0, 2, 5}) {
        Matrix4 a;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a[i][j] = (i == j ? Integer(x) : Integer(0)) - g[i][j];
        CHECK(eval(p, x) == determinant(a));
    }
    // All roots on the unit circle would force |c_i| <= binomial(4, i).
    const int binom[5] = {1, 4, 6, 4, 1};
    bool bounded = true;
    for (int i = 0; i < 5; ++i) bounded = bounded && abs(p[i]) <= binom[i];
    CHECK_FALSE(bounded);
}

TEST_CASE("classify") {
    const auto f35 = make_form(35);
    CHECK(classify(golden::m35_loxodromic(), f35) == IsometryType::Loxodromic);
    CHECK(classify(identity4(), f35) == IsometryType::Identity);
    const Matrix4 r5 = reflection_matrix(f35, {-1, 1, 0, 0});
    CHECK(classify(r5, f35) == IsometryType::Elliptic);
    CHECK(multiply(r5, r5) == identity4());
    const auto init = initial_roots(f35);
    const Matrix4 par = multiply(reflection_matrix(f35, init[0].vec), reflection_matrix(f35, init[1].vec));
    CHECK(classify(par, f35) == IsometryType::Parabolic);
    Matrix4 bad = identity4();
    bad[1][1] = 3;
    CHECK_THROWS_AS(classify(bad, f35), std::invalid_argument);
}

TEST_CASE("powers and inverses keep the type") {
    const auto f35 = make_form(35);
    const auto& g = golden::m35_loxodromic();
    const Matrix4 ginv = adjugate(g);  // det g = 1 or -1
    const Integer d = determinant(g);
    Matrix4 inv = ginv;
    for (auto& row : inv)
        for (auto& x : row) x /= d;
    CHECK(multiply(g, inv) == identity4());
    CHECK(classify(inv, f35) == IsometryType::Loxodromic);
    for (unsigned k = 1; k <= 4; ++k) CHECK(classify(power(g, k), f35) == IsometryType::Loxodromic);
    const auto init = initial_roots(f35);
    const Matrix4 par = multiply(reflection_matrix(f35, init[0].vec), reflection_matrix(f35, init[1].vec));
    for (unsigned k = 1; k <= 5; ++k) CHECK(classify(power(par, k), f35) == IsometryType::Parabolic);
}

TEST_CASE("classify is invariant under conjugation") {
    std::mt19937_64 rng(2024);
    for (std::int64_t m : {23, 35}) {
        const auto form = make_form(m);
        const auto rs = exhausted(m, 29);
        std::vector<Matrix4> samples{identity4(), reflection_matrix(form, rs.roots[4].vec)};
        samples.push_back(multiply(reflection_matrix(form, rs.roots[0].vec), reflection_matrix(form, rs.roots[1].vec)));
        for (const auto& s : find_diagram_symmetry(rs.roots, form, rs.complete_below)) samples.push_back(s.mat);
        if (m == 35) samples.push_back(golden::m35_loxodromic());
        for (int i = 0; i < 100; ++i) {
            const auto [h, hinv] = oracle::random_isometry(form, rs.roots, rng, 1 + i % 6);
            REQUIRE(multiply(h, hinv) == identity4());
            const Matrix4& g = samples[i % samples.size()];
            CHECK(classify(multiply(hinv, multiply(g, h)), form) == classify(g, form));
        }
    }
}

TEST_CASE("parabolic fixed point") {
    for (std::int64_t m : {5, 7, 35}) {
        const auto f = make_form(m);
        const auto init = initial_roots(f);
        const Matrix4 par = multiply(reflection_matrix(f, init[0].vec), reflection_matrix(f, init[1].vec));
        CHECK(parabolic_fixed_point(par, f) == base_point());
    }
    const auto f35 = make_form(35);
    CHECK_THROWS(parabolic_fixed_point(golden::m35_loxodromic(), f35));
    CHECK_THROWS(parabolic_fixed_point(identity4(), f35));
}

TEST_CASE("symmetries of the m=35 prefix") {
    const auto f = make_form(35);
    const auto rs = exhausted(35, 29);
    REQUIRE(rs.roots.size() == 29);
    const auto syms = find_diagram_symmetry(rs.roots, f, rs.complete_below);
    bool lox = false;
    for (const auto& g : syms) {
        CHECK(preserves_form(g.mat, f));
        CHECK(g.mat != identity4());
        lox = lox || classify(g.mat, f) == IsometryType::Loxodromic;
        for (const auto& r : rs.roots) {
            const LatticeVector v = bianchi::apply(g.mat, r.vec);
            CHECK(oracle::poly_norm(35, v) == r.norm_k);
            CHECK(oracle::crystallographic(35, v));
            CHECK(oracle::primitive(v));
        }
    }
    CHECK(lox);
}

TEST_CASE("symmetries of the m=23 prefix") {
    const auto f = make_form(23);
    const auto rs = exhausted(23, 200);
    const auto syms = find_diagram_symmetry(rs.roots, f, rs.complete_below);
    std::map<LatticeVector, int> parabolic_by_point;
    for (const auto& g : syms) {
        const auto t = classify(g.mat, f);
        CHECK(t != IsometryType::Loxodromic);
        if (t == IsometryType::Parabolic) {
            const auto q = parabolic_fixed_point(g.mat, f);
            CHECK(oracle::poly_norm(23, q) == 0);
            CHECK(bianchi::apply(g.mat, q) == q);
            ++parabolic_by_point[q];
        }
    }
    int best = 0;
    for (const auto& [q, n] : parabolic_by_point) best = std::max(best, n);
    CHECK(best >= 2);
}

TEST_CASE("terminated diagrams have only finite-order symmetries") {
    const auto f = make_form(33);
    const auto rs = run(f);
    REQUIRE(rs.status == RunStatus::Terminated);
    for (const auto& g : find_diagram_symmetry(rs.roots, f, rs.complete_below))
        CHECK(classify(g.mat, f) == IsometryType::Elliptic);
}

TEST_CASE("certify") {
    {
        const auto rs = exhausted(35, 29);
        const auto c = certify(rs, build_diagram(rs.form, rs.roots), 35);
        REQUIRE(std::holds_alternative<LoxodromicSymmetry>(c));
        CHECK(verify_certificate(c, rs.form));
        CHECK(std::get<LoxodromicSymmetry>(c).weight_bound == rs.complete_below);
    }
    for (std::int64_t m : {23, 31}) {
        const auto rs = exhausted(m, 200);
        const auto c = certify(rs, build_diagram(rs.form, rs.roots), m);
        REQUIRE(std::holds_alternative<ParabolicRank2>(c));
        CHECK(verify_certificate(c, rs.form));
        const auto& p = std::get<ParabolicRank2>(c);
        CHECK(oracle::poly_norm(m, p.q) == 0);
    }
    const auto done = run(make_form(33));
    CHECK_THROWS(certify(done, build_diagram(done.form, done.roots), 33));
    CHECK_FALSE(verify_certificate(NoCertificate{}, make_form(5)));
    CHECK(verify_certificate(CuspBoundViolation{40, 36}, make_form(5)));
}
