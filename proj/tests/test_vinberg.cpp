#include "bianchi/golden.hpp"
#include "bianchi/vinberg.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bianchi;

namespace {

std::vector<LatticeVector> vecs(const std::vector<Root>& roots) {
    std::vector<LatticeVector> out;
    for (const auto& r : roots) out.push_back(r.vec);
    return out;
}

// Every primitive crystallographic root of norm k at height x2 with
// nonpositive products against the initial roots, by scanning a wide box.
std::vector<LatticeVector> box_candidates(std::int64_t m, std::int64_t x2, std::int64_t k) {
    std::vector<LatticeVector> out;
    const auto init = oracle::initial_vectors(m);
    for (std::int64_t x3 = -x2; x3 <= x2; ++x3) {
        for (std::int64_t x4 = -x2; x4 <= x2; ++x4) {
            const Integer num = oracle::poly_norm(m, LatticeVector(0, 0, x3, x4)) - k;
            if (num % (2 * x2) != 0) continue;
            const LatticeVector v(num / (2 * x2), x2, x3, x4);
            if (!oracle::primitive(v) || !oracle::crystallographic(m, v)) continue;
            bool inside = true;
            for (const auto& e : init) inside = inside && oracle::poly_bilinear(m, v, e) <= 0;
            if (inside) out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("initial roots") {
    const auto r5 = initial_roots(make_form(5));
    REQUIRE(r5.size() == 4);
    CHECK(r5[0].vec == LatticeVector(0, 0, -1, 0));
    CHECK(r5[1].vec == LatticeVector(1, 0, 1, 0));
    CHECK(r5[2].vec == LatticeVector(0, 0, 0, -1));
    CHECK(r5[3].vec == LatticeVector(5, 0, 0, 1));
    const auto r7 = initial_roots(make_form(7));
    CHECK(r7[2].vec == LatticeVector(0, 0, 1, -2));
    CHECK(r7[3].vec == LatticeVector(7, 0, -1, 2));
    for (std::int64_t m : {1, 2, 5, 7, 11, 33}) {
        const auto r = initial_roots(make_form(m));
        CHECK(r[0].norm_k == 2);
        CHECK(r[1].norm_k == 2);
        CHECK(r[2].norm_k == 2 * m);
        CHECK(r[3].norm_k == 2 * m);
        CHECK(vecs(r) == oracle::initial_vectors(m));
    }
    CHECK_THROWS_AS(initial_roots(make_form(3)), UnsupportedBaseCusp);
    CHECK_THROWS_AS(run(make_form(3)), UnsupportedBaseCusp);
}

TEST_CASE("weight") {
    const auto f = make_form(33);
    CHECK(weight(f, make_root(f, {-1, 1, 0, 0})) == Rational(1, 2));
    CHECK(weight(f, make_root(f, {0, 0, -1, 0})) == 0);
    CHECK(weight(f, make_root(f, {11, 11, 0, 2})) == Rational(11, 2));
}

TEST_CASE("enumerate_candidates examples") {
    for (std::int64_t m : {1, 2, 5, 6, 10, 33}) {
        const auto c = enumerate_candidates(make_form(m), 1, 2);
        REQUIRE(c.size() == 1);
        CHECK(c[0].vec == LatticeVector(-1, 1, 0, 0));
    }
    const auto c33 = enumerate_candidates(make_form(33), 2, 4);
    CHECK(std::find_if(c33.begin(), c33.end(), [](const Root& r) { return r.vec == LatticeVector(16, 2, 1, 1); }) !=
          c33.end());
    CHECK(enumerate_candidates(make_form(5), 1, 10).empty());
}

TEST_CASE("enumerate_candidates equals a box scan") {
    for (std::int64_t m : {1, 2, 5, 6, 7, 11, 15, 21, 23, 33, 35}) {
        const auto form = make_form(m);
        for (std::int64_t x2 = 1; x2 <= 40; ++x2) {
            for (std::int64_t k : allowed_norms(form)) {
                const auto got = enumerate_candidates(form, x2, k);
                CHECK_MESSAGE(vecs(got) == box_candidates(m, x2, k), "m=" << m << " x2=" << x2 << " k=" << k);
                for (const auto& r : got) {
                    CHECK(r.norm_k == k);
                    CHECK(r.weight_sq == make_rational(Integer(x2 * x2), Integer(k)));
                }
            }
        }
    }
}

TEST_CASE("candidate queue order") {
    CandidateQueue q(make_form(33));
    Rational prev = -1;
    std::int64_t prev_k = 0, prev_x2 = 0;
    for (int i = 0; i < 500; ++i) {
        const auto p = q.pop();
        const Rational w = p.weight_sq();
        CHECK(w >= prev);
        if (w == prev) CHECK((p.k > prev_k || (p.k == prev_k && p.x2 > prev_x2)));
        prev = w;
        prev_k = p.k;
        prev_x2 = p.x2;
    }
}

TEST_CASE("fifth root is (-1,1,0,0)") {
    for (std::int64_t m = 1; m <= 50; ++m) {
        if (m == 3 || !is_squarefree(m)) continue;
        Budget b;
        b.max_roots = 5;
        const auto rs = run(make_form(m), b);
        REQUIRE(rs.roots.size() == 5);
        CHECK(rs.roots[4].vec == LatticeVector(-1, 1, 0, 0));
        CHECK(rs.roots[4].weight_sq == Rational(1, 2));
    }
}

TEST_CASE("run reproduces the reference tables") {
    const auto r33 = run(make_form(33));
    CHECK(r33.status == RunStatus::Terminated);
    CHECK(vecs(r33.roots) == golden::m33_vectors());

    Budget b50;
    b50.max_roots = 50;
    CHECK(run(make_form(33), b50).roots.size() == 15);

    const auto r17 = run(make_form(17));
    CHECK(r17.status == RunStatus::Terminated);
    CHECK(vecs(r17.roots) == golden::m17_vectors());

    const auto r21 = run(make_form(21));
    CHECK(r21.status == RunStatus::Terminated);
    CHECK(vecs(r21.roots) == golden::m21_vectors());
}

TEST_CASE("m=35 with a 29-root budget") {
    Budget b;
    b.max_roots = 29;
    const auto rs = run(make_form(35), b);
    CHECK(rs.status == RunStatus::BudgetExhausted);
    CHECK(rs.roots.size() == 29);
}

TEST_CASE("weight budget stops the run") {
    Budget b;
    b.max_weight_sq = 100;
    const auto rs = run(make_form(35), b);
    CHECK(rs.status == RunStatus::BudgetExhausted);
    for (const auto& r : rs.roots) CHECK(r.weight_sq <= 100);
    CHECK(rs.complete_below > 100);
}

TEST_CASE("larger budgets extend the prefix") {
    for (std::int64_t m : {22, 23, 35}) {
        Budget small, large;
        small.max_roots = 20;
        large.max_roots = 40;
        const auto a = run(make_form(m), small);
        const auto b = run(make_form(m), large);
        REQUIRE(b.roots.size() >= a.roots.size());
        CHECK(std::equal(a.roots.begin(), a.roots.end(), b.roots.begin(),
                         [](const Root& x, const Root& y) { return x.vec == y.vec; }));
        // determinism
        CHECK(vecs(run(make_form(m), small).roots) == vecs(a.roots));
    }
}

TEST_CASE("brute-force oracle agrees with run for small m") {
    for (std::int64_t m : {1, 2, 5, 6, 7}) {
        Budget b;
        b.max_roots = 1000;
        b.max_weight_sq = 4;
        const auto rs = run(make_form(m), b);
        const auto expected = oracle::brute_force_roots(m, 4);
        CHECK_MESSAGE(vecs(rs.roots) == expected, "m=" << m);
    }
}
