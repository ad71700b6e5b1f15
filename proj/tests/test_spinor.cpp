#include "bianchi/golden.hpp"
#include "bianchi/spinor.hpp"
#include "bianchi/vinberg.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bianchi;

namespace {

CoxeterDiagram reflective_diagram(std::int64_t m) {
    VinbergRun r(make_form(m), Budget{});
    r.run();
    REQUIRE(r.state().status == RunStatus::Terminated);
    return mark_filled(r.diagram(), m);
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out;
    for (auto x : v) out.push_back(x + 1);
    return out;
}

}  // namespace

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(std::int64_t{4}) == 1);
    CHECK(squarefree_part(std::int64_t{12}) == 3);
    CHECK(squarefree_part(std::int64_t{66}) == 66);
    CHECK(squarefree_part(std::int64_t{1}) == 1);
    CHECK(squarefree_part(std::int64_t{72}) == 2);
    CHECK(squarefree_part(Integer(132)) == 33);
    CHECK_THROWS(squarefree_part(std::int64_t{0}));
    for (std::int64_t k = 1; k <= 2000; ++k) {
        const std::int64_t s = squarefree_part(k);
        CHECK(is_squarefree(s));
        const std::int64_t q = k / s;
        std::int64_t r = 0;
        while ((r + 1) * (r + 1) <= q) ++r;
        CHECK((k % s == 0 && r * r == q));
    }
}

TEST_CASE("reflection membership") {
    const auto f = make_form(33);
    CHECK(reflection_in_bi(33, make_root(f, {-1, 1, 0, 0})));
    CHECK_FALSE(reflection_in_bi(33, make_root(f, {16, 2, 1, 1})));
    CHECK(reflection_in_bi(33, make_root(f, {264, 66, 0, 23})));
}

TEST_CASE("2- and 2m-reflections are always in Bi") {
    for (std::int64_t m = 1; m <= 50; ++m) {
        if (m == 3 || !is_squarefree(m)) continue;
        const auto form = make_form(m);
        for (const auto& r : initial_roots(form)) CHECK(reflection_in_bi(m, r));
    }
}

TEST_CASE("filled sets match the reference diagrams") {
    for (const auto& ref : golden::filled_sets()) {
        const auto d = reflective_diagram(ref.m);
        CHECK_MESSAGE(one_based(d.filled_vertices()) == ref.filled, "m=" << ref.m);
        if (ref.vertex_count) CHECK_MESSAGE(d.size() == ref.vertex_count, "m=" << ref.m);
    }
    CHECK(reflective_diagram(19).filled_vertices().empty());
}

TEST_CASE("non-Bi subgroup finiteness") {
    CHECK(non_bi_subgroup_finite(reflective_diagram(5)));
    CHECK_FALSE(non_bi_subgroup_finite(reflective_diagram(21)));
    CHECK(non_bi_subgroup_finite(reflective_diagram(7)));
}

TEST_CASE("Bi verdict from a reflective extended group") {
    auto verdict = [](std::int64_t m) { return bi_verdict_from_reflective_hat(reflective_diagram(m), m); };
    for (std::int64_t m : {1, 2, 5, 6, 7, 10, 11, 13, 15, 19}) CHECK(verdict(m).kind == BiVerdictKind::Reflective);
    for (std::int64_t m : {14, 17, 39}) {
        const auto v = verdict(m);
        CHECK(v.kind == BiVerdictKind::QuasiReflective);
        CHECK(v.rank == 2);
    }
    for (std::int64_t m : {21, 30, 33}) {
        const auto v = verdict(m);
        CHECK(v.kind == BiVerdictKind::NotReflective);
        CHECK(v.unrecognized);
    }
    const auto d14 = reflective_diagram(14);
    CHECK(d14.filled_vertices().size() == 4);

    Budget b;
    b.max_roots = 10;
    VinbergRun partial(make_form(35), b);
    partial.run();
    CHECK_THROWS(bi_verdict_from_reflective_hat(mark_filled(partial.diagram(), 35), 35));
}
