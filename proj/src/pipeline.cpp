#include "bianchi/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bianchi/golden.hpp"

namespace bianchi {

const char* to_string(Status s) {
    switch (s) {
        case Status::Reflective: return "Reflective";
        case Status::QuasiReflective: return "QuasiReflective";
        case Status::NotReflective: return "NotReflective";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

GroupStatus from_bi_verdict(const BiVerdict& b) {
    GroupStatus s;
    switch (b.kind) {
        case BiVerdictKind::Reflective: s.status = Status::Reflective; break;
        case BiVerdictKind::QuasiReflective:
            s.status = Status::QuasiReflective;
            s.rank = b.rank;
            break;
        case BiVerdictKind::NotReflective: s.status = Status::NotReflective; break;
    }
    s.warning = b.unrecognized;
    if (b.unrecognized) s.note = "filled vertices induce a non-elliptic subdiagram of unrecognized shape";
    return s;
}

void apply_certificate(Verdict& v, const Certificate& cert) {
    struct Visitor {
        Verdict& v;
        void operator()(const LoxodromicSymmetry&) const {
            v.hat = {Status::NotReflective, 0, false, "loxodromic diagram symmetry; not quasi-reflective"};
            v.bi = {Status::NotReflective, 0, false, "finite-index subgroup of a non-quasi-reflective group"};
        }
        void operator()(const CuspBoundViolation& c) const {
            v.hat = {Status::NotReflective, 0, false,
                     "cusp count " + std::to_string(c.count) + " exceeds " + std::to_string(c.bound)};
            v.bi = {Status::NotReflective, 0, false, "finite-index subgroup of a non-reflective group"};
        }
        void rank(int r) const {
            v.hat = {Status::QuasiReflective, r, false, "parabolic diagram symmetries with a common fixed point"};
            if (v.h2 == 1)
                v.bi = {Status::QuasiReflective, r, false, "equal to the extended group (h2 = 1)"};
            else
                v.bi = {Status::Unknown, 0, false, "index h2 > 1; no rule applies"};
        }
        void operator()(const ParabolicRank2&) const { rank(2); }
        void operator()(const ParabolicRank1&) const { rank(1); }
        void operator()(const NoCertificate&) const {
            v.hat = {Status::Unknown, 0, false, "budget exhausted without a certificate"};
            v.bi = {Status::Unknown, 0, false, "budget exhausted without a certificate"};
        }
    };
    std::visit(Visitor{v}, cert);
}

}  // namespace

Verdict classify(std::int64_t m, const Budget& budget) {
    const auto t0 = std::chrono::steady_clock::now();
    const FormSpec form = make_form(m);
    Verdict v(form);
    v.class_group = group_structure(field_discriminant(m));
    v.h2 = two_part_order(m);

    if (m == 3) {
        v.hat = {Status::Reflective, 0, false, "hardcoded: the u0 stabilizer has four faces"};
        v.bi = {Status::Reflective, 0, false, "hardcoded: the u0 stabilizer has four faces"};
        v.roots.status = RunStatus::Terminated;
    } else {
        VinbergRun run(form, budget);
        run.run();
        v.roots = run.state();
        v.diagram = mark_filled(run.diagram(), m);
        v.cusps = count_cusps(v.diagram);
        if (v.roots.status == RunStatus::Terminated) {
            v.hat = {Status::Reflective, 0, false, ""};
            v.bi = from_bi_verdict(bi_verdict_from_reflective_hat(v.diagram, m));
        } else {
            v.certificate = certify(v.roots, v.diagram, m);
            apply_certificate(v, *v.certificate);
        }
    }
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

ScanResult scan(std::vector<std::int64_t> ms, const Budget& budget, unsigned jobs) {
    ScanResult result;
    std::vector<std::int64_t> todo;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (std::int64_t m : ms) {
        if (m >= 1 && is_squarefree(m))
            todo.push_back(m);
        else
            result.skipped.push_back(m);
    }
    for (std::int64_t m : result.skipped) std::cerr << "warning: skipping m=" << m << " (not square-free)\n";

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));

    std::vector<std::optional<Verdict>> slots(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) slots[i] = classify(todo[i], budget);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& s : slots) result.verdicts.push_back(std::move(*s));
    return result;
}

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids{"m33_vectors", "m33_completions", "m17_vectors", "m21_vectors"};
    return ids;
}

namespace {

TableReport compare_vectors(std::string_view which, std::int64_t m, const std::vector<LatticeVector>& expected) {
    TableReport rep{std::string(which), false, ""};
    const RootSystem rs = run(make_form(m));
    std::set<LatticeVector> got;
    for (const auto& r : rs.roots) got.insert(r.vec);
    const std::set<LatticeVector> want(expected.begin(), expected.end());
    std::ostringstream os;
    os << "m=" << m << ": " << rs.roots.size() << " roots, status " << to_string(rs.status) << "\n";
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        os << "  " << (i + 1) << "  " << rs.roots[i].vec << "  k=" << rs.roots[i].norm_k
           << (want.count(rs.roots[i].vec) ? "" : "  EXTRA") << "\n";
    for (const auto& w : expected)
        if (!got.count(w)) os << "  MISSING " << w << "\n";
    rep.pass = got == want && rs.status == RunStatus::Terminated;
    os << (rep.pass ? "match" : "MISMATCH") << "\n";
    rep.text = os.str();
    return rep;
}

std::string render(const std::vector<std::size_t>& added, const std::string& type) {
    std::ostringstream os;
    for (std::size_t i = 0; i < added.size(); ++i) os << (i ? "," : "") << added[i];
    os << " ; " << type;
    return os.str();
}

TableReport compare_completions() {
    TableReport rep{"m33_completions", true, ""};
    const FormSpec form = make_form(33);
    VinbergRun runner(form, Budget{});
    runner.run();
    const CoxeterDiagram& d = runner.diagram();
    std::ostringstream os;
    for (const auto& row : golden::m33_completions()) {
        std::set<std::string> want{render(row.first.added, row.first.type), render(row.second.added, row.second.type)};
        std::set<std::string> got;
        if (row.a <= d.size() && row.b <= d.size()) {
            for (const auto& c : completions(d, row.a - 1, row.b - 1)) {
                std::vector<std::size_t> one_based;
                for (std::size_t x : c.added) one_based.push_back(x + 1);
                got.insert(render(one_based, to_string(c.cls)));
            }
        }
        const bool ok = got == want;
        rep.pass = rep.pass && ok;
        os << row.a << "," << row.b << " |";
        for (const auto& g : got) os << " " << g << " |";
        os << (ok ? " ok" : " MISMATCH") << "\n";
    }
    const auto fv = finite_volume(d);
    std::size_t two = 0;
    for (const auto& w : fv.witnesses) two += (w.count == 2);
    os << fv.witnesses.size() << " rank-2 elliptic subdiagrams, " << two << " with exactly two completions\n";
    rep.pass = rep.pass && fv.finite_volume && two == fv.witnesses.size();
    os << (rep.pass ? "match" : "MISMATCH") << "\n";
    rep.text = os.str();
    return rep;
}

}  // namespace

TableReport reproduce_table(std::string_view which) {
    if (which == "m33_vectors") return compare_vectors(which, 33, golden::m33_vectors());
    if (which == "m17_vectors") return compare_vectors(which, 17, golden::m17_vectors());
    if (which == "m21_vectors") return compare_vectors(which, 21, golden::m21_vectors());
    if (which == "m33_completions") return compare_completions();
    throw std::invalid_argument("unknown table id: " + std::string(which));
}

}  // namespace bianchi
