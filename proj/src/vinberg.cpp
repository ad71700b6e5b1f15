#include "bianchi/vinberg.hpp"

#include <algorithm>

namespace bianchi {

const char* to_string(RunStatus status) {
    switch (status) {
        case RunStatus::Running: return "Running";
        case RunStatus::Terminated: return "Terminated";
        case RunStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

std::vector<Root> initial_roots(const FormSpec& form) {
    if (form.m == 3) throw UnsupportedBaseCusp();
    const Integer m = static_cast<long>(form.m);
    std::vector<LatticeVector> vecs{{0, 0, -1, 0}, {1, 0, 1, 0}};
    if (form.branch == Branch::A) {
        vecs.push_back({0, 0, 0, -1});
        vecs.push_back({m, 0, 0, 1});
    } else {
        vecs.push_back({0, 0, 1, -2});
        vecs.push_back({m, 0, -1, 2});
    }
    std::vector<Root> roots;
    for (const auto& v : vecs) roots.push_back(make_root(form, v));
    return roots;
}

Rational weight(const FormSpec& form, const Root& e) {
    const Integer p = bilinear(form, e.vec, base_point());
    return make_rational(p * p, e.norm_k);
}

std::vector<Root> enumerate_candidates(const FormSpec& form, std::int64_t x2, std::int64_t k) {
    using i128 = __int128;
    std::vector<Root> out;
    if (x2 <= 0 || k <= 0) return out;
    const i128 m = form.m;

    // Writing the norm equation as -2 x1 x2 + Q(x3, x4) = k, x1 is integral
    // iff Q - k = 0 (mod 2 x2). Both branches split Q into a part depending on
    // one variable y and a part depending on x4; y is bucketed by residue.
    //   branch A: y = x3 in [0, x2/2], Q = 2 y^2 + 2 m x4^2, x4 in [0, x2/2];
    //             need 2 y^2 + 2 m x4^2 - k = 0 (mod 2 x2).
    //   branch B: y = 2 x3 + x4 in [0, x2], y = x4 (mod 2), 2 Q = y^2 + m x4^2,
    //             x4 in [0, x2]; need y^2 + m x4^2 - 2k = 0 (mod 4 x2).
    const bool branch_a = form.branch == Branch::A;
    const std::int64_t modulus = branch_a ? 2 * x2 : 4 * x2;
    const std::int64_t y_max = branch_a ? x2 / 2 : x2;
    const std::int64_t x4_max = branch_a ? x2 / 2 : x2;

    std::vector<std::int64_t> head(static_cast<std::size_t>(modulus), -1);
    std::vector<std::int64_t> next(static_cast<std::size_t>(y_max + 1), -1);
    for (std::int64_t y = y_max; y >= 0; --y) {
        const i128 yy = static_cast<i128>(y) * y;
        const auto r = static_cast<std::int64_t>((branch_a ? 2 * yy : yy) % modulus);
        next[y] = head[r];
        head[r] = y;
    }

    for (std::int64_t x4 = 0; x4 <= x4_max; ++x4) {
        const i128 sq = static_cast<i128>(x4) * x4;
        const i128 rest = branch_a ? 2 * m * sq - k : m * sq - 2 * static_cast<i128>(k);
        std::int64_t need = static_cast<std::int64_t>((-rest) % modulus);
        if (need < 0) need += modulus;
        for (std::int64_t y = head[need]; y >= 0; y = next[y]) {
            std::int64_t x3;
            i128 q;
            if (branch_a) {
                x3 = y;
                q = 2 * static_cast<i128>(y) * y + 2 * m * sq;
            } else {
                if ((y - x4) % 2 != 0) continue;
                x3 = (y - x4) / 2;
                q = (static_cast<i128>(y) * y + m * sq) / 2;
            }
            const i128 x1 = (q - k) / (2 * static_cast<i128>(x2));
            // Primitivity and the crystallographic condition, in machine integers.
            i128 g = x1 < 0 ? -x1 : x1;
            for (i128 c : {static_cast<i128>(x2), static_cast<i128>(x3), static_cast<i128>(x4)}) {
                i128 a = c < 0 ? -c : c;
                while (a != 0) {
                    const i128 t = g % a;
                    g = a;
                    a = t;
                }
            }
            if (g != 1) continue;
            const i128 d3 = branch_a ? 2 * static_cast<i128>(x3) : 2 * static_cast<i128>(x3) + x4;
            const i128 d4 = branch_a ? 2 * m * x4 : static_cast<i128>(x3) + ((m + 1) / 2) * x4;
            const i128 duals[4] = {-static_cast<i128>(x2), -x1, d3, d4};
            bool crystallographic = true;
            for (i128 d : duals) {
                if ((2 * d) % k != 0) {
                    crystallographic = false;
                    break;
                }
            }
            if (!crystallographic) continue;
            LatticeVector v(Integer(static_cast<long>(x1)), Integer(static_cast<long>(x2)),
                            Integer(static_cast<long>(x3)), Integer(static_cast<long>(x4)));
            out.push_back(make_root(form, v));
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.vec < b.vec; });
    return out;
}

bool CandidateQueue::Later::operator()(const Pair& a, const Pair& b) const {
    // true when a is dequeued after b
    const __int128 lhs = static_cast<__int128>(a.x2) * a.x2 * b.k;
    const __int128 rhs = static_cast<__int128>(b.x2) * b.x2 * a.k;
    if (lhs != rhs) return lhs > rhs;
    if (a.k != b.k) return a.k > b.k;
    return a.x2 > b.x2;
}

CandidateQueue::CandidateQueue(const FormSpec& form) {
    for (std::int64_t k : allowed_norms(form)) heap_.push({1, k});
}

CandidateQueue::Pair CandidateQueue::pop() {
    Pair top = heap_.top();
    heap_.pop();
    heap_.push({top.x2 + 1, top.k});
    return top;
}

VinbergRun::VinbergRun(const FormSpec& form, Budget budget)
    : budget_(std::move(budget)), queue_(form), diagram_(form) {
    state_.form = form;
    state_.roots = initial_roots(form);
    for (const auto& r : state_.roots) diagram_.add_vertex(r);
}

bool VinbergRun::admissible(const Root& candidate) const {
    for (const auto& r : state_.roots) {
        if (bilinear(state_.form, candidate.vec, r.vec) > 0) return false;
    }
    return true;
}

bool VinbergRun::load_next_level() {
    level_.clear();
    level_pos_ = 0;
    const Rational w = queue_.peek().weight_sq();
    if (w > budget_.max_weight_sq) return false;
    while (queue_.peek().weight_sq() == w) {
        const auto pair = queue_.pop();
        auto found = enumerate_candidates(state_.form, pair.x2, pair.k);
        level_.insert(level_.end(), std::make_move_iterator(found.begin()),
                      std::make_move_iterator(found.end()));
    }
    std::sort(level_.begin(), level_.end(),
              [](const Root& a, const Root& b) { return a.vec < b.vec; });
    return true;
}

std::optional<Root> VinbergRun::next_root() {
    for (;;) {
        while (level_pos_ < level_.size()) {
            Root& candidate = level_[level_pos_++];
            if (admissible(candidate)) {
                state_.roots.push_back(candidate);
                diagram_.add_vertex(candidate);
                return candidate;
            }
        }
        if (!load_next_level()) return std::nullopt;
    }
}

void VinbergRun::record_progress() {
    if (level_pos_ < level_.size())
        state_.complete_below = weight(state_.form, level_[level_pos_]);
    else
        state_.complete_below = queue_.peek().weight_sq();
}

void VinbergRun::run(const std::function<void(const VinbergRun&)>& observer) {
    if (state_.status != RunStatus::Running) return;
    while (state_.roots.size() < budget_.max_roots) {
        if (!next_root()) break;
        if (observer) observer(*this);
        if (has_finite_volume(diagram_)) {
            state_.status = RunStatus::Terminated;
            record_progress();
            return;
        }
    }
    state_.status = RunStatus::BudgetExhausted;
    record_progress();
}

RootSystem run(const FormSpec& form, const Budget& budget) {
    VinbergRun runner(form, budget);
    runner.run();
    return runner.state();
}

}  // namespace bianchi
