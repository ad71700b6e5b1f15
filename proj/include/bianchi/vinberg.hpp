#pragma once

// Vinberg's algorithm for L_m with the ideal base point u0 = (1,0,0,0).

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "bianchi/coxeter.hpp"
#include "bianchi/qform.hpp"

namespace bianchi {

/// The cusp stabilizer for m = 3 is not the four-root sector used here.
class UnsupportedBaseCusp : public std::invalid_argument {
public:
    UnsupportedBaseCusp()
        : std::invalid_argument("m = 3: the cusp stabilizer at u0 differs; verdict is hardcoded") {}
};

enum class RunStatus { Running, Terminated, BudgetExhausted };

const char* to_string(RunStatus status);

struct Budget {
    std::size_t max_roots = 200;
    Rational max_weight_sq = 100000;
};

struct RootSystem {
    FormSpec form;
    LatticeVector base = base_point();
    std::vector<Root> roots;
    RunStatus status = RunStatus::Running;
    /// Every candidate of weight_sq strictly below this has been examined.
    Rational complete_below = 0;
};

std::vector<Root> initial_roots(const FormSpec& form);

/// rho^2 = B(e, u0)^2 / k = x2^2 / k.
Rational weight(const FormSpec& form, const Root& e);

/// Primitive crystallographic roots with the given x2 and norm k inside the
/// sector cut out by the four stabilizer roots, sorted lexicographically.
std::vector<Root> enumerate_candidates(const FormSpec& form, std::int64_t x2, std::int64_t k);

/// Pairs (x2, k) in exact increasing order of x2^2 / k; ties go to smaller k,
/// then smaller x2.
class CandidateQueue {
public:
    struct Pair {
        std::int64_t x2;
        std::int64_t k;
        Rational weight_sq() const { return make_rational(Integer(x2) * x2, Integer(k)); }
    };

    explicit CandidateQueue(const FormSpec& form);

    const Pair& peek() const { return heap_.top(); }
    Pair pop();

private:
    struct Later {
        bool operator()(const Pair& a, const Pair& b) const;
    };
    std::priority_queue<Pair, std::vector<Pair>, Later> heap_;
};

/// Incremental run. Candidates of equal weight are tested one at a time in
/// lexicographic order against everything accepted so far.
class VinbergRun {
public:
    VinbergRun(const FormSpec& form, Budget budget);

    const RootSystem& state() const { return state_; }
    const CoxeterDiagram& diagram() const { return diagram_; }

    /// Accepts and returns the next root, or nullopt once the weight budget
    /// is exhausted.
    std::optional<Root> next_root();

    /// Runs until termination or budget exhaustion. The observer is called
    /// after every acceptance.
    void run(const std::function<void(const VinbergRun&)>& observer = {});

private:
    bool admissible(const Root& candidate) const;
    bool load_next_level();
    void record_progress();

    RootSystem state_;
    Budget budget_;
    CandidateQueue queue_;
    CoxeterDiagram diagram_;
    std::vector<Root> level_;
    std::size_t level_pos_ = 0;
};

RootSystem run(const FormSpec& form, const Budget& budget = {});

}  // namespace bianchi
