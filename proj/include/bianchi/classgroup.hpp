#pragma once

// Class groups of imaginary quadratic fields via reduced binary quadratic
// forms, and the class-number conditions used to rule out (quasi-)reflectivity.

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "bianchi/coxeter.hpp"

namespace bianchi {

/// a x^2 + b xy + c y^2 with a > 0 and negative discriminant.
struct BQF {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 1;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    BQF inverse() const { return {a, -b, c}; }

    friend bool operator==(const BQF&, const BQF&) = default;
    friend auto operator<=>(const BQF&, const BQF&) = default;
    friend std::ostream& operator<<(std::ostream& os, const BQF& f) {
        return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
    }
};

struct ClassGroupStructure {
    std::int64_t D = 0;
    std::int64_t h = 1;
    std::vector<std::int64_t> invariant_factors;    // d1 | d2 | ..., all > 1
    std::vector<std::int64_t> elementary_divisors;  // prime powers, ascending

    std::int64_t two_torsion_order() const;
};

/// -4m for m = 1, 2 (mod 4), -m for m = 3 (mod 4).
std::int64_t field_discriminant(std::int64_t m);

BQF reduce(BQF f);
BQF principal_form(std::int64_t D);

/// Primitive reduced forms of discriminant D, sorted.
std::vector<BQF> reduced_forms(std::int64_t D);

/// Gauss composition followed by reduction.
BQF compose(const BQF& f, const BQF& g);

ClassGroupStructure group_structure(std::int64_t D);

/// Order of the 2-torsion of the class group from genus theory:
/// 2^t for m = 1 (mod 4), 2^(t-1) otherwise, t = number of primes dividing m.
std::int64_t two_part_order(std::int64_t m);

/// Class-group shapes compatible with:
/// 1 - Bi(m) reflective or quasi-reflective of rank 1: (Z/2)^n;
/// 2 - extended group, same: (Z/2)^n x (Z/4)^l;
/// 3 - Bi(m) quasi-reflective of rank 2: (Z/2)^n x (Z/q)^k, q in {3,4}, k <= 1;
/// 4 - extended group, rank 2: (Z/2)^n x (Z/3)^k x (Z/4)^l, k <= 1.
/// Evaluated on the elementary divisors.
bool passes_filter(const ClassGroupStructure& structure, int filter_case);

enum class GroupKind { Bianchi, Extended };
enum class BoundMode { Reflective, Quasi };

struct CuspBound {
    std::int64_t count = 0;
    std::int64_t bound = 0;
    bool ok = true;
};

/// Necessary conditions on cusps. Reflective mode compares count_cusps with
/// 12 h (Bi) or 12 h h2 (extended). Quasi mode compares the cusp pairs at
/// `vertex` with 12 (h - 1) or 12 h2 (h - 1); the vertex mirror must miss u0.
CuspBound cusp_bound_ok(const CoxeterDiagram& diagram, GroupKind group, BoundMode mode,
                        std::int64_t m, std::optional<std::size_t> vertex = std::nullopt);

}  // namespace bianchi
