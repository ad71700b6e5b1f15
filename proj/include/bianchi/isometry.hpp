#pragma once

// Exact classification of integral isometries of (L_m, B), diagram symmetries
// of partial root systems, and non-reflectivity certificates.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "bianchi/classgroup.hpp"
#include "bianchi/coxeter.hpp"
#include "bianchi/linalg.hpp"
#include "bianchi/vinberg.hpp"

namespace bianchi {

struct IntegralIsometry {
    Matrix4 mat;

    friend bool operator==(const IntegralIsometry&, const IntegralIsometry&) = default;
    friend bool operator<(const IntegralIsometry& a, const IntegralIsometry& b) { return a.mat < b.mat; }
};

enum class IsometryType { Identity, Elliptic, Parabolic, Loxodromic };
const char* to_string(IsometryType t);

/// Coefficients, constant term first.
using Polynomial = std::vector<Integer>;

/// g^T B g = B and det g = +-1.
bool preserves_form(const Matrix4& g, const FormSpec& form);

/// det(x I - g), monic of degree 4.
Polynomial charpoly(const Matrix4& g);

/// Cyclotomic polynomial Phi_n for the n with phi(n) <= 4.
Polynomial cyclotomic(int n);
const std::vector<int>& small_cyclotomic_indices();

/// Throws std::invalid_argument unless g preserves the form.
IsometryType classify(const Matrix4& g, const FormSpec& form);

Matrix4 reflection_matrix(const FormSpec& form, const LatticeVector& e);
Matrix4 power(const Matrix4& g, unsigned n);

/// Primitive isotropic q with g q = q, in the future cone. Throws unless g is parabolic.
LatticeVector parabolic_fixed_point(const Matrix4& g, const FormSpec& form);

/// Translation induced on q^perp / q by a parabolic g fixing q, as a vector of
/// q^perp defined up to adding multiples of q and up to scale.
LatticeVector translation_vector(const Matrix4& g, const FormSpec& form, const LatticeVector& q);

/// Isometries permuting the roots, found by matching images of the first four
/// independent roots. Images outside the set must be admissible and lie at
/// weight_sq >= complete_below. Sorted; identity and root reflections excluded.
std::vector<IntegralIsometry> find_diagram_symmetry(const std::vector<Root>& roots, const FormSpec& form,
                                                    const Rational& complete_below);

struct LoxodromicSymmetry {
    IntegralIsometry g;
    Rational weight_bound;
};
struct CuspBoundViolation {
    std::int64_t count = 0;
    std::int64_t bound = 0;
};
struct ParabolicRank2 {
    IntegralIsometry g1;
    IntegralIsometry g2;
    LatticeVector q;
};
struct ParabolicRank1 {
    IntegralIsometry g1;
    LatticeVector q;
};
struct NoCertificate {};

using Certificate =
    std::variant<NoCertificate, LoxodromicSymmetry, CuspBoundViolation, ParabolicRank2, ParabolicRank1>;

const char* certificate_name(const Certificate& c);

/// Requires state.status == BudgetExhausted. Order: loxodromic symmetry,
/// rank-2 parabolic pair, single parabolic, cusp-count overflow, none.
Certificate certify(const RootSystem& state, const CoxeterDiagram& diagram, std::int64_t m);

/// Re-checks a certificate from its own data.
bool verify_certificate(const Certificate& c, const FormSpec& form);

}  // namespace bianchi
