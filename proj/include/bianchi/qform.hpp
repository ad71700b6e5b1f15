#pragma once

// The integral Lorentzian lattice L_m: Hermitian 2x2 matrices over the ring
// of integers of Q(sqrt(-m)), written in coordinates (x1, x2, x3, x4) so that
// f(x) = -2 det x is an integral quadratic form of signature (3,1).

#include <array>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/arith.hpp"

namespace bianchi {

class InvalidFieldParameter : public std::invalid_argument {
public:
    explicit InvalidFieldParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// m = 1, 2 (mod 4) uses branch A; m = 3 (mod 4) uses branch B.
enum class Branch { A, B };

using Gram = std::array<std::array<std::int64_t, 4>, 4>;

struct FormSpec {
    std::int64_t m = 0;
    Branch branch = Branch::A;
    Gram gram{};

    std::int64_t entry(int i, int j) const { return gram[i][j]; }
};

struct LatticeVector {
    std::array<Integer, 4> coords;

    LatticeVector() : coords{0, 0, 0, 0} {}
    LatticeVector(Integer x1, Integer x2, Integer x3, Integer x4)
        : coords{std::move(x1), std::move(x2), std::move(x3), std::move(x4)} {}

    const Integer& operator[](int i) const { return coords[i]; }
    Integer& operator[](int i) { return coords[i]; }

    bool is_zero() const;

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
        return a.coords == b.coords;
    }
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
        return a.coords < b.coords;
    }
    friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(const Integer& s, const LatticeVector& v);

/// A primitive positive-norm vector satisfying the crystallographic condition,
/// oriented so that B(vec, u0) <= 0.
struct Root {
    LatticeVector vec;
    Integer norm_k;
    Rational weight_sq;  // B(vec, u0)^2 / k
};

/// Base point of the algorithm, the isotropic vector (1, 0, 0, 0).
LatticeVector base_point();

bool is_squarefree(std::int64_t n);

FormSpec make_form(std::int64_t m);

Integer bilinear(const FormSpec& form, const LatticeVector& u, const LatticeVector& v);
Integer norm(const FormSpec& form, const LatticeVector& v);

/// Gram * v, i.e. the products B(v, b_i) with the standard basis vectors.
std::array<Integer, 4> dual_coords(const FormSpec& form, const LatticeVector& v);

/// Divides by the content and orients so that B(v, u0) <= 0; when
/// B(v, u0) = 0 the first nonzero coordinate is made positive.
LatticeVector normalize_primitive(const LatticeVector& v);

bool is_primitive(const LatticeVector& v);

/// k = B(e,e) divides 2 B(e, x) for every lattice vector x.
bool crystallographic_ok(const FormSpec& form, const LatticeVector& e);

/// Even positive divisors of 4m (branch A) or 2m (branch B); a superset of
/// the norms any root can have.
std::vector<std::int64_t> allowed_norms(const FormSpec& form);

/// Builds a Root from a vector that is already primitive and oriented.
Root make_root(const FormSpec& form, const LatticeVector& v);

}  // namespace bianchi
