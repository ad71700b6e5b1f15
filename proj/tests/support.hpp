#pragma once

// Independent reference computations for the tests. Nothing here calls the
// gram matrix, the sector box or allowed_norms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bianchi/isometry.hpp"
#include "bianchi/qform.hpp"

namespace oracle {

using bianchi::Integer;
using bianchi::LatticeVector;
using bianchi::Rational;

// f(x) written out as a polynomial.
inline Integer poly_norm(std::int64_t m, const LatticeVector& x) {
    if (m % 4 == 3) {
        return -2 * x[0] * x[1] + 2 * x[2] * x[2] + 2 * x[2] * x[3] + Integer((m + 1) / 2) * x[3] * x[3];
    }
    return -2 * x[0] * x[1] + 2 * x[2] * x[2] + 2 * Integer(m) * x[3] * x[3];
}

// Polarization of poly_norm.
inline Integer poly_bilinear(std::int64_t m, const LatticeVector& u, const LatticeVector& v) {
    return (poly_norm(m, u + v) - poly_norm(m, u) - poly_norm(m, v)) / 2;
}

inline std::vector<LatticeVector> initial_vectors(std::int64_t m) {
    if (m % 4 == 3)
        return {{0, 0, -1, 0}, {1, 0, 1, 0}, {0, 0, 1, -2}, {Integer(m), 0, -1, 2}};
    return {{0, 0, -1, 0}, {1, 0, 1, 0}, {0, 0, 0, -1}, {Integer(m), 0, 0, 1}};
}

inline bool primitive(const LatticeVector& v) {
    Integer g = 0;
    for (int i = 0; i < 4; ++i) g = bianchi::gcd(g, v[i]);
    return g == 1;
}

inline bool crystallographic(std::int64_t m, const LatticeVector& e) {
    const Integer k = poly_norm(m, e);
    for (int i = 0; i < 4; ++i) {
        LatticeVector b;
        b[i] = 1;
        if ((2 * poly_bilinear(m, e, b)) % k != 0) return false;
    }
    return true;
}

struct Candidate {
    Rational w;
    LatticeVector v;
    bool operator<(const Candidate& o) const { return w != o.w ? w < o.w : v < o.v; }
};

// Greedy Vinberg selection over every primitive crystallographic vector with
// 1 <= x2, |x3|, |x4| <= x2, even norm k <= 8m and x2^2 / k <= max_w.
inline std::vector<LatticeVector> brute_force_roots(std::int64_t m, const Rational& max_w) {
    std::vector<Candidate> cands;
    const std::int64_t kmax = 8 * m;
    std::int64_t x2max = 0;
    while (Rational((x2max + 1) * (x2max + 1), kmax) <= max_w) ++x2max;
    for (std::int64_t x2 = 1; x2 <= x2max; ++x2) {
        for (std::int64_t x3 = -x2; x3 <= x2; ++x3) {
            for (std::int64_t x4 = -x2; x4 <= x2; ++x4) {
                const Integer q = poly_norm(m, LatticeVector(0, 0, x3, x4));
                for (std::int64_t k = 2; k <= kmax; k += 2) {
                    const Rational w(Integer(x2 * x2), Integer(k));
                    if (w > max_w) continue;
                    // -2 x1 x2 + q = k
                    const Integer num = q - k;
                    if (num % (2 * x2) != 0) continue;
                    const LatticeVector v(num / (2 * x2), x2, x3, x4);
                    if (!primitive(v) || !crystallographic(m, v)) continue;
                    Candidate c{w, v};
                    c.w.canonicalize();
                    cands.push_back(c);
                }
            }
        }
    }
    std::sort(cands.begin(), cands.end());
    std::vector<LatticeVector> accepted = initial_vectors(m);
    for (const auto& c : cands) {
        bool ok = true;
        for (const auto& a : accepted)
            if (poly_bilinear(m, c.v, a) > 0) {
                ok = false;
                break;
            }
        if (ok) accepted.push_back(c.v);
    }
    return accepted;
}

// Kronecker symbol (D / n) for n >= 1.
inline int kronecker(std::int64_t D, std::int64_t n) {
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        const std::int64_t r = ((D % 8) + 8) % 8;
        if (r % 2 == 0) return 0;
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol (D / n), n odd
    std::int64_t a = ((D % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            if (n % 8 == 3 || n % 8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// Class number from the finite sum h = -w/(2|D|) sum_{a<|D|} (D/a) a.
inline std::int64_t class_number(std::int64_t D) {
    const std::int64_t n = -D;
    std::int64_t s = 0;
    for (std::int64_t a = 1; a < n; ++a) s += kronecker(D, a) * a;
    const std::int64_t w = D == -4 ? 4 : (D == -3 ? 6 : 2);
    return -w * s / (2 * n);
}

// True iff a x^2 + b x y + c y^2 = n has an integer solution (positive definite).
inline bool represents(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n) {
    const std::int64_t D = b * b - 4 * a * c;
    // 4 a f = (2 a x + b y)^2 - D y^2, so y^2 <= 4 a n / -D
    for (std::int64_t y = 0; y * y * (-D) <= 4 * a * n; ++y) {
        for (std::int64_t x = -2 * n - 2; x <= 2 * n + 2; ++x) {
            if (a * x * x + b * x * y + c * y * y == n) return true;
        }
    }
    return false;
}

// Random form-preserving matrices as products of reflections in the roots.
inline std::pair<bianchi::Matrix4, bianchi::Matrix4> random_isometry(const bianchi::FormSpec& form,
                                                                     const std::vector<bianchi::Root>& roots,
                                                                     std::mt19937_64& rng, int length) {
    bianchi::Matrix4 h = bianchi::identity4(), hinv = bianchi::identity4();
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    for (int i = 0; i < length; ++i) {
        const auto r = bianchi::reflection_matrix(form, roots[pick(rng)].vec);
        h = bianchi::multiply(h, r);
        hinv = bianchi::multiply(r, hinv);
    }
    return {h, hinv};
}

}  // namespace oracle
