#include "bianchi/qform.hpp"

#include <algorithm>

namespace bianchi {

bool LatticeVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Integer& c) { return c == 0; });
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ',' << v[3] << ')';
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

LatticeVector operator*(const Integer& s, const LatticeVector& v) {
    return {s * v[0], s * v[1], s * v[2], s * v[3]};
}

LatticeVector base_point() { return {1, 0, 0, 0}; }

bool is_squarefree(std::int64_t n) {
    if (n < 1) return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

FormSpec make_form(std::int64_t m) {
    if (m < 1 || !is_squarefree(m)) {
        throw InvalidFieldParameter("m must be a positive square-free integer, got " +
                                    std::to_string(m));
    }
    FormSpec form;
    form.m = m;
    form.branch = (m % 4 == 3) ? Branch::B : Branch::A;
    form.gram[0][1] = form.gram[1][0] = -1;
    form.gram[2][2] = 2;
    if (form.branch == Branch::A) {
        form.gram[3][3] = 2 * m;
    } else {
        form.gram[2][3] = form.gram[3][2] = 1;
        form.gram[3][3] = (m + 1) / 2;
    }
    return form;
}

std::array<Integer, 4> dual_coords(const FormSpec& form, const LatticeVector& v) {
    std::array<Integer, 4> out{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (form.gram[i][j] != 0) out[i] += v[j] * static_cast<long>(form.gram[i][j]);
        }
    }
    return out;
}

Integer bilinear(const FormSpec& form, const LatticeVector& u, const LatticeVector& v) {
    const auto gv = dual_coords(form, v);
    return u[0] * gv[0] + u[1] * gv[1] + u[2] * gv[2] + u[3] * gv[3];
}

Integer norm(const FormSpec& form, const LatticeVector& v) { return bilinear(form, v, v); }

bool is_primitive(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& c : v.coords) g = gcd(g, c);
    return g == 1;
}

LatticeVector normalize_primitive(const LatticeVector& v) {
    if (v.is_zero()) throw std::invalid_argument("normalize_primitive: zero vector");
    Integer g = 0;
    for (const auto& c : v.coords) g = gcd(g, c);
    LatticeVector out = v;
    for (auto& c : out.coords) c /= g;
    int s = sign(out[1]);
    if (s == 0) {
        for (const auto& c : out.coords) {
            if (c != 0) {
                s = sign(c);
                break;
            }
        }
    }
    // Orient so that B(v, u0) = -x2 <= 0.
    if (s < 0) {
        for (auto& c : out.coords) c = -c;
    }
    return out;
}

bool crystallographic_ok(const FormSpec& form, const LatticeVector& e) {
    const Integer k = norm(form, e);
    if (k <= 0) throw std::invalid_argument("crystallographic_ok: root norm must be positive");
    for (const auto& d : dual_coords(form, e)) {
        if (mpz_divisible_p(Integer(2 * d).get_mpz_t(), k.get_mpz_t()) == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> allowed_norms(const FormSpec& form) {
    const std::int64_t n = form.branch == Branch::A ? 4 * form.m : 2 * form.m;
    std::vector<std::int64_t> out;
    for (std::int64_t k = 2; k <= n; k += 2) {
        if (n % k == 0) out.push_back(k);
    }
    return out;
}

Root make_root(const FormSpec& form, const LatticeVector& v) {
    Root r;
    r.vec = v;
    r.norm_k = norm(form, v);
    r.weight_sq = make_rational(v[1] * v[1], r.norm_k);
    return r;
}

}  // namespace bianchi
