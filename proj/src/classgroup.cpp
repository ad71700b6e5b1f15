#include "bianchi/classgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bianchi {

bool BQF::is_reduced() const {
    const std::int64_t ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
}

std::int64_t ClassGroupStructure::two_torsion_order() const {
    std::int64_t order = 1;
    for (std::int64_t d : invariant_factors)
        if (d % 2 == 0) order *= 2;
    return order;
}

std::int64_t field_discriminant(std::int64_t m) {
    if (m < 1 || !is_squarefree(m))
        throw InvalidFieldParameter("m must be a positive square-free integer");
    return (m % 4 == 3) ? -m : -4 * m;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// b into (-a, a]
void normalize(BQF& f) {
    const std::int64_t two_a = 2 * f.a;
    const std::int64_t k = floor_div(f.a - f.b, two_a);
    // b' = b + 2 a k, c' = a k^2 + b k + c
    const std::int64_t b = f.b + two_a * k;
    f.c = f.a * k * k + f.b * k + f.c;
    f.b = b;
}

// Extended gcd: returns g = gcd(a, b) >= 0 with x a + y b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

}  // namespace

BQF reduce(BQF f) {
    if (f.a <= 0 || f.discriminant() >= 0)
        throw std::invalid_argument("reduce: expected a positive definite form");
    normalize(f);
    while (f.a > f.c || (f.a == f.c && f.b < 0)) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize(f);
    }
    return f;
}

BQF principal_form(std::int64_t D) {
    const std::int64_t b = (D % 2 == 0) ? 0 : 1;
    return {1, b, (b * b - D) / 4};
}

std::vector<BQF> reduced_forms(std::int64_t D) {
    if (D >= 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
        throw std::invalid_argument("reduced_forms: D must be negative and 0 or 1 mod 4");
    std::vector<BQF> out;
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            const BQF f{a, b, num / (4 * a)};
            if (!f.is_reduced()) continue;
            if (std::gcd(std::gcd(f.a, f.b), f.c) != 1) continue;
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BQF compose(const BQF& f, const BQF& g) {
    const std::int64_t D = f.discriminant();
    if (g.discriminant() != D) throw std::invalid_argument("compose: discriminant mismatch");
    // Dirichlet composition through e = gcd(a1, a2, (b1 + b2)/2).
    const std::int64_t beta = (f.b + g.b) / 2;
    std::int64_t x1, y1;
    const std::int64_t d1 = ext_gcd(f.a, g.a, x1, y1);
    std::int64_t x2, y2;
    const std::int64_t e = ext_gcd(d1, beta, x2, y2);
    // u a1 + v a2 + w beta = e
    const __int128 u = static_cast<__int128>(x2) * x1;
    const __int128 v = static_cast<__int128>(x2) * y1;
    const __int128 w = y2;
    const __int128 a3 = static_cast<__int128>(f.a) * g.a / (static_cast<__int128>(e) * e);
    __int128 b3 = (u * f.a * g.b + v * g.a * f.b + w * ((static_cast<__int128>(f.b) * g.b + D) / 2)) / e;
    const __int128 two_a3 = 2 * a3;
    b3 %= two_a3;
    if (b3 < 0) b3 += two_a3;
    if (b3 > a3) b3 -= two_a3;
    const __int128 c3 = (b3 * b3 - D) / (4 * a3);
    return reduce({static_cast<std::int64_t>(a3), static_cast<std::int64_t>(b3),
                   static_cast<std::int64_t>(c3)});
}

ClassGroupStructure group_structure(std::int64_t D) {
    const auto forms = reduced_forms(D);
    ClassGroupStructure s;
    s.D = D;
    s.h = static_cast<std::int64_t>(forms.size());
    const BQF one = principal_form(D);

    std::vector<std::int64_t> orders;
    orders.reserve(forms.size());
    for (const auto& f : forms) {
        std::int64_t n = 1;
        BQF p = f;
        while (!(p == one)) {
            p = compose(p, f);
            ++n;
        }
        orders.push_back(n);
    }

    // For each prime p | h, the number of cyclic factors of order >= p^j is
    // log_p(|G[p^j]| / |G[p^(j-1)]|).
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> primary;  // p -> exponents desc
    std::int64_t rest = s.h;
    for (std::int64_t p = 2; rest > 1; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        std::vector<std::int64_t> at_least;  // r_1, r_2, ...
        std::int64_t prev = 1, pj = 1;
        for (;;) {
            pj *= p;
            const auto cnt = std::count_if(orders.begin(), orders.end(),
                                           [&](std::int64_t o) { return pj % o == 0; });
            std::int64_t ratio = cnt / prev, r = 0;
            while (ratio > 1) {
                ratio /= p;
                ++r;
            }
            if (r == 0) break;
            at_least.push_back(r);
            prev = cnt;
        }
        std::vector<std::int64_t> exps;  // exponent of each cyclic p-factor
        for (std::size_t j = 0; j < at_least.size(); ++j) {
            const std::int64_t exact = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
            for (std::int64_t t = 0; t < exact; ++t) exps.push_back(static_cast<std::int64_t>(j + 1));
        }
        std::sort(exps.rbegin(), exps.rend());
        primary.emplace_back(p, exps);
        for (std::int64_t e : exps) {
            std::int64_t q = 1;
            for (std::int64_t t = 0; t < e; ++t) q *= p;
            s.elementary_divisors.push_back(q);
        }
    }
    std::sort(s.elementary_divisors.begin(), s.elementary_divisors.end());

    std::size_t count = 0;
    for (const auto& [p, exps] : primary) count = std::max(count, exps.size());
    std::vector<std::int64_t> factors(count, 1);  // largest first
    for (const auto& [p, exps] : primary) {
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (std::int64_t t = 0; t < exps[i]; ++t) factors[i] *= p;
    }
    std::reverse(factors.begin(), factors.end());
    s.invariant_factors = factors;
    return s;
}

std::int64_t two_part_order(std::int64_t m) {
    if (m < 1 || !is_squarefree(m))
        throw InvalidFieldParameter("m must be a positive square-free integer");
    int t = 0;
    std::int64_t rest = m;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            ++t;
            rest /= p;
        }
    }
    if (rest > 1) ++t;
    const int e = (m % 4 == 1) ? t : t - 1;
    return e <= 0 ? 1 : (std::int64_t{1} << e);
}

bool passes_filter(const ClassGroupStructure& s, int filter_case) {
    const auto& ed = s.elementary_divisors;
    auto count_of = [&](std::int64_t v) { return std::count(ed.begin(), ed.end(), v); };
    auto only = [&](std::initializer_list<std::int64_t> allowed) {
        return std::all_of(ed.begin(), ed.end(), [&](std::int64_t d) {
            return std::find(allowed.begin(), allowed.end(), d) != allowed.end();
        });
    };
    switch (filter_case) {
        case 1: return only({2});
        case 2: return only({2, 4});
        case 3: return only({2, 3, 4}) && count_of(3) + count_of(4) <= 1;
        case 4: return only({2, 3, 4}) && count_of(3) <= 1;
        default: throw std::invalid_argument("passes_filter: case must be 1..4");
    }
}

CuspBound cusp_bound_ok(const CoxeterDiagram& diagram, GroupKind group, BoundMode mode,
                        std::int64_t m, std::optional<std::size_t> vertex) {
    const std::int64_t h = group_structure(field_discriminant(m)).h;
    const std::int64_t h2 = two_part_order(m);
    CuspBound res;
    if (mode == BoundMode::Reflective) {
        res.count = static_cast<std::int64_t>(count_cusps(diagram));
        res.bound = group == GroupKind::Bianchi ? 12 * h : 12 * h * h2;
    } else {
        if (!vertex || *vertex >= diagram.size() || diagram.vertex(*vertex).root.vec[1] == 0) {
            throw std::invalid_argument("cusp_bound_ok: quasi mode needs a vertex whose mirror misses u0");
        }
        res.count = static_cast<std::int64_t>(cusp_pairs_at_vertex(diagram, *vertex));
        res.bound = group == GroupKind::Bianchi ? 12 * (h - 1) : 12 * h2 * (h - 1);
    }
    res.ok = res.count <= res.bound;
    return res;
}

}  // namespace bianchi
