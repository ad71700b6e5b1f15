#include "bianchi/isometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bianchi {

const char* to_string(IsometryType t) {
    switch (t) {
        case IsometryType::Identity: return "Identity";
        case IsometryType::Elliptic: return "Elliptic";
        case IsometryType::Parabolic: return "Parabolic";
        case IsometryType::Loxodromic: return "Loxodromic";
    }
    return "?";
}

namespace {

bool is_zero(const Matrix4& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

Matrix4 subtract(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}

void trim(Polynomial& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; nullopt if the remainder is nonzero.
std::optional<Polynomial> divide_exact(Polynomial p, const Polynomial& d) {
    trim(p);
    const std::size_t dd = d.size() - 1;
    if (p.size() - 1 < dd) return std::nullopt;
    Polynomial q(p.size() - dd, 0);
    for (std::size_t i = p.size(); i-- > dd;) {
        const Integer c = p[i];
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= c * d[j];
    }
    for (const auto& c : p)
        if (c != 0) return std::nullopt;
    return q;
}

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Matrix4 evaluate(const Polynomial& p, const Matrix4& g) {
    // Horner
    Matrix4 acc{};
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = multiply(acc, g);
        for (int d = 0; d < 4; ++d) acc[d][d] += p[i];
    }
    return acc;
}

struct CyclotomicSplit {
    bool all_cyclotomic = false;
    std::vector<int> indices;  // distinct n with Phi_n | charpoly
};

CyclotomicSplit split_cyclotomic(Polynomial p) {
    CyclotomicSplit out;
    for (int n : small_cyclotomic_indices()) {
        const Polynomial phi = cyclotomic(n);
        bool used = false;
        while (auto q = divide_exact(p, phi)) {
            p = *q;
            used = true;
        }
        if (used) out.indices.push_back(n);
    }
    trim(p);
    out.all_cyclotomic = p.size() == 1;
    return out;
}

LatticeVector future_primitive(LatticeVector v) {
    Integer g = 0;
    for (int i = 0; i < 4; ++i) g = gcd(g, v[i]);
    if (g == 0) return v;
    for (int i = 0; i < 4; ++i) v.coords[i] /= g;
    if (v[0] + v[1] < 0)
        for (int i = 0; i < 4; ++i) v.coords[i] = -v[i];
    return v;
}

}  // namespace

const std::vector<int>& small_cyclotomic_indices() {
    static const std::vector<int> idx{1, 2, 3, 4, 5, 6, 8, 10, 12};
    return idx;
}

Polynomial cyclotomic(int n) {
    auto P = [](std::initializer_list<long> c) {
        Polynomial p;
        for (long x : c) p.emplace_back(x);
        return p;
    };
    switch (n) {
        case 1: return P({-1, 1});
        case 2: return P({1, 1});
        case 3: return P({1, 1, 1});
        case 4: return P({1, 0, 1});
        case 5: return P({1, 1, 1, 1, 1});
        case 6: return P({1, -1, 1});
        case 8: return P({1, 0, 0, 0, 1});
        case 10: return P({1, -1, 1, -1, 1});
        case 12: return P({1, 0, -1, 0, 1});
        default: throw std::invalid_argument("cyclotomic: index not supported");
    }
}

bool preserves_form(const Matrix4& g, const FormSpec& form) {
    const Matrix4 G = gram_matrix(form);
    if (multiply(transpose(g), multiply(G, g)) != G) return false;
    const Integer d = determinant(g);
    return d == 1 || d == -1;
}

Polynomial charpoly(const Matrix4& g) {
    // Faddeev-LeVerrier: M_k = g M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(g M_k) / k.
    Polynomial c(5, 0);
    c[4] = 1;
    Matrix4 M{};
    for (int k = 1; k <= 4; ++k) {
        M = multiply(g, M);
        for (int d = 0; d < 4; ++d) M[d][d] += c[4 - k + 1];
        const Matrix4 gm = multiply(g, M);
        Integer tr = 0;
        for (int d = 0; d < 4; ++d) tr += gm[d][d];
        c[4 - k] = -tr / k;
    }
    return c;
}

IsometryType classify(const Matrix4& g, const FormSpec& form) {
    if (!preserves_form(g, form)) throw std::invalid_argument("classify: matrix does not preserve the form");
    if (g == identity4()) return IsometryType::Identity;
    const auto split = split_cyclotomic(charpoly(g));
    if (!split.all_cyclotomic) return IsometryType::Loxodromic;
    Polynomial radical{Integer(1)};
    for (int n : split.indices) radical = poly_multiply(radical, cyclotomic(n));
    return is_zero(evaluate(radical, g)) ? IsometryType::Elliptic : IsometryType::Parabolic;
}

Matrix4 reflection_matrix(const FormSpec& form, const LatticeVector& e) {
    const Integer k = norm(form, e);
    if (k <= 0) throw std::invalid_argument("reflection_matrix: nonpositive norm");
    Matrix4 r;
    for (int j = 0; j < 4; ++j) {
        LatticeVector b;
        for (int i = 0; i < 4; ++i) b.coords[i] = (i == j) ? 1 : 0;
        const Integer num = 2 * bilinear(form, e, b);
        if (num % k != 0) throw std::invalid_argument("reflection_matrix: not crystallographic");
        const Integer s = num / k;
        for (int i = 0; i < 4; ++i) r[i][j] = b[i] - s * e[i];
    }
    return r;
}

Matrix4 power(const Matrix4& g, unsigned n) {
    Matrix4 result = identity4(), base = g;
    while (n > 0) {
        if (n & 1u) result = multiply(result, base);
        base = multiply(base, base);
        n >>= 1u;
    }
    return result;
}

LatticeVector parabolic_fixed_point(const Matrix4& g, const FormSpec& form) {
    if (classify(g, form) != IsometryType::Parabolic)
        throw std::invalid_argument("parabolic_fixed_point: isometry is not parabolic");
    const auto split = split_cyclotomic(charpoly(g));
    unsigned order = 1;
    for (int n : split.indices) order = std::lcm(order, static_cast<unsigned>(n));
    const Matrix4 U = subtract(power(g, order), identity4());
    const Matrix4 U2 = multiply(U, U);
    for (int j = 0; j < 4; ++j) {
        LatticeVector col;
        for (int i = 0; i < 4; ++i) col.coords[i] = U2[i][j];
        if (col.is_zero()) continue;
        LatticeVector q = future_primitive(col);
        if (norm(form, q) != 0 || bianchi::apply(g, q) != q)
            throw std::logic_error("parabolic_fixed_point: inconsistent fixed vector");
        return q;
    }
    throw std::logic_error("parabolic_fixed_point: unipotent part has no rank-3 block");
}

LatticeVector translation_vector(const Matrix4& g, const FormSpec& form, const LatticeVector& q) {
    const auto split = split_cyclotomic(charpoly(g));
    unsigned order = 1;
    for (int n : split.indices) order = std::lcm(order, static_cast<unsigned>(n));
    const Matrix4 N = power(g, order);
    for (int j = 0; j < 4; ++j) {
        LatticeVector w;
        w.coords[j] = 1;
        if (bilinear(form, w, q) == 0) continue;
        return bianchi::apply(N, w) - w;
    }
    throw std::invalid_argument("translation_vector: q is zero");
}

std::vector<IntegralIsometry> find_diagram_symmetry(const std::vector<Root>& roots, const FormSpec& form,
                                                    const Rational& complete_below) {
    const std::size_t n = roots.size();
    // Greedy base of independent roots.
    std::vector<std::size_t> base;
    std::vector<LatticeVector> base_vecs;
    for (std::size_t i = 0; i < n && base.size() < 4; ++i) {
        base_vecs.push_back(roots[i].vec);
        if (rank(base_vecs) == static_cast<int>(base_vecs.size()))
            base.push_back(i);
        else
            base_vecs.pop_back();
    }
    if (base.size() < 4) return {};

    std::vector<std::vector<Integer>> prod(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) prod[i][j] = prod[j][i] = bilinear(form, roots[i].vec, roots[j].vec);

    Matrix4 Bm;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) Bm[i][j] = roots[base[j]].vec[i];
    const Integer det = determinant(Bm);
    const Matrix4 adj = adjugate(Bm);

    std::set<LatticeVector> in_set;
    for (const auto& r : roots) in_set.insert(r.vec);
    std::set<Matrix4> reflections;

    const LatticeVector timelike(1, 1, 0, 0);
    std::set<IntegralIsometry> found;
    std::array<std::size_t, 4> img{};

    auto accept = [&]() {
        Matrix4 F;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) F[i][j] = roots[img[j]].vec[i];
        Matrix4 g = multiply(F, adj);
        for (auto& row : g)
            for (auto& x : row) {
                if (x % det != 0) return;
                x /= det;
            }
        if (g == identity4() || !preserves_form(g, form)) return;
        if (bilinear(form, bianchi::apply(g, timelike), timelike) >= 0) return;
        for (std::size_t r = 0; r < n; ++r) {
            const LatticeVector v = bianchi::apply(g, roots[r].vec);
            if (in_set.count(v)) continue;
            const Root cand{v, roots[r].norm_k, 0};
            if (weight(form, cand) < complete_below) return;
            for (std::size_t s = 0; s < n; ++s)
                if (bilinear(form, v, roots[s].vec) > 0) return;
        }
        if (multiply(g, g) == identity4()) {
            if (reflections.empty())
                for (const auto& r : roots) reflections.insert(reflection_matrix(form, r.vec));
            if (reflections.count(g)) return;
        }
        found.insert(IntegralIsometry{g});
    };

    auto search = [&](auto&& self, std::size_t depth) -> void {
        if (depth == 4) {
            accept();
            return;
        }
        const std::size_t b = base[depth];
        for (std::size_t c = 0; c < n; ++c) {
            if (roots[c].norm_k != roots[b].norm_k) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d)
                ok = img[d] != c && prod[img[d]][c] == prod[base[d]][b];
            if (!ok) continue;
            img[depth] = c;
            self(self, depth + 1);
        }
    };
    search(search, 0);
    return {found.begin(), found.end()};
}

const char* certificate_name(const Certificate& c) {
    struct V {
        const char* operator()(const NoCertificate&) const { return "None"; }
        const char* operator()(const LoxodromicSymmetry&) const { return "LoxodromicSymmetry"; }
        const char* operator()(const CuspBoundViolation&) const { return "CuspBoundViolation"; }
        const char* operator()(const ParabolicRank2&) const { return "ParabolicRank2"; }
        const char* operator()(const ParabolicRank1&) const { return "ParabolicRank1"; }
    };
    return std::visit(V{}, c);
}

Certificate certify(const RootSystem& state, const CoxeterDiagram& diagram, std::int64_t m) {
    if (state.status != RunStatus::BudgetExhausted)
        throw std::invalid_argument("certify: run must have exhausted its budget");
    const FormSpec& form = state.form;
    const auto syms = find_diagram_symmetry(state.roots, form, state.complete_below);

    std::vector<std::pair<IntegralIsometry, LatticeVector>> parabolics;
    for (const auto& g : syms) {
        const auto t = classify(g.mat, form);
        if (t == IsometryType::Loxodromic) return LoxodromicSymmetry{g, state.complete_below};
        if (t == IsometryType::Parabolic) parabolics.emplace_back(g, parabolic_fixed_point(g.mat, form));
    }
    for (std::size_t i = 0; i < parabolics.size(); ++i) {
        const auto& q = parabolics[i].second;
        const LatticeVector ti = translation_vector(parabolics[i].first.mat, form, q);
        for (std::size_t j = i + 1; j < parabolics.size(); ++j) {
            if (parabolics[j].second != q) continue;
            const LatticeVector tj = translation_vector(parabolics[j].first.mat, form, q);
            if (rank(std::vector<LatticeVector>{q, ti, tj}) == 3) return ParabolicRank2{parabolics[i].first, parabolics[j].first, q};
        }
    }
    if (!parabolics.empty()) return ParabolicRank1{parabolics.front().first, parabolics.front().second};

    const auto bound = cusp_bound_ok(diagram, GroupKind::Extended, BoundMode::Reflective, m);
    if (!bound.ok) return CuspBoundViolation{bound.count, bound.bound};
    return NoCertificate{};
}

bool verify_certificate(const Certificate& c, const FormSpec& form) {
    struct V {
        const FormSpec& form;
        bool operator()(const NoCertificate&) const { return false; }
        bool operator()(const LoxodromicSymmetry& l) const {
            return preserves_form(l.g.mat, form) && classify(l.g.mat, form) == IsometryType::Loxodromic;
        }
        bool operator()(const CuspBoundViolation& v) const { return v.count > v.bound; }
        bool operator()(const ParabolicRank2& p) const {
            for (const auto* g : {&p.g1, &p.g2}) {
                if (!preserves_form(g->mat, form) || classify(g->mat, form) != IsometryType::Parabolic)
                    return false;
                if (parabolic_fixed_point(g->mat, form) != p.q) return false;
            }
            return rank(std::vector<LatticeVector>{p.q, translation_vector(p.g1.mat, form, p.q),
                                                   translation_vector(p.g2.mat, form, p.q)}) == 3;
        }
        bool operator()(const ParabolicRank1& p) const {
            return preserves_form(p.g1.mat, form) && classify(p.g1.mat, form) == IsometryType::Parabolic &&
                   parabolic_fixed_point(p.g1.mat, form) == p.q;
        }
    };
    return std::visit(V{form}, c);
}

}  // namespace bianchi
