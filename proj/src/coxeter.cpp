#include "bianchi/coxeter.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bianchi {

std::string to_string(const EdgeKind& e) {
    switch (e.type) {
        case EdgeType::RightAngle: return "right";
        case EdgeType::Angle: return "angle" + std::to_string(e.n);
        case EdgeType::Cusp: return "cusp";
        case EdgeType::Divergent: return "divergent";
    }
    return "?";
}

EdgeKind gram_entry(const FormSpec& form, const Root& a, const Root& b) {
    const Integer p = bilinear(form, a.vec, b.vec);
    if (p > 0) {
        throw std::invalid_argument("gram_entry: roots have positive inner product");
    }
    const Integer num = 4 * p * p;
    const Integer den = a.norm_k * b.norm_k;
    EdgeKind e;
    if (num == 0) return e;
    if (num > 4 * den) {
        e.type = EdgeType::Divergent;
        e.distance_sq = make_rational(p * p, den);
        return e;
    }
    if (num == 4 * den) {
        e.type = EdgeType::Cusp;
        e.n = 0;
        return e;
    }
    for (int q = 1; q <= 3; ++q) {
        if (num == q * den) {
            e.type = EdgeType::Angle;
            e.n = q == 1 ? 3 : q == 2 ? 4 : 6;
            return e;
        }
    }
    std::ostringstream msg;
    msg << "non-crystallographic angle between " << a.vec << " and " << b.vec;
    throw NonCrystallographicAngle(msg.str());
}

void CoxeterDiagram::add_vertex(const Root& root) {
    const std::size_t n = vertices_.size();
    for (auto& row : edges_) row.emplace_back();
    edges_.emplace_back(n + 1);
    cusp_adj_.emplace_back();
    vertices_.push_back({root, false});
    for (std::size_t i = 0; i < n; ++i) {
        EdgeKind e = gram_entry(form_, vertices_[i].root, root);
        if (e.type == EdgeType::Cusp) {
            cusp_adj_[i].push_back(n);
            cusp_adj_[n].push_back(i);
        }
        edges_[i][n] = e;
        edges_[n][i] = std::move(e);
    }
}

std::vector<std::size_t> CoxeterDiagram::filled_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].filled) out.push_back(i);
    return out;
}

CoxeterDiagram build_diagram(const FormSpec& form, const std::vector<Root>& roots) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i].vec == roots[j].vec)
                throw std::invalid_argument("build_diagram: duplicate root");
    CoxeterDiagram d(form);
    for (const auto& r : roots) d.add_vertex(r);
    return d;
}

const char* to_string(Component c) {
    switch (c) {
        case Component::A1: return "A1";
        case Component::A2: return "A2";
        case Component::A3: return "A3";
        case Component::B2: return "B2";
        case Component::B3: return "B3";
        case Component::G2: return "G2";
        case Component::AffineA1: return "A~1";
        case Component::AffineA2: return "A~2";
        case Component::AffineC2: return "C~2";
        case Component::AffineG2: return "G~2";
    }
    return "?";
}

bool is_affine(Component c) {
    return c == Component::AffineA1 || c == Component::AffineA2 || c == Component::AffineC2 ||
           c == Component::AffineG2;
}

int SubdiagramClass::rank() const {
    switch (type) {
        case SubdiagramType::Elliptic: return static_cast<int>(vertex_count);
        case SubdiagramType::Parabolic:
            return static_cast<int>(vertex_count) - static_cast<int>(components.size());
        case SubdiagramType::Indefinite: return -1;
    }
    return -1;
}

std::string to_string(const SubdiagramClass& c) {
    if (c.type == SubdiagramType::Indefinite) return "indefinite";
    std::string out;
    for (std::size_t i = 0; i < c.components.size();) {
        std::size_t j = i;
        while (j < c.components.size() && c.components[j] == c.components[i]) ++j;
        if (!out.empty()) out += '+';
        if (j - i > 1) out += std::to_string(j - i) + "x";
        out += to_string(c.components[i]);
        i = j;
    }
    return out;
}

namespace {

enum class Kind { None, Elliptic, Affine };

struct Classified {
    bool ok;
    Component comp;
};

// One connected component given as its internal edges (non-right).
Classified classify_connected(std::size_t size, const std::vector<const EdgeKind*>& edges) {
    if (size == 1) return {true, Component::A1};
    if (size == 2) {
        const EdgeKind& e = *edges.front();
        if (e.type == EdgeType::Cusp) return {true, Component::AffineA1};
        if (e.n == 3) return {true, Component::A2};
        if (e.n == 4) return {true, Component::B2};
        return {true, Component::G2};
    }
    if (size != 3) return {false, Component::A1};
    for (const auto* e : edges)
        if (e->type != EdgeType::Angle) return {false, Component::A1};
    if (edges.size() == 3) {
        const bool all3 = std::all_of(edges.begin(), edges.end(),
                                      [](const EdgeKind* e) { return e->n == 3; });
        return {all3, Component::AffineA2};
    }
    int lo = std::min(edges[0]->n, edges[1]->n), hi = std::max(edges[0]->n, edges[1]->n);
    if (lo == 3 && hi == 3) return {true, Component::A3};
    if (lo == 3 && hi == 4) return {true, Component::B3};
    if (lo == 4 && hi == 4) return {true, Component::AffineC2};
    if (lo == 3 && hi == 6) return {true, Component::AffineG2};
    return {false, Component::A1};
}

SubdiagramClass classify_impl(const CoxeterDiagram& d, std::span<const std::size_t> vs) {
    const std::size_t n = vs.size();
    SubdiagramClass out;
    out.vertex_count = n;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const EdgeKind& e = d.edge(vs[i], vs[j]);
            if (e.type == EdgeType::Divergent) return out;
            if (e.type != EdgeType::RightAngle) parent[find(i)] = find(j);
        }
    }
    bool elliptic = false, affine = false;
    for (std::size_t root = 0; root < n; ++root) {
        if (find(root) != root) continue;
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (find(i) == root) members.push_back(i);
        std::vector<const EdgeKind*> edges;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const EdgeKind& e = d.edge(vs[members[i]], vs[members[j]]);
                if (e.type != EdgeType::RightAngle) edges.push_back(&e);
            }
        const Classified c = classify_connected(members.size(), edges);
        if (!c.ok) {
            out.components.clear();
            return out;
        }
        (is_affine(c.comp) ? affine : elliptic) = true;
        out.components.push_back(c.comp);
    }
    if (elliptic && affine) {
        out.components.clear();
        return out;
    }
    std::sort(out.components.begin(), out.components.end());
    out.type = affine ? SubdiagramType::Parabolic : SubdiagramType::Elliptic;
    return out;
}

bool is_completion(const SubdiagramClass& c) {
    return (c.type == SubdiagramType::Elliptic && c.rank() == 3) ||
           (c.type == SubdiagramType::Parabolic && c.rank() == 2);
}

// Counts completions of the elliptic pair {a, b}; stops once `limit` is exceeded.
std::size_t count_completions(const CoxeterDiagram& d, std::size_t a, std::size_t b,
                              std::size_t limit, bool* all_elliptic) {
    std::size_t count = 0;
    bool elliptic_only = true;
    const std::size_t n = d.size();
    for (std::size_t v = 0; v < n && count <= limit; ++v) {
        if (v == a || v == b) continue;
        const EdgeKind& ea = d.edge(a, v);
        const EdgeKind& eb = d.edge(b, v);
        if (ea.type == EdgeType::Divergent || eb.type == EdgeType::Divergent) continue;
        if (ea.type == EdgeType::Cusp || eb.type == EdgeType::Cusp) continue;
        const std::array<std::size_t, 3> s{a, b, v};
        const SubdiagramClass c = classify_impl(d, s);
        if (is_completion(c)) {
            ++count;
            if (c.type != SubdiagramType::Elliptic) elliptic_only = false;
        }
    }
    if (d.edge(a, b).type == EdgeType::RightAngle) {
        for (std::size_t u : d.cusp_neighbours(a)) {
            if (count > limit) break;
            if (u == b || d.edge(u, b).type != EdgeType::RightAngle) continue;
            for (std::size_t v : d.cusp_neighbours(b)) {
                if (v == a || v == u) continue;
                if (d.edge(v, a).type != EdgeType::RightAngle) continue;
                if (d.edge(u, v).type != EdgeType::RightAngle) continue;
                ++count;
                elliptic_only = false;
            }
        }
    }
    if (all_elliptic) *all_elliptic = elliptic_only;
    return count;
}

}  // namespace

SubdiagramClass classify_subdiagram(const CoxeterDiagram& diagram,
                                    std::span<const std::size_t> vertices) {
    if (vertices.empty()) throw std::invalid_argument("classify_subdiagram: empty vertex set");
    return classify_impl(diagram, vertices);
}

std::vector<Completion> completions(const CoxeterDiagram& d, std::size_t a, std::size_t b) {
    const std::array<std::size_t, 2> pair{a, b};
    const SubdiagramClass base = classify_impl(d, pair);
    if (base.type != SubdiagramType::Elliptic || base.rank() != 2) {
        throw std::invalid_argument("completions: not a rank-2 elliptic subdiagram");
    }
    std::vector<Completion> out;
    const std::size_t n = d.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (v == a || v == b) continue;
        const std::array<std::size_t, 3> s{a, b, v};
        SubdiagramClass c = classify_impl(d, s);
        if (is_completion(c)) out.push_back({{v}, std::move(c)});
    }
    auto single_works = [&](std::size_t v) {
        return std::any_of(out.begin(), out.end(),
                           [&](const Completion& c) { return c.added.front() == v; });
    };
    for (std::size_t u = 0; u < n; ++u) {
        if (u == a || u == b || single_works(u)) continue;
        for (std::size_t v = u + 1; v < n; ++v) {
            if (v == a || v == b || single_works(v)) continue;
            const std::array<std::size_t, 4> s{a, b, u, v};
            SubdiagramClass c = classify_impl(d, s);
            if (c.type == SubdiagramType::Parabolic && c.rank() == 2)
                out.push_back({{u, v}, std::move(c)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Completion& x, const Completion& y) { return x.added < y.added; });
    return out;
}

FiniteVolumeResult finite_volume(const CoxeterDiagram& d) {
    FiniteVolumeResult res;
    bool ok = true, compact = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (!d.edge(i, j).is_elliptic_pair()) continue;
            bool all_elliptic = true;
            const std::size_t c = count_completions(d, i, j, d.size() * d.size(), &all_elliptic);
            res.witnesses.push_back({i, j, c, all_elliptic});
            if (c != 2) ok = false;
            if (!all_elliptic) compact = false;
        }
    }
    res.finite_volume = ok && !res.witnesses.empty();
    res.compact = res.finite_volume && compact;
    return res;
}

bool has_finite_volume(const CoxeterDiagram& d) {
    bool any = false;
    for (std::size_t j = d.size(); j-- > 0;) {
        for (std::size_t i = j; i-- > 0;) {
            if (!d.edge(i, j).is_elliptic_pair()) continue;
            any = true;
            if (count_completions(d, i, j, 2, nullptr) != 2) return false;
        }
    }
    return any;
}

std::vector<std::vector<std::size_t>> parabolic_rank2_subdiagrams(const CoxeterDiagram& d) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t n = d.size();
    // Connected triples (A~2, C~2, G~2): paths a - b - c through some centre b.
    std::set<std::array<std::size_t, 3>> seen;
    for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::size_t> nb;
        for (std::size_t v = 0; v < n; ++v)
            if (v != b && d.edge(b, v).type == EdgeType::Angle) nb.push_back(v);
        for (std::size_t x = 0; x < nb.size(); ++x) {
            for (std::size_t y = x + 1; y < nb.size(); ++y) {
                std::array<std::size_t, 3> s{nb[x], b, nb[y]};
                std::sort(s.begin(), s.end());
                if (!seen.insert(s).second) continue;
                const SubdiagramClass c = classify_impl(d, s);
                if (c.type == SubdiagramType::Parabolic && c.rank() == 2)
                    out.push_back({s.begin(), s.end()});
            }
        }
    }
    // Two orthogonal cusp pairs.
    std::vector<std::pair<std::size_t, std::size_t>> cusps;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : d.cusp_neighbours(i))
            if (i < j) cusps.emplace_back(i, j);
    for (std::size_t x = 0; x < cusps.size(); ++x) {
        for (std::size_t y = x + 1; y < cusps.size(); ++y) {
            const auto [a, b] = cusps[x];
            const auto [c, e] = cusps[y];
            if (a == c || a == e || b == c || b == e) continue;
            if (d.edge(a, c).type != EdgeType::RightAngle || d.edge(a, e).type != EdgeType::RightAngle ||
                d.edge(b, c).type != EdgeType::RightAngle || d.edge(b, e).type != EdgeType::RightAngle)
                continue;
            std::vector<std::size_t> s{a, b, c, e};
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LatticeVector isotropic_kernel(const CoxeterDiagram& d, std::span<const std::size_t> vertices) {
    std::vector<std::array<Integer, 4>> rows;
    for (std::size_t v : vertices) rows.push_back(dual_coords(d.form(), d.vertex(v).root.vec));
    auto basis = nullspace(rows);
    if (basis.size() != 1) throw std::logic_error("isotropic_kernel: kernel is not a line");
    LatticeVector q = basis.front();
    if (norm(d.form(), q) != 0) throw std::logic_error("isotropic_kernel: kernel is not isotropic");
    if (q[0] + q[1] < 0) q = Integer(-1) * q;
    return q;
}

std::vector<LatticeVector> cusp_points(const CoxeterDiagram& d) {
    std::set<LatticeVector> points;
    for (const auto& s : parabolic_rank2_subdiagrams(d)) points.insert(isotropic_kernel(d, s));
    return {points.begin(), points.end()};
}

std::size_t count_cusps(const CoxeterDiagram& d) { return cusp_points(d).size(); }

std::size_t cusp_pairs_at_vertex(const CoxeterDiagram& d, std::size_t v) {
    return d.cusp_neighbours(v).size();
}

std::string export_dot(const CoxeterDiagram& d) {
    std::ostringstream os;
    os << "graph coxeter {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        os << "  " << i + 1;
        if (d.vertex(i).filled) os << " [style=filled, fillcolor=black, fontcolor=white]";
        os << ";\n";
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const EdgeKind& e = d.edge(i, j);
            if (e.type == EdgeType::RightAngle) continue;
            os << "  " << i + 1 << " -- " << j + 1;
            switch (e.type) {
                case EdgeType::Cusp: os << " [style=bold]"; break;
                case EdgeType::Divergent: os << " [style=dashed]"; break;
                case EdgeType::Angle:
                    if (e.n != 3) os << " [label=\"" << e.n << "\"]";
                    break;
                case EdgeType::RightAngle: break;
            }
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace bianchi
