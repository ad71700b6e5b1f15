#include "bianchi/spinor.hpp"

#include <stdexcept>

namespace bianchi {

std::int64_t squarefree_part(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("squarefree_part: k must be positive");
    std::int64_t out = 1;
    for (std::int64_t p = 2; p * p <= k; ++p) {
        int e = 0;
        while (k % p == 0) {
            k /= p;
            ++e;
        }
        if (e % 2 == 1) out *= p;
    }
    return out * k;
}

Integer squarefree_part(const Integer& k) {
    if (!k.fits_slong_p()) throw std::invalid_argument("squarefree_part: k out of range");
    return Integer(static_cast<long>(squarefree_part(static_cast<std::int64_t>(k.get_si()))));
}

bool reflection_in_bi(std::int64_t m, const Root& root) {
    const Integer s = squarefree_part(root.norm_k);
    return s == 2 || s == squarefree_part(2 * m);
}

CoxeterDiagram mark_filled(const CoxeterDiagram& diagram, std::int64_t m) {
    CoxeterDiagram out = diagram;
    for (std::size_t i = 0; i < out.size(); ++i)
        out.set_filled(i, !reflection_in_bi(m, out.vertex(i).root));
    return out;
}

bool non_bi_subgroup_finite(const CoxeterDiagram& diagram) {
    const auto filled = diagram.filled_vertices();
    if (filled.empty()) return true;
    return classify_subdiagram(diagram, filled).type == SubdiagramType::Elliptic;
}

BiVerdict bi_verdict_from_reflective_hat(const CoxeterDiagram& diagram, std::int64_t m) {
    (void)m;
    if (!has_finite_volume(diagram))
        throw std::invalid_argument("bi_verdict_from_reflective_hat: diagram must have finite volume");
    BiVerdict v;
    if (non_bi_subgroup_finite(diagram)) {
        v.kind = BiVerdictKind::Reflective;
        return v;
    }
    const auto filled = diagram.filled_vertices();
    if (filled.size() == 2 && diagram.edge(filled[0], filled[1]).type == EdgeType::Cusp) {
        v.kind = BiVerdictKind::QuasiReflective;
        v.rank = 1;
        return v;
    }
    if (filled.size() == 4) {
        const auto cls = classify_subdiagram(diagram, filled);
        if (cls.type == SubdiagramType::Parabolic && cls.rank() == 2) {
            v.kind = BiVerdictKind::QuasiReflective;
            v.rank = 2;
            return v;
        }
    }
    v.kind = BiVerdictKind::NotReflective;
    v.unrecognized = true;
    return v;
}

}  // namespace bianchi
