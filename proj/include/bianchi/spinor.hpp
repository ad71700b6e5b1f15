#pragma once

// Membership of reflections in Bi(m) via the square class of the root norm,
// and the Bi-level verdict read off a reflective extended-group diagram.

#include <cstdint>

#include "bianchi/coxeter.hpp"

namespace bianchi {

/// k divided by its largest square divisor.
std::int64_t squarefree_part(std::int64_t k);
Integer squarefree_part(const Integer& k);

/// Bi(m) contains exactly the 2- and 2m-reflections (up to squares).
bool reflection_in_bi(std::int64_t m, const Root& root);

/// Copy of the diagram with filled = not reflection_in_bi on every vertex.
CoxeterDiagram mark_filled(const CoxeterDiagram& diagram, std::int64_t m);

/// The filled reflections generate a finite group iff their induced
/// subdiagram is elliptic (or empty).
bool non_bi_subgroup_finite(const CoxeterDiagram& diagram);

enum class BiVerdictKind { Reflective, QuasiReflective, NotReflective };

struct BiVerdict {
    BiVerdictKind kind = BiVerdictKind::NotReflective;
    int rank = 0;                 // 1 or 2 for QuasiReflective
    bool unrecognized = false;    // filled set matches none of the known shapes
};

/// Requires a finite-volume diagram with filled flags set.
BiVerdict bi_verdict_from_reflective_hat(const CoxeterDiagram& diagram, std::int64_t m);

}  // namespace bianchi
