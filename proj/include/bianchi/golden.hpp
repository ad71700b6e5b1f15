#pragma once

// Reference data transcribed for regression checks. Vertex labels are 1-based,
// in the order the roots are accepted.

#include <cstdint>
#include <string>
#include <vector>

#include "bianchi/linalg.hpp"

namespace bianchi::golden {

struct CompletionEntry {
    std::vector<std::size_t> added;
    std::string type;  // as rendered by to_string(SubdiagramClass)
};

struct CompletionRow {
    std::size_t a;
    std::size_t b;
    CompletionEntry first;
    CompletionEntry second;
};

struct FilledSet {
    std::int64_t m;
    std::size_t vertex_count;  // 0 when not recorded
    std::vector<std::size_t> filled;
};

const std::vector<LatticeVector>& m33_vectors();
const std::vector<LatticeVector>& m17_vectors();
const std::vector<LatticeVector>& m21_vectors();
const std::vector<CompletionRow>& m33_completions();

/// Loxodromic symmetry of the m = 35 partial diagram.
const Matrix4& m35_loxodromic();

/// Filled vertices of the reflective diagrams.
const std::vector<FilledSet>& filled_sets();

const std::vector<std::int64_t>& hat_reflective();
const std::vector<std::int64_t>& bi_reflective();
const std::vector<std::int64_t>& bi_quasi_rank2();
const std::vector<std::int64_t>& hat_quasi_rank2();

}  // namespace bianchi::golden
