#include "bianchi/golden.hpp"

namespace bianchi::golden {

namespace {

std::vector<LatticeVector> vectors(std::initializer_list<std::array<long, 4>> rows) {
    std::vector<LatticeVector> out;
    for (const auto& r : rows) out.emplace_back(r[0], r[1], r[2], r[3]);
    return out;
}

}  // namespace

const std::vector<LatticeVector>& m33_vectors() {
    static const auto v = vectors({{0, 0, -1, 0},   {1, 0, 1, 0},     {0, 0, 0, -1},  {33, 0, 0, 1},
                                   {-1, 1, 0, 0},   {16, 2, 1, 1},    {6, 6, 3, 1},   {8, 4, 1, 1},
                                   {11, 3, 1, 1},   {11, 11, 0, 2},   {99, 33, 0, 10}, {121, 22, 0, 9},
                                   {90, 18, 3, 7},  {37, 8, 0, 3},    {264, 66, 0, 23}});
    return v;
}

const std::vector<LatticeVector>& m17_vectors() {
    static const auto v = vectors({{0, 0, -1, 0},    {1, 0, 1, 0},     {0, 0, 0, -1},   {17, 0, 0, 1},
                                   {-1, 1, 0, 0},    {8, 2, 1, 1},     {4, 4, 1, 1},    {68, 34, 17, 11},
                                   {19, 8, 0, 3},    {17, 9, 1, 3},    {136, 68, 17, 23}, {85, 51, 0, 16},
                                   {204, 102, 0, 35}});
    return v;
}

const std::vector<LatticeVector>& m21_vectors() {
    static const auto v = vectors({{0, 0, -1, 0},  {1, 0, 1, 0},    {0, 0, 0, -1},  {21, 0, 0, 1},
                                   {-1, 1, 0, 0},  {10, 2, 1, 1},   {6, 3, 0, 1},   {6, 4, 2, 1},
                                   {42, 42, 21, 8}, {14, 14, 3, 3}, {63, 63, 21, 13}});
    return v;
}

const std::vector<CompletionRow>& m33_completions() {
    static const std::vector<CompletionRow> rows{
        {1, 3, {{2, 4}, "2xA~1"}, {{5}, "3xA1"}},
        {1, 4, {{2, 3}, "2xA~1"}, {{6}, "A1+B2"}},
        {1, 5, {{3}, "3xA1"}, {{10}, "3xA1"}},
        {1, 8, {{10}, "A1+B2"}, {{11}, "A1+B2"}},
        {1, 10, {{5}, "3xA1"}, {{8}, "A1+B2"}},
        {2, 3, {{1, 4}, "2xA~1"}, {{5}, "A1+A2"}},
        {2, 4, {{1, 3}, "2xA~1"}, {{6}, "3xA1"}},
        {2, 5, {{3}, "A1+A2"}, {{7}, "A1+A2"}},
        {2, 6, {{4}, "3xA1"}, {{9}, "B3"}},
        {2, 7, {{5}, "A1+A2"}, {{8}, "A1+B2"}},
        {2, 8, {{7}, "A1+B2"}, {{9}, "B3"}},
        {2, 9, {{6}, "B3"}, {{8}, "B3"}},
        {3, 5, {{1}, "3xA1"}, {{2}, "A1+A2"}},
        {4, 6, {{1}, "A1+B2"}, {{2}, "3xA1"}},
        {5, 7, {{2}, "A1+A2"}, {{10}, "3xA1"}},
        {5, 10, {{1}, "3xA1"}, {{7}, "3xA1"}},
        {7, 8, {{2}, "A1+B2"}, {{10}, "3xA1"}},
        {7, 10, {{5}, "3xA1"}, {{8}, "3xA1"}},
        {8, 10, {{1}, "A1+B2"}, {{7}, "3xA1"}},
    };
    return rows;
}

const Matrix4& m35_loxodromic() {
    static const Matrix4 g = [] {
        const long rows[4][4] = {{100, 429, -10, -1230},
                                 {99, 421, -9, -1212},
                                 {30, 129, -2, -369},
                                 {30, 128, -3, -368}};
        Matrix4 out;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out[i][j] = rows[i][j];
        return out;
    }();
    return g;
}

const std::vector<FilledSet>& filled_sets() {
    static const std::vector<FilledSet> sets{
        {5, 6, {6}},
        {6, 0, {6}},
        {7, 0, {}},
        {10, 9, {6}},
        {11, 0, {}},
        {13, 10, {6}},
        {14, 9, {6, 7, 8, 9}},
        {15, 0, {}},
        {17, 13, {6, 7, 8, 11}},
        {19, 0, {}},
        {21, 11, {6, 7, 10}},
        {30, 11, {6, 7, 8, 9, 10, 11}},
        {33, 15, {6, 7, 8, 10, 12, 13}},
        {39, 10, {7, 8, 9, 10}},
    };
    return sets;
}

const std::vector<std::int64_t>& hat_reflective() {
    static const std::vector<std::int64_t> v{1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 30, 33, 39};
    return v;
}

const std::vector<std::int64_t>& bi_reflective() {
    static const std::vector<std::int64_t> v{1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 19};
    return v;
}

const std::vector<std::int64_t>& bi_quasi_rank2() {
    static const std::vector<std::int64_t> v{14, 17, 23, 31, 39};
    return v;
}

const std::vector<std::int64_t>& hat_quasi_rank2() {
    static const std::vector<std::int64_t> v{23, 31};
    return v;
}

}  // namespace bianchi::golden
