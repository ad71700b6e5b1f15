#include "bianchi/linalg.hpp"

#include <utility>

namespace bianchi {

Matrix4 identity4() {
    Matrix4 id;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) id[i][j] = (i == j) ? 1 : 0;
    return id;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
    Matrix4 c;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Integer s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    }
    return c;
}

Matrix4 transpose(const Matrix4& a) {
    Matrix4 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = a[j][i];
    return t;
}

LatticeVector apply(const Matrix4& g, const LatticeVector& v) {
    LatticeVector out;
    for (int i = 0; i < 4; ++i) {
        Integer s = 0;
        for (int j = 0; j < 4; ++j) s += g[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

namespace {

Integer det3(const Matrix4& a, const std::array<int, 3>& rows, const std::array<int, 3>& cols) {
    auto at = [&](int i, int j) -> const Integer& { return a[rows[i]][cols[j]]; };
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

std::array<int, 3> others(int skip) {
    std::array<int, 3> out{};
    int n = 0;
    for (int i = 0; i < 4; ++i)
        if (i != skip) out[n++] = i;
    return out;
}

}  // namespace

Matrix4 adjugate(const Matrix4& a) {
    Matrix4 adj;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Integer minor = det3(a, others(j), others(i));
            adj[i][j] = ((i + j) % 2 == 0) ? minor : Integer(-minor);
        }
    }
    return adj;
}

Integer determinant(const Matrix4& a) {
    Integer d = 0;
    for (int j = 0; j < 4; ++j) {
        Integer minor = det3(a, others(0), others(j));
        if (j % 2 == 0) d += a[0][j] * minor;
        else d -= a[0][j] * minor;
    }
    return d;
}

Matrix4 gram_matrix(const FormSpec& form) {
    Matrix4 g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = static_cast<long>(form.gram[i][j]);
    return g;
}

std::vector<LatticeVector> nullspace(const std::vector<std::array<Integer, 4>>& rows) {
    // Fraction-free row echelon form.
    std::vector<std::array<Integer, 4>> m = rows;
    std::array<int, 4> pivot_row{-1, -1, -1, -1};
    std::size_t r = 0;
    for (int col = 0; col < 4 && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            Integer f = m[i][col], p = m[r][col];
            for (int j = 0; j < 4; ++j) m[i][j] = m[i][j] * p - m[r][j] * f;
            Integer g = 0;
            for (int j = 0; j < 4; ++j) g = gcd(g, m[i][j]);
            if (g > 1)
                for (int j = 0; j < 4; ++j) m[i][j] /= g;
        }
        pivot_row[col] = static_cast<int>(r);
        ++r;
    }
    std::vector<LatticeVector> basis;
    for (int free = 0; free < 4; ++free) {
        if (pivot_row[free] >= 0) continue;
        // Free variable set to the lcm of the pivots.
        Integer scale = 1;
        for (int col = 0; col < 4; ++col) {
            if (pivot_row[col] < 0) continue;
            const Integer& p = m[pivot_row[col]][col];
            Integer l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), p.get_mpz_t());
            scale = l;
        }
        LatticeVector v;
        v[free] = scale;
        for (int col = 0; col < 4; ++col) {
            if (pivot_row[col] < 0) continue;
            const auto& row = m[pivot_row[col]];
            // row[col] * x_col + row[free] * scale = 0 (other free vars are 0)
            v[col] = -(row[free] * scale) / row[col];
        }
        Integer g = 0;
        for (const auto& c : v.coords) g = gcd(g, c);
        for (auto& c : v.coords) c /= g;
        basis.push_back(v);
    }
    return basis;
}

int rank(const std::vector<LatticeVector>& vectors) {
    std::vector<std::array<Integer, 4>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.push_back(v.coords);
    return 4 - static_cast<int>(nullspace(rows).size());
}

}  // namespace bianchi
