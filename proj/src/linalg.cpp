#include "dra/linalg.hpp"

namespace dra {

std::vector<std::size_t> rref(RatMatrix &m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        Rat inv = 1 / m[row][col];
        for (auto &x : m[row]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<RatVector> kernel_basis(const RatMatrix &m_in) {
    RatMatrix m = m_in;
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix &m_in, const RatVector &b) {
    if (m_in.empty()) return RatVector{};
    RatMatrix m = m_in;
    std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto pivots = rref(m);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
    RatVector x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

RatMatrix mat_mul(const RatMatrix &a, const RatMatrix &b) {
    std::size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    RatMatrix r(n, RatVector(mcols, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t c = 0; c < mcols; ++c) r[i][c] += a[i][j] * b[j][c];
        }
    return r;
}

RatMatrix mat_identity(std::size_t n) {
    RatMatrix r(n, RatVector(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

RatMatrix mat_scale(const RatMatrix &a, const Rat &c) {
    RatMatrix r = a;
    for (auto &row : r)
        for (auto &x : row) x *= c;
    return r;
}

RatMatrix mat_add(const RatMatrix &a, const RatMatrix &b) {
    RatMatrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

RatMatrix mat_sub(const RatMatrix &a, const RatMatrix &b) {
    return mat_add(a, mat_scale(b, Rat(-1)));
}

RatMatrix mat_pow(const RatMatrix &a, unsigned e) {
    RatMatrix r = mat_identity(a.size());
    for (unsigned i = 0; i < e; ++i) r = mat_mul(r, a);
    return r;
}

bool mat_is_zero(const RatMatrix &a) {
    for (const auto &row : a)
        for (const auto &x : row)
            if (x != 0) return false;
    return true;
}

} // namespace dra
