#pragma once

#include <stdexcept>
#include <vector>

namespace mpqg {

/// Dense matrices over an exact field scalar (Rat or FieldElem): the scalar
/// must be constructible from long, support +,-,*,/ and ==.
template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
Mat<T> mat_zero(size_t r, size_t c) {
    return Mat<T>(r, std::vector<T>(c, T(0)));
}

template <class T>
Mat<T> mat_identity(size_t n) {
    Mat<T> m = mat_zero<T>(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <class T>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] + b[i][j];
    return out;
}

template <class T>
Mat<T> mat_sub(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] - b[i][j];
    return out;
}

template <class T>
Mat<T> mat_scale(const Mat<T>& a, const T& c) {
    Mat<T> out = a;
    for (auto& row : out)
        for (auto& x : row) x = x * c;
    return out;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
    Mat<T> out = mat_zero<T>(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == T(0)) continue;
            for (size_t j = 0; j < c; ++j) out[i][j] = out[i][j] + a[i][t] * b[t][j];
        }
    return out;
}

template <class T>
bool mat_eq(const Mat<T>& a, const Mat<T>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

template <class T>
bool mat_is_zero(const Mat<T>& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!(x == T(0))) return false;
    return true;
}

/// Kronecker product: (a kron b)[(i,p),(j,q)] = a[i][j] * b[p][q].
template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    size_t ar = a.size(), ac = ar ? a[0].size() : 0;
    size_t br = b.size(), bc = br ? b[0].size() : 0;
    Mat<T> out = mat_zero<T>(ar * br, ac * bc);
    for (size_t i = 0; i < ar; ++i)
        for (size_t j = 0; j < ac; ++j) {
            if (a[i][j] == T(0)) continue;
            for (size_t p = 0; p < br; ++p)
                for (size_t q = 0; q < bc; ++q) out[i * br + p][j * bc + q] = a[i][j] * b[p][q];
        }
    return out;
}

/// Row echelon rank by exact Gaussian elimination (destructive on a copy).
template <class T>
size_t mat_rank(Mat<T> m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == T(0)) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == T(0)) continue;
            T f = m[i][c] / m[r][c];
            for (size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Exact inverse; throws std::domain_error on singular input.
template <class T>
Mat<T> mat_inverse(const Mat<T>& a) {
    size_t n = a.size();
    Mat<T> m = a;
    Mat<T> inv = mat_identity<T>(n);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == T(0)) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        T p = m[c][c];
        for (size_t k = 0; k < n; ++k) {
            m[c][k] = m[c][k] / p;
            inv[c][k] = inv[c][k] / p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == T(0)) continue;
            T f = m[i][c];
            for (size_t k = 0; k < n; ++k) {
                m[i][k] = m[i][k] - f * m[c][k];
                inv[i][k] = inv[i][k] - f * inv[c][k];
            }
        }
    }
    return inv;
}

/// Basis of the right nullspace (solutions of m x = 0), as column vectors.
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<long> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == T(0)) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        T p = m[r][c];
        for (size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] / p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == T(0)) continue;
            T f = m[i][c];
            for (size_t k = 0; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::vector<T>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<T> vec(cols, T(0));
        vec[c] = T(1);
        for (size_t cc = 0; cc < cols; ++cc)
            if (pivot_of_col[cc] >= 0) vec[cc] = T(0) - m[static_cast<size_t>(pivot_of_col[cc])][c];
        basis.push_back(std::move(vec));
    }
    return basis;
}

/// Solve a (square, nonsingular) system m x = b.
template <class T>
std::vector<T> solve(const Mat<T>& m, const std::vector<T>& b) {
    Mat<T> inv = mat_inverse(m);
    std::vector<T> x(b.size(), T(0));
    for (size_t i = 0; i < inv.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) x[i] = x[i] + inv[i][j] * b[j];
    return x;
}

template <class T>
std::vector<T> mat_apply(const Mat<T>& m, const std::vector<T>& v) {
    std::vector<T> out(m.size(), T(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            if (m[i][j] == T(0)) continue;
            out[i] = out[i] + m[i][j] * v[j];
        }
    return out;
}

}  // namespace mpqg
