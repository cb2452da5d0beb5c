#ifndef PPT_EXACT_ALGEBRA_HPP
#define PPT_EXACT_ALGEBRA_HPP

#include <bit>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace ppt {

/// Rank of a set of GF(2) row vectors by XOR elimination into a basis keyed on
/// the highest set bit.
inline std::size_t gf2_rank(std::span<const mask_t> rows) {
    mask_t basis[64] = {};
    std::size_t rank = 0;
    for (mask_t v : rows) {
        while (v != 0) {
            const int h = 63 - std::countl_zero(v);
            if (basis[h] == 0) {
                basis[h] = v;
                ++rank;
                break;
            }
            v ^= basis[h];
        }
    }
    return rank;
}

/// n(A[S]) for a GF(2) matrix given as row words, without materialising A[S]:
/// the rows indexed by S, masked to the columns in S, have the same rank as A[S].
inline std::size_t gf2_principal_nullity(std::span<const mask_t> rows, mask_t subset) {
    mask_t basis[64] = {};
    std::size_t rank = 0;
    for_each_bit(subset, [&](std::size_t i) {
        mask_t v = rows[i] & subset;
        while (v != 0) {
            const int h = 63 - std::countl_zero(v);
            if (basis[h] == 0) {
                basis[h] = v;
                ++rank;
                return;
            }
            v ^= basis[h];
        }
    });
    return static_cast<std::size_t>(std::popcount(subset)) - rank;
}

namespace detail {

/// Row-major scratch copy used by the elimination routines.
template <class T>
struct Dense {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, field_traits<T>::zero()) {}
    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
};

template <class T>
Dense<T> dense_of(const Matrix<T>& m) {
    Dense<T> d(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) d(i, j) = m.at(i, j);
    return d;
}

/// Forward elimination in place; returns rank. `sign` flips on each row swap,
/// `diagonal_product` accumulates the pivots (meaningful for square input).
template <class T>
std::size_t eliminate(Dense<T>& d, bool& negated, T& diagonal_product) {
    using tr = field_traits<T>;
    std::size_t rank = 0;
    negated = false;
    diagonal_product = tr::one();
    for (std::size_t col = 0; col < d.cols && rank < d.rows; ++col) {
        std::size_t p = rank;
        while (p < d.rows && tr::is_zero(d(p, col))) ++p;
        if (p == d.rows) continue;
        if (p != rank) {
            d.swap_rows(p, rank);
            negated = !negated;
        }
        const T pivot = d(rank, col);
        diagonal_product *= pivot;
        for (std::size_t r = rank + 1; r < d.rows; ++r) {
            if (tr::is_zero(d(r, col))) continue;
            const T factor = d(r, col) / pivot;
            for (std::size_t j = col; j < d.cols; ++j) d(r, j) -= factor * d(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

template <class T>
std::size_t rank(const Matrix<T>& a) {
    if constexpr (Matrix<T>::is_packed) {
        return gf2_rank(a.words());
    } else {
        auto d = detail::dense_of(a);
        bool negated = false;
        T prod;
        return detail::eliminate(d, negated, prod);
    }
}

/// n(A) = |V| - rank(A); the empty matrix has nullity 0.
template <class T>
std::size_t nullity(const Matrix<T>& a) {
    return a.size() - rank(a);
}

/// Exact determinant; det of the empty matrix is 1.
template <class T>
T determinant(const Matrix<T>& a) {
    using tr = field_traits<T>;
    if constexpr (Matrix<T>::is_packed) {
        return rank(a) == a.size() ? tr::one() : tr::zero();
    } else {
        auto d = detail::dense_of(a);
        bool negated = false;
        T prod;
        if (detail::eliminate(d, negated, prod) < a.size()) return tr::zero();
        return negated ? T(-prod) : prod;
    }
}

namespace detail {

/// Gauss-Jordan inverse of a dense square block; false when singular.
template <class T>
bool invert_dense(Dense<T>& m, Dense<T>& inv) {
    using tr = field_traits<T>;
    const std::size_t n = m.rows;
    inv = Dense<T>(n, n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = tr::one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && tr::is_zero(m(p, col))) ++p;
        if (p == n) return false;
        if (p != col) {
            m.swap_rows(p, col);
            inv.swap_rows(p, col);
        }
        const T pivot = m(col, col);
        if (!(pivot == tr::one())) {
            for (std::size_t j = 0; j < n; ++j) {
                m(col, j) /= pivot;
                inv(col, j) /= pivot;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || tr::is_zero(m(r, col))) continue;
            const T factor = m(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= factor * m(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return true;
}

/// Dense copy of the block A[rows, cols].
template <class T>
Dense<T> block(const Matrix<T>& a, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
    Dense<T> d(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) d(i, j) = a.at(rows[i], cols[j]);
    return d;
}

template <class T>
Dense<T> multiply(const Dense<T>& a, const Dense<T>& b) {
    Dense<T> c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (field_traits<T>::is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline std::vector<std::size_t> indices_of(mask_t m) {
    std::vector<std::size_t> out;
    for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
    return out;
}

} // namespace detail

/// Exact inverse; throws singular_matrix_error when det A = 0.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    auto d = detail::dense_of(a);
    detail::Dense<T> inv(0, 0);
    if (!detail::invert_dense(d, inv)) throw singular_matrix_error("inverse: matrix is singular");
    Matrix<T> out(a.domain());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out.set(i, j, inv(i, j));
    return out;
}

/// S - R P^-1 Q where P = A[X], over the domain V \ X.
template <class T>
Matrix<T> schur_complement(const Matrix<T>& a, const SubsetMask& x) {
    require_same_domain(a.domain(), x.domain(), "schur_complement");
    const auto in = detail::indices_of(x.bits());
    const auto out = detail::indices_of(a.domain().full() & ~x.bits());

    auto p = detail::block(a, in, in);
    detail::Dense<T> p_inv(0, 0);
    if (!detail::invert_dense(p, p_inv))
        throw singular_matrix_error("pivot block singular: A[X] for X = " + to_string(x));

    const auto q = detail::block(a, in, out);
    const auto r = detail::block(a, out, in);
    auto s = detail::block(a, out, out);
    const auto rpq = detail::multiply(detail::multiply(r, p_inv), q);
    for (std::size_t i = 0; i < s.a.size(); ++i) s.a[i] -= rpq.a[i];

    Matrix<T> result(a.domain().restrict(a.domain().full() & ~x.bits()));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) result.set(i, j, s(i, j));
    return result;
}

/// n(A[S]) computed on the fly; the GF(2) path avoids building A[S].
template <class T>
std::size_t principal_nullity(const Matrix<T>& a, mask_t subset) {
    if constexpr (Matrix<T>::is_packed) {
        return gf2_principal_nullity(a.words(), subset);
    } else {
        const auto idx = detail::indices_of(subset);
        auto d = detail::block(a, idx, idx);
        bool negated = false;
        T prod;
        return idx.size() - detail::eliminate(d, negated, prod);
    }
}

template <class T>
T principal_determinant(const Matrix<T>& a, mask_t subset) {
    return determinant(principal_submatrix(a, SubsetMask(a.domain(), subset)));
}

} // namespace ppt

#endif // PPT_EXACT_ALGEBRA_HPP
