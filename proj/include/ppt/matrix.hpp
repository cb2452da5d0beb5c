#ifndef PPT_MATRIX_HPP
#define PPT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "domain.hpp"
#include "scalar.hpp"

namespace ppt {

/// Square V x V matrix with exact entries of type T (Bit or Rational).
///
/// Rows and columns are indexed by the domain's labels in sorted order. Over
/// GF(2) every row is packed into one 64-bit word (bit j = column j).
template <class T>
class Matrix {
public:
    using scalar_type = T;
    using traits = field_traits<T>;
    static constexpr bool is_packed = std::is_same_v<T, Bit>;

    Matrix() = default;

    /// Zero matrix over d.
    explicit Matrix(Domain d) : domain_(std::move(d)) {
        if constexpr (is_packed)
            data_.assign(size(), 0);
        else
            data_.assign(size() * size(), traits::zero());
    }

    static Matrix identity(Domain d) {
        Matrix m(std::move(d));
        for (std::size_t i = 0; i < m.size(); ++i) m.set(i, i, traits::one());
        return m;
    }

    /// Rows given in domain order.
    static Matrix from_rows(Domain d, const std::vector<std::vector<T>>& rows) {
        Matrix m(std::move(d));
        if (rows.size() != m.size()) throw domain_error("from_rows: row count does not match domain");
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (rows[i].size() != m.size())
                throw domain_error("from_rows: row length does not match domain");
            for (std::size_t j = 0; j < m.size(); ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    /// GF(2) only: rows as bit words.
    static Matrix from_words(Domain d, std::vector<mask_t> words)
        requires is_packed
    {
        Matrix m(std::move(d));
        if (words.size() != m.size()) throw domain_error("from_words: row count does not match domain");
        for (auto w : words)
            if ((w & ~m.domain_.full()) != 0) throw domain_error("from_words: bits beyond domain");
        m.data_ = std::move(words);
        return m;
    }

    const Domain& domain() const noexcept { return domain_; }
    std::size_t size() const noexcept { return domain_.size(); }

    T at(std::size_t i, std::size_t j) const {
        if constexpr (is_packed)
            return Bit{((data_[i] >> j) & 1U) != 0};
        else
            return data_[i * size() + j];
    }

    T at(std::string_view row, std::string_view col) const {
        return at(domain_.index_of(row), domain_.index_of(col));
    }

    void set(std::size_t i, std::size_t j, const T& v) {
        if constexpr (is_packed) {
            if (v.value)
                data_[i] |= bit(j);
            else
                data_[i] &= ~bit(j);
        } else {
            data_[i * size() + j] = v;
        }
    }

    mask_t row_word(std::size_t i) const
        requires is_packed
    {
        return data_[i];
    }

    std::span<const mask_t> words() const
        requires is_packed
    {
        return data_;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.domain_ == b.domain_ && a.data_ == b.data_;
    }

private:
    using storage = std::conditional_t<is_packed, mask_t, T>;

    Domain domain_;
    std::vector<storage> data_;
};

using BitMatrix = Matrix<Bit>;
using RationalMatrix = Matrix<Rational>;

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> t(a.domain());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) t.set(j, i, a.at(i, j));
    return t;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    require_same_domain(a.domain(), b.domain(), "matrix product");
    const std::size_t n = a.size();
    Matrix<T> c(a.domain());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            T acc = field_traits<T>::zero();
            for (std::size_t k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            c.set(i, j, acc);
        }
    return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
    if (x.size() != a.size()) throw domain_error("matrix-vector product: dimension mismatch");
    std::vector<T> y(a.size(), field_traits<T>::zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) y[i] += a.at(i, j) * x[j];
    return y;
}

/// A[X]: rows and columns in X, over the restricted domain.
template <class T>
Matrix<T> principal_submatrix(const Matrix<T>& a, const SubsetMask& x) {
    require_same_domain(a.domain(), x.domain(), "principal_submatrix");
    if (x.bits() == a.domain().full()) return a;
    Matrix<T> sub(a.domain().restrict(x.bits()));
    std::vector<std::size_t> idx;
    for_each_bit(x.bits(), [&](std::size_t i) { idx.push_back(i); });
    if constexpr (Matrix<T>::is_packed) {
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                if ((a.row_word(idx[r]) >> idx[c]) & 1U) sub.set(r, c, Bit{true});
    } else {
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) sub.set(r, c, a.at(idx[r], idx[c]));
    }
    return sub;
}

/// A with the row of every x outside X replaced by the standard basis row e_x.
template <class T>
Matrix<T> sharp(const Matrix<T>& a, const SubsetMask& x) {
    require_same_domain(a.domain(), x.domain(), "sharp");
    Matrix<T> out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (x.contains(i)) continue;
        for (std::size_t j = 0; j < a.size(); ++j)
            out.set(i, j, i == j ? field_traits<T>::one() : field_traits<T>::zero());
    }
    return out;
}

} // namespace ppt

#endif // PPT_MATRIX_HPP
