#ifndef PPT_PIVOT_HPP
#define PPT_PIVOT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "exact_algebra.hpp"

namespace ppt {

/// Principal pivot transform A*X.
///
/// With P = A[X] and A split into blocks (P Q; R S) after moving X to the
/// front, A*X = (P^-1, -P^-1 Q; R P^-1, S - R P^-1 Q), written back in the
/// original label order. Throws pivot_undefined_error (carrying X) when P is
/// singular. A*{} = A, and A*V = A^-1 for nonsingular A.
template <class T>
Matrix<T> pivot(const Matrix<T>& a, const SubsetMask& x) {
    require_same_domain(a.domain(), x.domain(), "pivot");
    if (x.is_empty()) return a;

    const auto in = detail::indices_of(x.bits());
    const auto out = detail::indices_of(a.domain().full() & ~x.bits());

    auto p = detail::block(a, in, in);
    detail::Dense<T> p_inv(0, 0);
    if (!detail::invert_dense(p, p_inv)) throw pivot_undefined_error(x.bits(), to_string(x));

    const auto q = detail::block(a, in, out);
    const auto r = detail::block(a, out, in);
    const auto p_inv_q = detail::multiply(p_inv, q);
    const auto r_p_inv = detail::multiply(r, p_inv);
    const auto r_p_inv_q = detail::multiply(r_p_inv, q);

    Matrix<T> result(a.domain());
    for (std::size_t i = 0; i < in.size(); ++i) {
        for (std::size_t j = 0; j < in.size(); ++j) result.set(in[i], in[j], p_inv(i, j));
        for (std::size_t j = 0; j < out.size(); ++j) result.set(in[i], out[j], -p_inv_q(i, j));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < in.size(); ++j) result.set(out[i], in[j], r_p_inv(i, j));
        for (std::size_t j = 0; j < out.size(); ++j)
            result.set(out[i], out[j], a.at(out[i], out[j]) - r_p_inv_q(i, j));
    }
    return result;
}

/// Checks the partial-inverse characterisation of A*X on one vector:
/// A (x1, x2) = (y1, y2) must give A*X (y1, x2) = (x1, y2), with index 1 on X.
template <class T>
bool verify_partial_inverse(const Matrix<T>& a, const SubsetMask& x, const std::vector<T>& v) {
    require_same_domain(a.domain(), x.domain(), "verify_partial_inverse");
    if (v.size() != a.size()) throw domain_error("verify_partial_inverse: vector length mismatch");
    const auto pivoted = pivot(a, x);
    const auto y = a * v;

    std::vector<T> swapped(v.size()), expected(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        swapped[i] = x.contains(i) ? y[i] : v[i];
        expected[i] = x.contains(i) ? v[i] : y[i];
    }
    return pivoted * swapped == expected;
}

struct NullityPair {
    std::size_t after_pivot = 0;  // n((A*X)[Y])
    std::size_t direct = 0;       // n(A[X xor Y])

    bool equal() const noexcept { return after_pivot == direct; }
};

/// Both sides of the nullity invariant n((A*X)[Y]) = n(A[X xor Y]).
template <class T>
NullityPair nullity_after_pivot(const Matrix<T>& a, const SubsetMask& x, const SubsetMask& y) {
    require_same_domain(x.domain(), y.domain(), "nullity_after_pivot");
    const auto pivoted = pivot(a, x);
    return {principal_nullity(pivoted, y.bits()), principal_nullity(a, x.bits() ^ y.bits())};
}

/// Same as above for every Y at once; returns true when the invariant holds
/// for all 2^n subsets.
template <class T>
bool nullity_invariant_holds_for_all(const Matrix<T>& a, const SubsetMask& x) {
    const auto pivoted = pivot(a, x);
    const mask_t full = a.domain().full();
    mask_t y = 0;
    do {
        if (principal_nullity(pivoted, y) != principal_nullity(a, x.bits() ^ y)) return false;
        y = (y - full) & full;
    } while (y != 0);
    return true;
}

/// det (A*X)[Y] == det A[X xor Y] / det A[X], evaluated exactly.
template <class T>
bool tucker_determinant_check(const Matrix<T>& a, const SubsetMask& x, const SubsetMask& y) {
    require_same_domain(x.domain(), y.domain(), "tucker_determinant_check");
    const auto pivoted = pivot(a, x);
    const T lhs = principal_determinant(pivoted, y.bits());
    const T rhs = principal_determinant(a, x.bits() ^ y.bits()) / principal_determinant(a, x.bits());
    return lhs == rhs;
}

template <class T>
struct Composition {
    Matrix<T> result;     // (A*X)*Y
    bool equals_direct;   // (A*X)*Y == A*(X xor Y)
};

/// (A*X)*Y together with its comparison against A*(X xor Y). A failing stage
/// is reported through pivot_undefined_error::stage().
template <class T>
Composition<T> pivot_composition(const Matrix<T>& a, const SubsetMask& x, const SubsetMask& y) {
    require_same_domain(x.domain(), y.domain(), "pivot_composition");
    auto staged = [](const Matrix<T>& m, const SubsetMask& s, const char* stage) {
        try {
            return pivot(m, s);
        } catch (const pivot_undefined_error& e) {
            throw pivot_undefined_error(e.subset(), to_string(s), stage);
        }
    };
    auto first = staged(a, x, "first pivot A*X");
    auto second = staged(first, y, "second pivot (A*X)*Y");
    auto direct = staged(a, symmetric_difference(x, y), "combined pivot A*(X xor Y)");
    const bool same = second == direct;
    return {std::move(second), same};
}

} // namespace ppt

#endif // PPT_PIVOT_HPP
