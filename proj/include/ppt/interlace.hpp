#ifndef PPT_INTERLACE_HPP
#define PPT_INTERLACE_HPP

#include <bit>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "polynomial.hpp"
#include "set_systems.hpp"

namespace ppt {

namespace detail {

/// Histogram of n(A[S]) over all S contained in `live`.
template <class T>
std::vector<std::uint64_t> nullity_histogram(const Matrix<T>& a, mask_t live) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::popcount(live)) + 1, 0);
    mask_t s = 0;
    do {
        ++counts[principal_nullity(a, s)];
        s = (s - live) & live;
    } while (s != 0);
    return counts;
}

inline IntPolynomial from_counts(const std::vector<std::uint64_t>& counts) {
    std::vector<Integer> c;
    c.reserve(counts.size());
    for (auto v : counts) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

/// Indices whose row and column are both entirely zero.
template <class T>
mask_t zero_lines(const Matrix<T>& a) {
    mask_t zero = 0;
    for (std::size_t u = 0; u < a.size(); ++u) {
        bool empty = true;
        for (std::size_t v = 0; v < a.size() && empty; ++v)
            empty = field_traits<T>::is_zero(a.at(u, v)) && field_traits<T>::is_zero(a.at(v, u));
        if (empty) zero |= bit(u);
    }
    return zero;
}

} // namespace detail

/// q'(A) = sum over S of y^n(A[S]), by the plain 2^n sweep.
template <class T>
IntPolynomial q_prime_by_sweep(const Matrix<T>& a) {
    require_enumerable(a.size(), "q_prime_by_sweep");
    return detail::from_counts(detail::nullity_histogram(a, a.domain().full()));
}

/// q'(A), coefficient i = number of principal submatrices of nullity i.
///
/// A vertex whose row and column are zero contributes a factor (1 + y), so
/// those are split off before sweeping the rest; the cap applies to the rest.
template <class T>
IntPolynomial q_prime_direct(const Matrix<T>& a) {
    const mask_t zero = detail::zero_lines(a);
    const mask_t live = a.domain().full() & ~zero;
    require_enumerable(static_cast<std::size_t>(std::popcount(live)), "q_prime_direct");
    IntPolynomial q = detail::from_counts(detail::nullity_histogram(a, live));
    const IntPolynomial one_plus_y{1, 1};
    for (int k = std::popcount(zero); k > 0; --k) q = q * one_plus_y;
    return q;
}

/// q from q' by y -> y - 1.
inline IntPolynomial q_from_q_prime(const IntPolynomial& p) { return p.shifted(-1); }

/// q' from q by y -> y + 1.
inline IntPolynomial q_prime_from_q(const IntPolynomial& p) { return p.shifted(1); }

/// q(A) = sum over S of (y - 1)^n(A[S]).
template <class T>
IntPolynomial q_direct(const Matrix<T>& a) {
    return q_from_q_prime(q_prime_direct(a));
}

namespace detail {

// `rows` is the adjacency of the current graph over the original index space;
// vertices outside `live` have been deleted and their bits cleared.
inline IntPolynomial q_recursive_rows(std::vector<mask_t>& rows, mask_t live) {
    auto remove = [](std::vector<mask_t>& r, mask_t& alive, std::size_t u) {
        alive &= ~bit(u);
        for_each_bit(r[u], [&](std::size_t v) { r[v] &= ~bit(u); });
        r[u] = 0;
    };

    // Rule (2): smallest looped vertex.
    mask_t loops = 0;
    for_each_bit(live, [&](std::size_t u) {
        if ((rows[u] >> u) & 1U) loops |= bit(u);
    });
    if (loops != 0) {
        const auto u = static_cast<std::size_t>(std::countr_zero(loops));
        auto pivoted = rows;
        local_complement_rows(pivoted, u);
        mask_t live_a = live, live_b = live;
        remove(rows, live_a, u);
        remove(pivoted, live_b, u);
        return q_recursive_rows(rows, live_a) + q_recursive_rows(pivoted, live_b);
    }

    // Rule (1): lexicographically smallest edge; every vertex is loopless here.
    for (std::size_t u = 0; u < rows.size(); ++u) {
        if (!(live & bit(u)) || rows[u] == 0) continue;
        const auto v = static_cast<std::size_t>(std::countr_zero(rows[u]));
        auto pivoted = rows;
        edge_complement_rows(pivoted, u, v);
        mask_t live_a = live, live_b = live;
        remove(rows, live_a, u);
        remove(pivoted, live_b, u);
        return q_recursive_rows(rows, live_a) + q_recursive_rows(pivoted, live_b);
    }

    // Rule (3): discrete graph.
    return IntPolynomial::monomial(static_cast<std::size_t>(std::popcount(live)));
}

} // namespace detail

/// q(G) by the deletion recursion q(G) = q(G\u) + q(G*X\u) with X an
/// elementary pivot at u, bottoming out at q = y^n for discrete graphs.
/// Loops are preferred over edges; ties go to the smallest label.
inline IntPolynomial q_recursive(const Graph& g) {
    auto rows = detail::rows_of(g);
    return detail::q_recursive_rows(rows, g.domain().full());
}

struct DeletionSumCheck {
    IntPolynomial deleted;          // q(A\u)
    IntPolynomial pivoted_deleted;  // q(A*X\u)
    IntPolynomial direct;           // q(A)

    IntPolynomial sum() const { return deleted + pivoted_deleted; }
    bool holds() const { return sum() == direct; }
};

/// Both sides of q(A) = q(A\u) + q(A*X\u) for A[X] nonsingular and u in X,
/// every term computed by direct enumeration.
template <class T>
DeletionSumCheck q_general_recursive(const Matrix<T>& a, std::size_t u, const SubsetMask& x) {
    require_same_domain(a.domain(), x.domain(), "q_general_recursive");
    if (u >= a.size()) throw domain_error("q_general_recursive: vertex out of range");
    if (!x.contains(u))
        throw precondition_error("q_general_recursive: " + a.domain().label(u) + " is not in X = " +
                                 to_string(x));
    const auto pivoted = pivot(a, x);
    const SubsetMask drop(a.domain(), bit(u));
    const SubsetMask keep = drop.complement();
    return {q_direct(principal_submatrix(a, keep)), q_direct(principal_submatrix(pivoted, keep)),
            q_direct(a)};
}

template <class T>
DeletionSumCheck q_general_recursive(const Matrix<T>& a, std::string_view u, const SubsetMask& x) {
    return q_general_recursive(a, a.domain().index_of(u), x);
}

} // namespace ppt

#endif // PPT_INTERLACE_HPP
