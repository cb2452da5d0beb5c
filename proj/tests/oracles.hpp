// Slow, independent reference computations. Nothing here calls the
// elimination or pivot code under test.
#ifndef PPT_TESTS_ORACLES_HPP
#define PPT_TESTS_ORACLES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <ppt/ppt.hpp>

namespace ppt::oracle {

using IntGrid = std::vector<std::vector<int>>;

/// Rank over GF(2), one entry at a time.
inline std::size_t gf2_rank(IntGrid m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c] == 1)
                for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
        ++rank;
    }
    return rank;
}

inline IntGrid grid_of(const BitMatrix& a) {
    IntGrid g(a.size(), std::vector<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) g[i][j] = a.at(i, j).value ? 1 : 0;
    return g;
}

using RGrid = std::vector<std::vector<Rational>>;

/// Laplace expansion along the first row; det of the 0x0 grid is 1.
inline Rational cofactor_det(const RGrid& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        RGrid minor;
        for (std::size_t r = 1; r < n; ++r) {
            auto& row = minor.emplace_back();
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
        }
        const Rational term = m[0][c] * cofactor_det(minor);
        det += (c % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

template <class T>
RGrid rgrid_of(const Matrix<T>& a, mask_t subset) {
    RGrid g;
    for_each_bit(subset, [&](std::size_t i) {
        auto& row = g.emplace_back();
        for_each_bit(subset, [&](std::size_t j) {
            if constexpr (std::is_same_v<T, Bit>)
                row.emplace_back(a.at(i, j).value ? 1 : 0);
            else
                row.push_back(a.at(i, j));
        });
    });
    return g;
}

/// Rank over Q as the order of the largest nonzero minor.
inline std::size_t minor_rank(const RGrid& m) {
    const std::size_t n = m.size();
    for (std::size_t k = n; k > 0; --k) {
        for (mask_t rows = 0; rows < bit(n); ++rows) {
            if (static_cast<std::size_t>(std::popcount(rows)) != k) continue;
            for (mask_t cols = 0; cols < bit(n); ++cols) {
                if (static_cast<std::size_t>(std::popcount(cols)) != k) continue;
                RGrid sub;
                for_each_bit(rows, [&](std::size_t r) {
                    auto& row = sub.emplace_back();
                    for_each_bit(cols, [&](std::size_t c) { row.push_back(m[r][c]); });
                });
                if (cofactor_det(sub) != 0) return k;
            }
        }
    }
    return 0;
}

/// Solves M x = b by Cramer's rule; M must be nonsingular.
inline std::vector<Rational> cramer_solve(const RGrid& m, const std::vector<Rational>& b) {
    const Rational det = cofactor_det(m);
    std::vector<Rational> x(m.size());
    for (std::size_t c = 0; c < m.size(); ++c) {
        RGrid replaced = m;
        for (std::size_t r = 0; r < m.size(); ++r) replaced[r][c] = b[r];
        x[c] = cofactor_det(replaced) / det;
    }
    return x;
}

/// A*X read off the partial-inverse relation: column j of A*X is the image of
/// e_j viewed as (y1, x2); x1 comes from Cramer's rule on A[X] x1 = y1 - A[X,~X] x2
/// and y2 = A[~X,X] x1 + A[~X,~X] x2.
inline RGrid pivot_by_relation(const RationalMatrix& a, mask_t x) {
    const std::size_t n = a.size();
    std::vector<std::size_t> in, out;
    for (std::size_t i = 0; i < n; ++i) (((x >> i) & 1U) ? in : out).push_back(i);
    RGrid p(in.size(), std::vector<Rational>(in.size()));
    for (std::size_t i = 0; i < in.size(); ++i)
        for (std::size_t j = 0; j < in.size(); ++j) p[i][j] = a.at(in[i], in[j]);

    RGrid result(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        // e split into y1 (positions in X) and x2 (positions outside X).
        std::vector<Rational> rhs(in.size());
        for (std::size_t i = 0; i < in.size(); ++i) {
            rhs[i] = e[in[i]];
            for (auto o : out) rhs[i] -= a.at(in[i], o) * e[o];
        }
        const auto x1 = cramer_solve(p, rhs);
        std::vector<Rational> full(n);
        for (std::size_t i = 0; i < in.size(); ++i) full[in[i]] = x1[i];
        for (auto o : out) full[o] = e[o];
        for (std::size_t i = 0; i < in.size(); ++i) result[in[i]][j] = x1[i];
        for (auto o : out) {
            Rational y = 0;
            for (std::size_t k = 0; k < n; ++k) y += a.at(o, k) * full[k];
            result[o][j] = y;
        }
    }
    return result;
}

/// q'(A) as a coefficient histogram, with per-subset rank from the given functor.
template <class Nullity>
std::vector<std::uint64_t> nullity_histogram(std::size_t n, Nullity&& nullity_of) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (mask_t s = 0; s < bit(n); ++s) ++counts[nullity_of(s)];
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

inline std::size_t gf2_principal_nullity(const BitMatrix& a, mask_t s) {
    IntGrid g;
    for_each_bit(s, [&](std::size_t i) {
        auto& row = g.emplace_back();
        for_each_bit(s, [&](std::size_t j) { row.push_back(a.at(i, j).value ? 1 : 0); });
    });
    return static_cast<std::size_t>(std::popcount(s)) - gf2_rank(g);
}

inline std::vector<std::uint64_t> coefficients(const IntPolynomial& p) {
    std::vector<std::uint64_t> out;
    for (const auto& c : p.coefficients()) out.push_back(c.convert_to<std::uint64_t>());
    return out;
}

} // namespace ppt::oracle

#endif // PPT_TESTS_ORACLES_HPP
