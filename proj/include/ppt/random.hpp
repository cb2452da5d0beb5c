#ifndef PPT_RANDOM_HPP
#define PPT_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "circuits.hpp"
#include "graph.hpp"
#include "set_systems.hpp"

namespace ppt {

/// Seeded source for the randomized suites.
///
/// Everything is drawn from std::mt19937_64 (whose output sequence is fixed by
/// the C++ standard) using only raw 64-bit outputs:
///   bit            top bit of one draw
///   below(k)       draw % k
///   size in [1,K]  1 + below(K)
///   q entry        below(7) - 3, i.e. an integer in [-3, 3]
/// Matrix entries are drawn row by row; graphs draw the upper triangle
/// (diagonal included) row by row and mirror it. Labels are v00, v01, ...
class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t k) { return next() % k; }
    bool coin() { return (next() >> 63) != 0; }
    std::size_t size_up_to(std::size_t k) { return 1 + static_cast<std::size_t>(below(k)); }

    static Domain labels(std::size_t n) {
        std::vector<std::string> l;
        for (std::size_t i = 0; i < n; ++i) l.push_back((i < 10 ? "v0" : "v") + std::to_string(i));
        return Domain(std::move(l));
    }

    BitMatrix bit_matrix(std::size_t n) {
        std::vector<mask_t> rows(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (coin()) rows[i] |= bit(j);
        return BitMatrix::from_words(labels(n), std::move(rows));
    }

    RationalMatrix rational_matrix(std::size_t n) {
        RationalMatrix m(labels(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.set(i, j, Rational(static_cast<long long>(below(7)) - 3));
        return m;
    }

    template <class T>
    Matrix<T> matrix(std::size_t n) {
        if constexpr (std::is_same_v<T, Bit>)
            return bit_matrix(n);
        else
            return rational_matrix(n);
    }

    Graph graph(std::size_t n) {
        std::vector<mask_t> rows(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (coin()) {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
        return Graph(BitMatrix::from_words(labels(n), std::move(rows)));
    }

    SubsetMask subset(const Domain& d) { return {d, next() & d.full()}; }

    /// Uniform over the members of M_A (subsets X with A[X] nonsingular).
    template <class T>
    SubsetMask pivotable_subset(const Matrix<T>& a) {
        const auto m = set_system_of(a);
        return {a.domain(), m.members[below(m.members.size())]};
    }

    /// Uniform over M_A minus the empty set; falls back to {} when A has no
    /// nonsingular nonempty principal submatrix.
    template <class T>
    SubsetMask nonempty_pivotable_subset(const Matrix<T>& a) {
        const auto m = set_system_of(a);
        if (m.members.size() == 1) return SubsetMask::empty(a.domain());
        return {a.domain(), m.members[1 + below(m.members.size() - 1)]};
    }

    template <class T>
    std::vector<T> vector(std::size_t n) {
        std::vector<T> v;
        for (std::size_t i = 0; i < n; ++i) {
            if constexpr (std::is_same_v<T, Bit>)
                v.push_back(Bit{coin()});
            else
                v.push_back(Rational(static_cast<long long>(below(7)) - 3));
        }
        return v;
    }

    /// Random double occurrence string over n letters: v00 v00 v01 v01 ...
    /// shuffled by Fisher-Yates with below().
    DoubleOccurrenceString dos(std::size_t n) {
        const auto d = labels(n);
        std::vector<std::string> letters;
        for (std::size_t i = 0; i < n; ++i) {
            letters.push_back(d.label(i));
            letters.push_back(d.label(i));
        }
        for (std::size_t i = letters.size(); i > 1; --i) std::swap(letters[i - 1], letters[below(i)]);
        return DoubleOccurrenceString(std::move(letters));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ppt

#endif // PPT_RANDOM_HPP
