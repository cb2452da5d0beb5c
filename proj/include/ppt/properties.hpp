#ifndef PPT_PROPERTIES_HPP
#define PPT_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "circuits.hpp"
#include "interlace.hpp"
#include "pivot.hpp"
#include "random.hpp"
#include "set_systems.hpp"

namespace ppt {

/// Randomized checks behind `pptool verify`.
enum class Property { nullity_invariance, tucker, partial_inverse, twist, recursion, cohn_lempel };

inline std::optional<Property> parse_property(std::string_view name) {
    if (name == "nullity-invariance") return Property::nullity_invariance;
    if (name == "tucker") return Property::tucker;
    if (name == "partial-inverse") return Property::partial_inverse;
    if (name == "twist") return Property::twist;
    if (name == "recursion") return Property::recursion;
    if (name == "cohn-lempel") return Property::cohn_lempel;
    return std::nullopt;
}

enum class Field { f2, q };

struct TrialCounts {
    std::size_t passed = 0;
    std::size_t failed = 0;
};

namespace detail {

template <class T>
bool run_trial(Property prop, Generator& gen, std::size_t max_size) {
    const std::size_t n = gen.size_up_to(max_size);
    switch (prop) {
    case Property::nullity_invariance: {
        const auto a = gen.matrix<T>(n);
        return nullity_invariant_holds_for_all(a, gen.pivotable_subset(a));
    }
    case Property::tucker: {
        const auto a = gen.matrix<T>(n);
        const auto x = gen.pivotable_subset(a);
        return tucker_determinant_check(a, x, gen.subset(a.domain()));
    }
    case Property::partial_inverse: {
        const auto a = gen.matrix<T>(n);
        const auto x = gen.pivotable_subset(a);
        return verify_partial_inverse(a, x, gen.vector<T>(n));
    }
    case Property::twist: {
        const auto a = gen.matrix<T>(n);
        const auto x = gen.pivotable_subset(a);
        return twist(partition_sequence_of(a), x) == partition_sequence_of(pivot(a, x));
    }
    case Property::recursion: {
        Matrix<T> a;
        if constexpr (std::is_same_v<T, Bit>) {
            const auto g = gen.graph(n);
            if (!(q_recursive(g) == q_direct(g.adjacency()))) return false;
            a = g.adjacency();
        } else {
            a = gen.matrix<T>(n);
        }
        const auto x = gen.nonempty_pivotable_subset(a);
        if (x.is_empty()) return q_direct(a) == IntPolynomial::monomial(n);
        std::vector<std::size_t> members;
        for_each_bit(x.bits(), [&](std::size_t i) { members.push_back(i); });
        return q_general_recursive(a, members[gen.below(members.size())], x).holds();
    }
    case Property::cohn_lempel: {
        const auto s = gen.dos(n);
        const mask_t full = s.alphabet().full();
        for (mask_t m = 0;; ++m) {
            if (!cohn_lempel_check(s, SubsetMask(s.alphabet(), m)).equal()) return false;
            if (m == full) break;
        }
        return true;
    }
    }
    return false;
}

} // namespace detail

/// Runs `trials` independent trials with domain sizes drawn from [1, max_size].
/// A trial that throws counts as a failure.
inline TrialCounts run_property(Property prop, std::size_t trials, std::size_t max_size,
                                std::uint64_t seed, Field field) {
    if (max_size == 0) throw precondition_error("verify: --size must be at least 1");
    require_enumerable(max_size, "verify");
    Generator gen(seed);
    TrialCounts counts;
    for (std::size_t t = 0; t < trials; ++t) {
        bool ok = false;
        try {
            ok = field == Field::f2 ? detail::run_trial<Bit>(prop, gen, max_size)
                                    : detail::run_trial<Rational>(prop, gen, max_size);
        } catch (const std::exception&) {
            ok = false;
        }
        ++(ok ? counts.passed : counts.failed);
    }
    return counts;
}

} // namespace ppt

#endif // PPT_PROPERTIES_HPP
