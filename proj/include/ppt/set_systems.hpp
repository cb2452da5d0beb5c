#ifndef PPT_SET_SYSTEMS_HPP
#define PPT_SET_SYSTEMS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "exact_algebra.hpp"

namespace ppt {

/// Largest domain accepted by the exhaustive 2^n subset sweeps.
inline constexpr std::size_t max_enumeration_size = 24;

inline void require_enumerable(std::size_t n, const char* what) {
    if (n > max_enumeration_size)
        throw capacity_error(std::string(what) + ": domain of size " + std::to_string(n) +
                             " exceeds the enumeration cap of " + std::to_string(max_enumeration_size));
}

/// Nullity of every principal submatrix, indexed by subset mask.
template <class T>
std::vector<std::uint8_t> nullity_profile(const Matrix<T>& a) {
    require_enumerable(a.size(), "nullity_profile");
    const std::size_t count = std::size_t{1} << a.size();
    std::vector<std::uint8_t> out(count);
    for (std::size_t s = 0; s < count; ++s)
        out[s] = static_cast<std::uint8_t>(principal_nullity(a, static_cast<mask_t>(s)));
    return out;
}

/// (V, D): a family of subsets of a domain. Members are kept sorted by mask.
struct SetSystem {
    Domain domain;
    std::vector<mask_t> members;

    bool contains(mask_t m) const { return std::binary_search(members.begin(), members.end(), m); }
    friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

struct NormVector {
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }
    friend bool operator==(const NormVector&, const NormVector&) = default;
};

/// (P_0, ..., P_n): classes of subsets; every subset of V lies in exactly one.
struct PartitionSequence {
    Domain domain;
    std::vector<std::vector<mask_t>> classes;  // each sorted by mask

    const std::vector<mask_t>& operator[](std::size_t i) const { return classes[i]; }
    friend bool operator==(const PartitionSequence&, const PartitionSequence&) = default;
};

/// M_A: X is a member iff A[X] is nonsingular. Always contains the empty set.
template <class T>
SetSystem set_system_of(const Matrix<T>& a) {
    require_enumerable(a.size(), "set_system_of");
    SetSystem m{a.domain(), {}};
    const std::size_t count = std::size_t{1} << a.size();
    for (std::size_t s = 0; s < count; ++s)
        if (principal_nullity(a, static_cast<mask_t>(s)) == 0) m.members.push_back(s);
    return m;
}

/// P_A: X lies in class i iff n(A[X]) = i.
template <class T>
PartitionSequence partition_sequence_of(const Matrix<T>& a) {
    const auto profile = nullity_profile(a);
    PartitionSequence p{a.domain(), std::vector<std::vector<mask_t>>(a.size() + 1)};
    for (std::size_t s = 0; s < profile.size(); ++s) p.classes[profile[s]].push_back(s);
    return p;
}

inline SetSystem twist(const SetSystem& m, const SubsetMask& x) {
    require_same_domain(m.domain, x.domain(), "twist");
    SetSystem out{m.domain, {}};
    out.members.reserve(m.members.size());
    for (auto y : m.members) out.members.push_back(y ^ x.bits());
    std::sort(out.members.begin(), out.members.end());
    return out;
}

/// P*X = (P_0*X, ..., P_n*X). Defined for every X.
inline PartitionSequence twist(const PartitionSequence& p, const SubsetMask& x) {
    require_same_domain(p.domain, x.domain(), "twist");
    PartitionSequence out{p.domain, {}};
    for (const auto& cls : p.classes) {
        auto& moved = out.classes.emplace_back();
        moved.reserve(cls.size());
        for (auto y : cls) moved.push_back(y ^ x.bits());
        std::sort(moved.begin(), moved.end());
    }
    return out;
}

inline NormVector norm(const PartitionSequence& p) {
    NormVector v;
    for (const auto& cls : p.classes) v.counts.push_back(cls.size());
    return v;
}

/// P_{A[X]} read off P_A: members contained in X, re-indexed over X.
inline PartitionSequence restrict(const PartitionSequence& p, const SubsetMask& x) {
    require_same_domain(p.domain, x.domain(), "restrict");
    PartitionSequence out{p.domain.restrict(x.bits()), std::vector<std::vector<mask_t>>(x.count() + 1)};
    for (std::size_t i = 0; i < p.classes.size(); ++i)
        for (auto y : p.classes[i])
            if ((y & ~x.bits()) == 0) out.classes.at(i).push_back(compress_mask(y, x.bits()));
    for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
    return out;
}

inline SetSystem class_zero(const PartitionSequence& p) { return {p.domain, p.classes.at(0)}; }

} // namespace ppt

#endif // PPT_SET_SYSTEMS_HPP
