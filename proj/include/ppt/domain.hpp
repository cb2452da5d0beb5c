#ifndef PPT_DOMAIN_HPP
#define PPT_DOMAIN_HPP

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace ppt {

/// Bitmask over a domain: bit i stands for the i-th label in sorted order.
using mask_t = std::uint64_t;

inline constexpr std::size_t max_domain_size = 64;

constexpr mask_t bit(std::size_t i) noexcept { return mask_t{1} << i; }

constexpr mask_t full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~mask_t{0} : bit(n) - 1;
}

/// Calls f(i) for every set bit i of m, lowest first.
template <class F>
constexpr void for_each_bit(mask_t m, F&& f) {
    while (m != 0) {
        f(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
}

/// Ordered label set V. Labels are kept in lexicographic order and that order
/// fixes the row/column layout of every matrix over the domain.
///
/// Copies share the underlying label storage.
class Domain {
public:
    Domain() : labels_(std::make_shared<const std::vector<std::string>>()) {}

    explicit Domain(std::vector<std::string> labels) {
        for (const auto& l : labels) {
            if (l.empty()) throw parse_error("empty label");
            if (std::any_of(l.begin(), l.end(), [](unsigned char c) { return std::isspace(c); }))
                throw parse_error("label contains whitespace: '" + l + "'");
        }
        std::sort(labels.begin(), labels.end());
        if (auto it = std::adjacent_find(labels.begin(), labels.end()); it != labels.end())
            throw parse_error("duplicate label '" + *it + "'");
        if (labels.size() > max_domain_size)
            throw capacity_error("domain has " + std::to_string(labels.size()) +
                                 " labels; at most 64 are supported");
        labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    }

    std::size_t size() const noexcept { return labels_->size(); }
    bool empty() const noexcept { return labels_->empty(); }
    const std::string& label(std::size_t i) const { return (*labels_)[i]; }
    const std::vector<std::string>& labels() const noexcept { return *labels_; }
    mask_t full() const noexcept { return full_mask(size()); }

    std::optional<std::size_t> find(std::string_view label) const {
        auto it = std::lower_bound(labels_->begin(), labels_->end(), label);
        if (it == labels_->end() || *it != label) return std::nullopt;
        return static_cast<std::size_t>(it - labels_->begin());
    }

    std::size_t index_of(std::string_view label) const {
        if (auto i = find(label)) return *i;
        throw domain_error("unknown label '" + std::string(label) + "'");
    }

    /// Labels of the members of m, in domain order.
    std::vector<std::string> labels_of(mask_t m) const {
        std::vector<std::string> out;
        for_each_bit(m, [&](std::size_t i) { out.push_back(label(i)); });
        return out;
    }

    /// Sub-domain holding the labels in m. Index order is preserved.
    Domain restrict(mask_t m) const { return Domain(labels_of(m)); }

    friend bool operator==(const Domain& a, const Domain& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Re-indexes m (a subset of `support`) into the index space of
/// `Domain::restrict(support)`.
inline mask_t compress_mask(mask_t m, mask_t support) {
    mask_t out = 0;
    std::size_t k = 0;
    for_each_bit(support, [&](std::size_t i) {
        if (m & bit(i)) out |= bit(k);
        ++k;
    });
    return out;
}

/// Inverse of compress_mask.
inline mask_t expand_mask(mask_t m, mask_t support) {
    mask_t out = 0;
    std::size_t k = 0;
    for_each_bit(support, [&](std::size_t i) {
        if (m & bit(k)) out |= bit(i);
        ++k;
    });
    return out;
}

/// A subset X of a domain V.
class SubsetMask {
public:
    SubsetMask() = default;
    SubsetMask(Domain domain, mask_t bits) : domain_(std::move(domain)), bits_(bits) {
        if ((bits_ & ~domain_.full()) != 0)
            throw domain_error("subset mask has bits beyond the domain size");
    }

    static SubsetMask empty(const Domain& d) { return {d, 0}; }
    static SubsetMask full(const Domain& d) { return {d, d.full()}; }

    static SubsetMask of(const Domain& d, const std::vector<std::string>& labels) {
        mask_t m = 0;
        for (const auto& l : labels) m |= bit(d.index_of(l));
        return {d, m};
    }

    const Domain& domain() const noexcept { return domain_; }
    mask_t bits() const noexcept { return bits_; }
    std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
    bool contains(std::string_view label) const {
        auto i = domain_.find(label);
        return i && contains(*i);
    }
    bool is_empty() const noexcept { return bits_ == 0; }

    std::vector<std::string> labels() const { return domain_.labels_of(bits_); }

    SubsetMask complement() const { return {domain_, domain_.full() & ~bits_}; }

    friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
        return a.bits_ == b.bits_ && a.domain_ == b.domain_;
    }

private:
    Domain domain_;
    mask_t bits_ = 0;
};

inline void require_same_domain(const Domain& a, const Domain& b, const char* what) {
    if (!(a == b)) throw domain_error(std::string(what) + ": domain mismatch");
}

inline SubsetMask symmetric_difference(const SubsetMask& x, const SubsetMask& y) {
    require_same_domain(x.domain(), y.domain(), "symmetric_difference");
    return {x.domain(), x.bits() ^ y.bits()};
}

/// `{a,b,c}` with labels in domain order; `{}` for the empty set.
inline std::string format_label_set(const Domain& d, mask_t m) {
    std::string out = "{";
    bool first = true;
    for_each_bit(m, [&](std::size_t i) {
        if (!first) out += ',';
        out += d.label(i);
        first = false;
    });
    out += '}';
    return out;
}

inline std::string to_string(const SubsetMask& x) { return format_label_set(x.domain(), x.bits()); }

} // namespace ppt

#endif // PPT_DOMAIN_HPP
