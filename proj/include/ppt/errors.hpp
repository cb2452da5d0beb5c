#ifndef PPT_ERRORS_HPP
#define PPT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppt {

// Malformed text input (matrix/graph files, double occurrence strings, label lists).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller bug: operands over different label domains, indices out of range.
class domain_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A mathematical precondition does not hold for the given operands.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class singular_matrix_error : public precondition_error {
public:
    singular_matrix_error() : precondition_error("singular matrix") {}
    using precondition_error::precondition_error;
};

// A[X] is singular, so A*X does not exist. Carries X as a raw mask over A's domain
// together with its printable form.
class pivot_undefined_error : public precondition_error {
public:
    pivot_undefined_error(std::uint64_t subset, const std::string& subset_text,
                          const std::string& stage = {})
        : precondition_error("pivot undefined: A[X] singular for X = " + subset_text +
                             (stage.empty() ? std::string{} : " (" + stage + ")")),
          subset_(subset), stage_(stage) {}

    std::uint64_t subset() const noexcept { return subset_; }
    const std::string& stage() const noexcept { return stage_; }

private:
    std::uint64_t subset_;
    std::string stage_;
};

class elementary_pivot_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

// Exhaustive subset sweeps and orbit closures refuse inputs beyond their caps.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ppt

#endif // PPT_ERRORS_HPP
