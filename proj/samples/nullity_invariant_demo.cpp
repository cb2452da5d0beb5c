// Walks through one pivot by hand: pivot a rational matrix, then compare the
// nullity of every principal submatrix before and after.

#include <iostream>

#include <ppt/ppt.hpp>

int main() {
    using namespace ppt;
    const Domain d({"a", "b", "c"});
    auto r = [](long long v) { return Rational(v); };
    const auto a = RationalMatrix::from_rows(d, {{r(1), r(2), r(5)}, {r(1), r(4), r(2)}, {r(3), r(2), r(1)}});
    const auto x = SubsetMask::of(d, {"a", "b"});

    std::cout << "A =\n" << format_matrix(a) << "\nA*" << to_string(x) << " =\n" << format_matrix(pivot(a, x)) << '\n';

    for (mask_t y = 0; y <= d.full(); ++y) {
        const auto pair = nullity_after_pivot(a, x, SubsetMask(d, y));
        std::cout << "Y = " << format_label_set(d, y) << "  n((A*X)[Y]) = " << pair.after_pivot
                  << "  n(A[X xor Y]) = " << pair.direct << '\n';
    }

    std::cout << "\nq(A) = " << q_direct(a).coefficient_list() << "  (constant term first)\n";
    std::cout << "partition sequence:\n" << format_partition_sequence(partition_sequence_of(a));
}
