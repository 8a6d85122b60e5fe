#pragma once

#include <cstdint>
#include <vector>

namespace gk {

/// Quotient of the curve by the cyclic subgroup C_d of C_{n^2-n+1}.
struct QuotientRow {
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::uint64_t g1 = 0;
    std::uint64_t G1_order = 0;
    // |G1| / (24 g1^2) in lowest terms; 0/1 when g1 = 0.
    std::uint64_t ratio_num = 0;
    std::uint64_t ratio_den = 1;
    bool large = false;    // |G1| > 24 g1^2
    bool vacuous = false;  // g1 = 0, ratio undefined
    bool hurwitz_ok = false;
};

std::vector<std::uint64_t> divisors(std::uint64_t v);

/// One row per divisor d of n^2-n+1, ascending in d.
std::vector<QuotientRow> quotient_table(std::uint64_t n);

}  // namespace gk
