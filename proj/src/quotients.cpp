#include "gk/quotients.hpp"

#include <numeric>

#include "gk/aut.hpp"
#include "gk/error.hpp"

namespace gk {

std::vector<std::uint64_t> divisors(std::uint64_t v) {
    if (v == 0) throw ArgumentError("divisors of 0");
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= v; ++d) {
        if (v % d == 0) out.push_back(d);
    }
    return out;
}

std::vector<QuotientRow> quotient_table(std::uint64_t n) {
    TowerParams::from_n(n);  // validates the prime power
    const auto ni = static_cast<std::int64_t>(n);
    const std::int64_t n3p1 = ni * ni * ni + 1;
    const std::uint64_t full = aut_order(n);
    std::vector<QuotientRow> rows;
    for (std::uint64_t d : divisors(n * n - n + 1)) {
        const auto di = static_cast<std::int64_t>(d);
        QuotientRow r;
        r.n = n;
        r.d = d;
        // g1 = ((n^3+1)(n^2-d-1)/d + 2) / 2; d | n^3+1 so the division is exact.
        const std::int64_t two_g1 = n3p1 * (ni * ni - di - 1) / di + 2;
        r.g1 = static_cast<std::uint64_t>(two_g1 / 2);
        r.G1_order = full / d;

        const auto g1 = static_cast<std::int64_t>(r.g1);
        const std::int64_t lhs = n3p1 * (ni * ni - 2);
        const std::int64_t rhs = di * (2 * g1 - 2) + (di - 1) * n3p1;
        r.hurwitz_ok = lhs == rhs && n3p1 % di == 0 && two_g1 % 2 == 0 && two_g1 >= 0;

        if (r.g1 == 0) {
            r.vacuous = true;
            r.large = true;
            r.ratio_num = 0;
            r.ratio_den = 1;
        } else {
            const std::uint64_t bound = 24 * r.g1 * r.g1;
            const std::uint64_t g = std::gcd(r.G1_order, bound);
            r.ratio_num = r.G1_order / g;
            r.ratio_den = bound / g;
            r.large = r.G1_order > bound;
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace gk
