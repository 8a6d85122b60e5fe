#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// touches the exp/log tables, the CSR enumeration or the greedy algorithms
// they check.

#include <cstdint>
#include <optional>
#include <vector>

#include "gk/tower.hpp"

namespace gk::oracle {

inline FieldElem pow_slow(const TowerField& f, FieldElem x, std::uint64_t e) {
    FieldElem r = f.one();
    for (std::uint64_t i = 0; i < e; ++i) r = f.mul_reference(r, x);
    return r;
}

/// Least monic irreducible polynomial of degree d over F_p, with the
/// coefficient tuple (c_0..c_{d-1}) compared c_0 first; irreducibility by
/// checking every product of two monic factors of smaller degree.
inline std::vector<std::uint32_t> least_irreducible_prime(std::uint32_t p, std::size_t d) {
    auto mulpoly = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        return r;
    };
    auto monic = [&](std::uint64_t idx, std::size_t deg) {
        std::vector<std::uint32_t> f(deg + 1, 0);
        f[deg] = 1;
        for (std::size_t i = deg; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(idx % p);
            idx /= p;
        }
        return f;
    };
    auto count = [&](std::size_t deg) {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < deg; ++i) c *= p;
        return c;
    };
    std::vector<std::vector<std::uint32_t>> reducible;
    for (std::size_t e = 1; e < d; ++e)
        for (std::uint64_t a = 0; a < count(e); ++a)
            for (std::uint64_t b = 0; b < count(d - e); ++b) reducible.push_back(mulpoly(monic(a, e), monic(b, d - e)));
    for (std::uint64_t k = 0; k < count(d); ++k) {
        const auto f = monic(k, d);
        bool red = false;
        for (const auto& r : reducible) red = red || r == f;
        if (!red) return f;
    }
    return {};
}

/// Semigroup membership by enumerating every non-negative combination.
inline bool in_semigroup(const std::vector<std::uint64_t>& gens, std::uint64_t m) {
    if (m == 0) return true;
    for (auto a : gens) {
        if (a <= m && in_semigroup(gens, m - a)) return true;
    }
    return false;
}

inline std::vector<std::uint64_t> gaps_brute(const std::vector<std::uint64_t>& gens, std::uint64_t limit) {
    std::vector<bool> member(limit + 1, false);
    member[0] = true;
    // Breadth-first over sums; independent of the conductor-scan in the library.
    for (std::uint64_t v = 0; v <= limit; ++v) {
        if (!member[v]) continue;
        for (auto a : gens)
            if (v + a <= limit) member[v + a] = true;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; v <= limit; ++v)
        if (!member[v]) out.push_back(v);
    return out;
}

/// All (j_1..j_k) with sum j_i a_i = m and j_i < d_{i-1}/d_i for i >= 2.
inline std::vector<std::vector<std::uint64_t>> decompositions_brute(const std::vector<std::uint64_t>& seq,
                                                                   const std::vector<std::uint64_t>& bounds,
                                                                   std::uint64_t m) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> j(seq.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t rest) -> void {
        if (i == seq.size()) {
            if (rest == 0) out.push_back(j);
            return;
        }
        const std::uint64_t cap = i == 0 ? rest / seq[0] : bounds[i] - 1;
        for (std::uint64_t c = 0; c <= cap && c * seq[i] <= rest; ++c) {
            j[i] = c;
            self(self, i + 1, rest - c * seq[i]);
        }
        j[i] = 0;
    };
    rec(rec, 0, m);
    return out;
}

}  // namespace gk::oracle
