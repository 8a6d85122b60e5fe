#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gk/error.hpp"

namespace gk {

/// Parameters of the tower F_p < F_n < F_{n^2} < F_{q^2} with n = p^h, q = n^3.
struct TowerParams {
    std::uint32_t p = 0;
    std::uint32_t h = 0;
    std::uint64_t n = 0;
    std::uint64_t q = 0;         // n^3
    std::uint64_t sub_size = 0;  // n^2
    std::uint64_t size = 0;      // q^2 = n^6

    /// Validates p (trial division) and h, then derives the sizes. Throws
    /// ArgumentError on bad input and LimitError if q^2 overflows 64 bits.
    static TowerParams make(std::uint32_t p, std::uint32_t h);

    /// Splits a prime power n into (p, h); throws ArgumentError otherwise.
    static TowerParams from_n(std::uint64_t n);

    friend bool operator==(const TowerParams&, const TowerParams&) = default;
};

bool is_prime(std::uint64_t v);

/// Distinct prime divisors of v, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t v);

/// An element of F_{q^2}.
///
/// The code is the flat little-endian base-p digit vector (three F_{n^2}
/// coefficients of 2h digits each) read as an integer, so code < n^2 exactly
/// for the embedded subfield F_{n^2} and code < p for the prime field.
struct FieldElem {
    std::uint32_t code = 0;

    constexpr bool is_zero() const { return code == 0; }
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Largest q^2 for which a tower (with its exp/log tables) is built.
inline constexpr std::uint64_t kMaxTowerSize = std::uint64_t{1} << 22;

/// Exact arithmetic context for F_{q^2}, built as a cubic extension of
/// F_{n^2}, which is itself a degree-2h extension of F_p.
///
/// Construction is deterministic: both defining polynomials are the
/// lexicographically least monic irreducible ones (coefficient tuple
/// (c_0, ..., c_{d-1}) compared with c_0 first, subfield coefficients
/// compared by code), and the generator is the least code of full
/// multiplicative order. Immutable after construction.
class TowerField {
public:
    TowerField(std::uint32_t p, std::uint32_t h, std::uint64_t max_size = kMaxTowerSize);

    const TowerParams& params() const { return params_; }
    std::uint64_t size() const { return params_.size; }
    std::uint32_t characteristic() const { return params_.p; }

    /// g2 over F_p, low degree first, including the leading 1 (length 2h+1).
    const std::vector<std::uint32_t>& g2() const { return g2_; }
    /// g3 over F_{n^2}, low degree first, including the leading 1 (length 4).
    const std::vector<FieldElem>& g3() const { return g3_; }
    FieldElem generator() const { return gen_; }

    /// Stable identity derived from (p, h, g2, g3, generator).
    std::uint64_t id() const { return id_; }
    std::string fingerprint() const;

    FieldElem zero() const { return FieldElem{0}; }
    FieldElem one() const { return FieldElem{1}; }
    /// Image of an integer in the prime field.
    FieldElem from_int(std::int64_t v) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    /// Multiplication by nested polynomial arithmetic, independent of the
    /// exp/log tables; kept as the reference route.
    FieldElem mul_reference(FieldElem a, FieldElem b) const;
    FieldElem pow_reference(FieldElem a, std::uint64_t e) const;

    /// Discrete logarithm to the base generator(); a must be nonzero.
    std::uint64_t log(FieldElem a) const;
    /// generator()^k for any k.
    FieldElem exp(std::uint64_t k) const;

    bool in_subfield(FieldElem x, int k) const;
    FieldElem root_of_unity(std::uint64_t m) const;
    std::uint64_t multiplicative_order(FieldElem a) const;

    /// Flat little-endian base-p digits, length 6h.
    std::vector<std::uint32_t> digits(FieldElem a) const;
    FieldElem from_digits(std::span<const std::uint32_t> d) const;
    /// Rank of a under lexicographic order of its digit vector (digit 0 first).
    std::uint32_t lex_key(FieldElem a) const { return lex_key_[a.code]; }

    /// The three F_{n^2} coefficients of a (each returned as a subfield code).
    std::array<FieldElem, 3> coefficients(FieldElem a) const;

private:
    std::uint32_t sub_add(std::uint32_t a, std::uint32_t b) const {
        return sub_add_[a * sub_ + b];
    }
    std::uint32_t sub_mul(std::uint32_t a, std::uint32_t b) const {
        return sub_mul_[a * sub_ + b];
    }
    std::uint32_t sub_neg(std::uint32_t a) const { return sub_neg_[a]; }

    void build_subfield();
    void build_top();
    void build_tables();

    TowerParams params_;
    std::uint32_t sub_ = 0;  // n^2
    std::uint32_t size_ = 0; // q^2
    std::uint32_t digits_per_sub_ = 0;
    std::vector<std::uint32_t> g2_;
    std::vector<FieldElem> g3_;
    FieldElem gen_;
    std::uint64_t id_ = 0;

    std::vector<std::uint32_t> sub_add_;
    std::vector<std::uint32_t> sub_mul_;
    std::vector<std::uint32_t> sub_neg_;
    std::vector<std::uint32_t> exp_;  // length 2(q^2-1)
    std::vector<std::uint32_t> log_;  // length q^2, log_[0] unused
    std::vector<std::uint32_t> lex_key_;
};

}  // namespace gk
