#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gk/curve.hpp"
#include "gk/tower.hpp"

namespace gk {

/// Numerical semigroup given by generators with gcd 1.
///
/// The membership table runs up to conductor + max generator; every integer
/// at or past the conductor is a member.
class NumericalSemigroup {
public:
    /// Throws ArgumentError for an empty list, a zero generator, or gcd != 1.
    static NumericalSemigroup from_generators(std::span<const std::uint64_t> gens);

    const std::vector<std::uint64_t>& generators() const { return gens_; }
    const std::vector<std::uint64_t>& gaps() const { return gaps_; }
    std::uint64_t genus() const { return gaps_.size(); }
    std::uint64_t conductor() const { return conductor_; }
    std::uint64_t table_bound() const { return member_.size(); }

    bool contains(std::uint64_t m) const { return m >= conductor_ || member_[m]; }
    /// Number of members in [0, m].
    std::uint64_t count_up_to(std::uint64_t m) const;

private:
    std::vector<std::uint64_t> gens_;
    std::vector<bool> member_;
    std::vector<std::uint64_t> gaps_;
    std::uint64_t conductor_ = 0;
};

struct TelescopicData {
    std::vector<std::uint64_t> seq;
    std::vector<std::uint64_t> d;  // d[i] = gcd(a_1..a_{i+1}); d_0 = 0 is implicit
    bool telescopic = false;
};

TelescopicData is_telescopic(std::span<const std::uint64_t> seq);

/// (1 + sum_i (d_{i-1}/d_i - 1) a_i) / 2 with d_0 = 0. Throws for a
/// non-telescopic sequence.
std::uint64_t genus_telescopic(std::span<const std::uint64_t> seq);

/// The unique (j_1..j_k) with m = sum j_i a_i and 0 <= j_i < d_{i-1}/d_i for
/// i >= 2, found greedily from the last generator. Throws if m is a gap or
/// the sequence is not telescopic.
std::vector<std::uint64_t> decompose(std::span<const std::uint64_t> seq, std::uint64_t m);

/// (n^3 - n^2 + n, n^3, n^3 + 1): pole orders of y, z and x at X_inf.
std::array<std::uint64_t, 3> weierstrass_generators(std::uint64_t n);
NumericalSemigroup weierstrass_semigroup(std::uint64_t n);

/// {n^3+1 - s : s a member, s <= n^3+1}, ascending.
std::array<std::uint64_t, 4> order_sequence(std::uint64_t n);

/// Exponents of y^{j1} z^{j2} x^{j3}.
struct Monomial {
    std::uint64_t j1 = 0, j2 = 0, j3 = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::uint64_t pole_order(std::uint64_t n, const Monomial& mono);

/// All monomials with pole order <= m, j2 <= n^2-n, j3 <= n-1, sorted by pole
/// order.
std::vector<Monomial> rr_basis(std::uint64_t n, std::uint64_t m);

/// Row-by-row exact rank of an evaluation matrix over F_{q^2}.
class IncrementalRank {
public:
    IncrementalRank(const TowerField& f, std::size_t columns) : f_(&f), columns_(columns) {}

    /// Reduces row against the current pivots; keeps it and returns true if
    /// it is independent.
    bool insert(std::vector<FieldElem> row);
    std::size_t rank() const { return pivots_.size(); }

private:
    const TowerField* f_;
    std::size_t columns_;
    std::vector<std::vector<FieldElem>> rows_;  // each has 1 at its pivot column
    std::vector<std::size_t> pivots_;
};

namespace serial {
/// Plain Gaussian elimination on a dense copy; reference for IncrementalRank.
std::size_t matrix_rank(const TowerField& f, std::vector<std::vector<FieldElem>> rows);
}  // namespace serial

/// Values of the monomial at every affine point of s, in point order.
std::vector<FieldElem> evaluate_monomial(const TowerField& f, const Monomial& mono, const CurvePointSet& s);

/// Rank of the evaluation matrix of the monomials at the affine points equals
/// the number of monomials. Throws LimitError when there are more monomials
/// than affine points.
bool rr_independence_check(const TowerField& f, std::span<const Monomial> monomials, const CurvePointSet& s);
bool rr_independence_check(const TowerField& f, std::uint64_t m, const CurvePointSet& s);

/// For each m in [0, m_max], whether the rr_basis(n, m) evaluations are
/// independent. Shares one incremental elimination across all m.
std::vector<bool> rr_independence_sweep(const TowerField& f, std::uint64_t m_max, const CurvePointSet& s);

}  // namespace gk
