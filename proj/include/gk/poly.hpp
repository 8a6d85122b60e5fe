#pragma once

#include <cstdint>
#include <vector>

#include "gk/tower.hpp"

namespace gk {

/// Dense univariate polynomial over F_{n^2} (coefficients are subfield
/// elements of the tower), index = degree, trailing zeros trimmed.
class UniPoly {
public:
    static constexpr std::int64_t kZeroDegree = -1;

    UniPoly() = default;
    explicit UniPoly(std::vector<FieldElem> coeffs);

    /// c * X^d.
    static UniPoly monomial(FieldElem c, std::size_t d);

    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElem{}; }
    const std::vector<FieldElem>& coeffs() const { return c_; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    std::vector<FieldElem> c_;
};

namespace poly {

UniPoly add(const TowerField& f, const UniPoly& a, const UniPoly& b);
UniPoly sub(const TowerField& f, const UniPoly& a, const UniPoly& b);
UniPoly mul(const TowerField& f, const UniPoly& a, const UniPoly& b);
UniPoly pow(const TowerField& f, const UniPoly& a, std::uint64_t e);
UniPoly derivative(const TowerField& f, const UniPoly& a);
FieldElem eval(const TowerField& f, const UniPoly& a, FieldElem x);

/// X^a + s X^b for an integer sign s.
UniPoly binomial(const TowerField& f, std::size_t a, std::int64_t s, std::size_t b);

}  // namespace poly

/// h(X) = sum_{i=0}^{n} (-1)^{i+1} X^{i(n-1)}.
UniPoly build_h(const TowerField& f);

struct HIdentityResult {
    bool factorization = false;  // X^{n^2} - X == (X^n + X) h
    bool power = false;          // X^{n^3} + X - (X^n + X)^{n^2-n+1} == (X^n + X) h^{n+1}
    bool cleared = false;        // (X^n - X)^n (X^{n^3} - X + (X^n - X)^{n^2-n+1}) == (X^{n^2} - X)^{n+1}

    bool all() const { return factorization && power && cleared; }
};

/// Checks the three h-identities by exact arithmetic in F_{n^2}[X].
HIdentityResult verify_h_identities(const TowerField& f);
/// Same, with a caller-supplied h (only the first two identities use h).
HIdentityResult verify_h_identities(const TowerField& f, const UniPoly& h);

}  // namespace gk
