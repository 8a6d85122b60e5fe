#include "gk/poly.hpp"

#include <algorithm>

namespace gk {

UniPoly::UniPoly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(FieldElem c, std::size_t d) {
    std::vector<FieldElem> v(d + 1);
    v[d] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

namespace poly {

UniPoly add(const TowerField& f, const UniPoly& a, const UniPoly& b) {
    std::vector<FieldElem> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
    return UniPoly(std::move(r));
}

UniPoly sub(const TowerField& f, const UniPoly& a, const UniPoly& b) {
    std::vector<FieldElem> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(i), b.coeff(i));
    return UniPoly(std::move(r));
}

UniPoly mul(const TowerField& f, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<FieldElem> r(ca.size() + cb.size() - 1);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero()) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) {
            if (cb[j].is_zero()) continue;
            r[i + j] = f.add(r[i + j], f.mul(ca[i], cb[j]));
        }
    }
    return UniPoly(std::move(r));
}

UniPoly pow(const TowerField& f, const UniPoly& a, std::uint64_t e) {
    UniPoly result = UniPoly::monomial(f.one(), 0);
    UniPoly base = a;
    while (e > 0) {
        if (e & 1) result = mul(f, result, base);
        e >>= 1;
        if (e > 0) base = mul(f, base, base);
    }
    return result;
}

UniPoly derivative(const TowerField& f, const UniPoly& a) {
    const auto& c = a.coeffs();
    if (c.size() <= 1) return {};
    std::vector<FieldElem> r(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        r[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i % f.characteristic())), c[i]);
    }
    return UniPoly(std::move(r));
}

FieldElem eval(const TowerField& f, const UniPoly& a, FieldElem x) {
    FieldElem acc = f.zero();
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
    return acc;
}

UniPoly binomial(const TowerField& f, std::size_t a, std::int64_t s, std::size_t b) {
    return add(f, UniPoly::monomial(f.one(), a), UniPoly::monomial(f.from_int(s), b));
}

}  // namespace poly

UniPoly build_h(const TowerField& f) {
    const std::uint64_t n = f.params().n;
    std::vector<FieldElem> c(n * (n - 1) + 1);
    for (std::uint64_t i = 0; i <= n; ++i) {
        // (-1)^{i+1}
        c[i * (n - 1)] = f.add(c[i * (n - 1)], f.from_int(i % 2 == 0 ? -1 : 1));
    }
    return UniPoly(std::move(c));
}

HIdentityResult verify_h_identities(const TowerField& f) { return verify_h_identities(f, build_h(f)); }

HIdentityResult verify_h_identities(const TowerField& f, const UniPoly& h) {
    using namespace poly;
    const std::uint64_t n = f.params().n;
    const std::uint64_t n2 = n * n;
    const std::uint64_t n3 = n2 * n;
    const UniPoly xn_plus_x = binomial(f, n, 1, 1);
    const UniPoly xn_minus_x = binomial(f, n, -1, 1);
    const UniPoly xn2_minus_x = binomial(f, n2, -1, 1);

    HIdentityResult r;
    r.factorization = xn2_minus_x == mul(f, xn_plus_x, h);

    const UniPoly lhs3 = sub(f, binomial(f, n3, 1, 1), pow(f, xn_plus_x, n2 - n + 1));
    r.power = lhs3 == mul(f, xn_plus_x, pow(f, h, n + 1));

    const UniPoly inner = add(f, binomial(f, n3, -1, 1), pow(f, xn_minus_x, n2 - n + 1));
    r.cleared = mul(f, pow(f, xn_minus_x, n), inner) == pow(f, xn2_minus_x, n + 1);
    return r;
}

}  // namespace gk
