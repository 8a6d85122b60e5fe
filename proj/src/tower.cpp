#include "gk/tower.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace gk {

namespace {

bool mul_overflows(std::uint64_t a, std::uint64_t b) {
    return b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b;
}

using PrimePoly = std::vector<std::uint32_t>;  // low degree first

void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over F_p.
PrimePoly prime_poly_mod(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
    const std::size_t dg = g.size() - 1;
    trim(f);
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * g[i]) % p);
        }
        trim(f);
    }
    return f;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of index, with c_0 the most significant digit.
PrimePoly monic_from_lex_index(std::uint64_t index, std::size_t d, std::uint32_t p) {
    PrimePoly f(d + 1, 0);
    f[d] = 1;
    for (std::size_t i = d; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return f;
}

bool prime_poly_irreducible(const PrimePoly& f, std::uint32_t p) {
    const std::size_t d = f.size() - 1;
    for (std::size_t e = 1; e <= d / 2; ++e) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < e; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            if (prime_poly_mod(f, monic_from_lex_index(k, e, p), p).empty()) return false;
        }
    }
    return true;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

TowerParams TowerParams::make(std::uint32_t p, std::uint32_t h) {
    if (!is_prime(p)) throw ArgumentError("characteristic " + std::to_string(p) + " is not prime");
    if (h == 0) throw ArgumentError("extension degree h must be positive");
    TowerParams t;
    t.p = p;
    t.h = h;
    t.n = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        if (mul_overflows(t.n, p)) throw LimitError("n = p^h overflows");
        t.n *= p;
    }
    if (mul_overflows(t.n, t.n)) throw LimitError("n^2 overflows");
    t.sub_size = t.n * t.n;
    if (mul_overflows(t.sub_size, t.n)) throw LimitError("n^3 overflows");
    t.q = t.sub_size * t.n;
    if (mul_overflows(t.q, t.q)) throw LimitError("q^2 overflows");
    t.size = t.q * t.q;
    return t;
}

TowerParams TowerParams::from_n(std::uint64_t n) {
    if (n < 2) throw ArgumentError("n must be a prime power >= 2");
    const auto primes = prime_divisors(n);
    if (primes.size() != 1) throw ArgumentError(std::to_string(n) + " is not a prime power");
    std::uint32_t h = 0;
    for (std::uint64_t m = n; m > 1; m /= primes[0]) ++h;
    return make(static_cast<std::uint32_t>(primes[0]), h);
}

TowerField::TowerField(std::uint32_t p, std::uint32_t h, std::uint64_t max_size)
    : params_(TowerParams::make(p, h)) {
    if (params_.size > max_size || params_.size > std::numeric_limits<std::uint32_t>::max()) {
        throw LimitError("field size q^2 = " + std::to_string(params_.size) +
                         " exceeds the limit " + std::to_string(max_size));
    }
    sub_ = static_cast<std::uint32_t>(params_.sub_size);
    size_ = static_cast<std::uint32_t>(params_.size);
    digits_per_sub_ = 2 * h;
    build_subfield();
    build_top();
    build_tables();
    id_ = fnv1a(fingerprint());
}

void TowerField::build_subfield() {
    const std::uint32_t p = params_.p;
    const std::size_t d = digits_per_sub_;
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < d; ++i) candidates *= p;
    for (std::uint64_t k = 0; k < candidates; ++k) {
        auto f = monic_from_lex_index(k, d, p);
        if (prime_poly_irreducible(f, p)) {
            g2_ = std::move(f);
            break;
        }
    }

    auto unpack = [&](std::uint32_t c) {
        PrimePoly v(d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = c % p;
            c /= p;
        }
        return v;
    };
    auto pack = [&](const PrimePoly& v) {
        std::uint32_t c = 0;
        for (std::size_t i = v.size(); i-- > 0;) c = c * p + v[i];
        return c;
    };

    sub_add_.resize(std::size_t{sub_} * sub_);
    sub_mul_.resize(std::size_t{sub_} * sub_);
    sub_neg_.resize(sub_);
    for (std::uint32_t a = 0; a < sub_; ++a) {
        const auto va = unpack(a);
        PrimePoly neg(d);
        for (std::size_t i = 0; i < d; ++i) neg[i] = (p - va[i]) % p;
        sub_neg_[a] = pack(neg);
        for (std::uint32_t b = 0; b < sub_; ++b) {
            const auto vb = unpack(b);
            PrimePoly sum(d);
            for (std::size_t i = 0; i < d; ++i) sum[i] = (va[i] + vb[i]) % p;
            sub_add_[std::size_t{a} * sub_ + b] = pack(sum);

            PrimePoly prod(2 * d, 0);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + va[i] * vb[j]) % p);
                }
            }
            auto r = prime_poly_mod(prod, g2_, p);
            r.resize(d, 0);
            sub_mul_[std::size_t{a} * sub_ + b] = pack(r);
        }
    }
}

void TowerField::build_top() {
    // Least monic irreducible cubic over F_{n^2}; a cubic is irreducible iff
    // it has no root in the ground field.
    auto has_root = [&](std::uint32_t c0, std::uint32_t c1, std::uint32_t c2) {
        for (std::uint32_t x = 0; x < sub_; ++x) {
            std::uint32_t v = 1;
            v = sub_add_[std::size_t{sub_mul_[std::size_t{v} * sub_ + x]} * sub_ + c2];
            v = sub_add_[std::size_t{sub_mul_[std::size_t{v} * sub_ + x]} * sub_ + c1];
            v = sub_add_[std::size_t{sub_mul_[std::size_t{v} * sub_ + x]} * sub_ + c0];
            if (v == 0) return true;
        }
        return false;
    };
    for (std::uint32_t c0 = 0; c0 < sub_ && g3_.empty(); ++c0) {
        for (std::uint32_t c1 = 0; c1 < sub_ && g3_.empty(); ++c1) {
            for (std::uint32_t c2 = 0; c2 < sub_ && g3_.empty(); ++c2) {
                if (!has_root(c0, c1, c2)) {
                    g3_ = {FieldElem{c0}, FieldElem{c1}, FieldElem{c2}, FieldElem{1}};
                }
            }
        }
    }

    const std::uint64_t order = params_.size - 1;
    const auto primes = prime_divisors(order);
    for (std::uint32_t c = 1; c < size_; ++c) {
        const FieldElem x{c};
        const bool full = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t r) {
            return pow_reference(x, order / r) != one();
        });
        if (full) {
            gen_ = x;
            break;
        }
    }
}

void TowerField::build_tables() {
    const std::uint32_t order = size_ - 1;
    exp_.resize(2 * std::size_t{order});
    log_.assign(size_, 0);
    FieldElem cur = one();
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = cur.code;
        log_[cur.code] = i;
        cur = mul_reference(cur, gen_);
    }
    for (std::uint32_t i = 0; i < order; ++i) exp_[order + i] = exp_[i];

    lex_key_.resize(size_);
    const std::uint32_t nd = 3 * digits_per_sub_;
    for (std::uint32_t c = 0; c < size_; ++c) {
        std::uint32_t v = c;
        std::uint32_t key = 0;
        for (std::uint32_t i = 0; i < nd; ++i) {
            key = key * params_.p + v % params_.p;
            v /= params_.p;
        }
        lex_key_[c] = key;
    }
}

std::string TowerField::fingerprint() const {
    std::ostringstream os;
    os << "p=" << params_.p << ";h=" << params_.h << ";g2=[";
    for (std::size_t i = 0; i < g2_.size(); ++i) os << (i ? "," : "") << g2_[i];
    os << "];g3=[";
    for (std::size_t i = 0; i < g3_.size(); ++i) os << (i ? "," : "") << g3_[i].code;
    os << "];gen=" << gen_.code;
    return os.str();
}

FieldElem TowerField::from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(params_.p);
    return FieldElem{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

std::array<FieldElem, 3> TowerField::coefficients(FieldElem a) const {
    return {FieldElem{a.code % sub_}, FieldElem{(a.code / sub_) % sub_},
            FieldElem{a.code / sub_ / sub_}};
}

FieldElem TowerField::add(FieldElem a, FieldElem b) const {
    if (params_.p == 2) return FieldElem{a.code ^ b.code};
    const std::uint32_t a0 = a.code % sub_, a1 = (a.code / sub_) % sub_, a2 = a.code / sub_ / sub_;
    const std::uint32_t b0 = b.code % sub_, b1 = (b.code / sub_) % sub_, b2 = b.code / sub_ / sub_;
    return FieldElem{sub_add(a0, b0) + sub_ * (sub_add(a1, b1) + sub_ * sub_add(a2, b2))};
}

FieldElem TowerField::neg(FieldElem a) const {
    if (params_.p == 2) return a;
    const std::uint32_t a0 = a.code % sub_, a1 = (a.code / sub_) % sub_, a2 = a.code / sub_ / sub_;
    return FieldElem{sub_neg(a0) + sub_ * (sub_neg(a1) + sub_ * sub_neg(a2))};
}

FieldElem TowerField::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem TowerField::mul(FieldElem a, FieldElem b) const {
    if (a.code == 0 || b.code == 0) return zero();
    return FieldElem{exp_[std::size_t{log_[a.code]} + log_[b.code]]};
}

FieldElem TowerField::mul_reference(FieldElem a, FieldElem b) const {
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    std::uint32_t r[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r[i + j] = sub_add(r[i + j], sub_mul(ca[i].code, cb[j].code));
        }
    }
    // X^3 = -(c2 X^2 + c1 X + c0)
    for (int k = 4; k >= 3; --k) {
        const std::uint32_t lead = r[k];
        if (lead == 0) continue;
        for (int i = 0; i < 3; ++i) {
            r[k - 3 + i] = sub_add(r[k - 3 + i], sub_neg(sub_mul(lead, g3_[i].code)));
        }
        r[k] = 0;
    }
    return FieldElem{r[0] + sub_ * (r[1] + sub_ * r[2])};
}

FieldElem TowerField::pow_reference(FieldElem a, std::uint64_t e) const {
    FieldElem result = one();
    while (e > 0) {
        if (e & 1) result = mul_reference(result, a);
        a = mul_reference(a, a);
        e >>= 1;
    }
    return result;
}

FieldElem TowerField::pow(FieldElem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    const std::uint64_t order = size_ - 1;
    return FieldElem{exp_[(log_[a.code] * (e % order)) % order]};
}

FieldElem TowerField::inv(FieldElem a) const {
    if (a.is_zero()) throw ArgumentError("inverse of zero");
    const std::uint32_t order = size_ - 1;
    return FieldElem{exp_[order - log_[a.code]]};
}

std::uint64_t TowerField::log(FieldElem a) const {
    if (a.is_zero()) throw ArgumentError("logarithm of zero");
    return log_[a.code];
}

FieldElem TowerField::exp(std::uint64_t k) const { return FieldElem{exp_[k % (size_ - 1)]}; }

bool TowerField::in_subfield(FieldElem x, int k) const {
    if (k != 1 && k != 2) throw ArgumentError("subfield index must be 1 or 2");
    const std::uint64_t s = k == 1 ? params_.n : params_.sub_size;
    return pow(x, s) == x;
}

FieldElem TowerField::root_of_unity(std::uint64_t m) const {
    const std::uint64_t order = size_ - 1;
    if (m == 0 || order % m != 0) {
        throw ArgumentError(std::to_string(m) + " does not divide q^2 - 1 = " + std::to_string(order));
    }
    return exp(order / m);
}

std::uint64_t TowerField::multiplicative_order(FieldElem a) const {
    const std::uint64_t order = size_ - 1;
    return order / std::gcd(log(a), order);
}

std::vector<std::uint32_t> TowerField::digits(FieldElem a) const {
    std::vector<std::uint32_t> d(3 * digits_per_sub_);
    std::uint32_t v = a.code;
    for (auto& digit : d) {
        digit = v % params_.p;
        v /= params_.p;
    }
    return d;
}

FieldElem TowerField::from_digits(std::span<const std::uint32_t> d) const {
    if (d.size() != 3 * digits_per_sub_) {
        throw ArgumentError("expected " + std::to_string(3 * digits_per_sub_) + " digits");
    }
    std::uint32_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] >= params_.p) throw ArgumentError("digit out of range");
        c = c * params_.p + d[i];
    }
    return FieldElem{c};
}

}  // namespace gk
