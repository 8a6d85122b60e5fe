#include "gk/numsg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gk {

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::uint64_t> gens) {
    if (gens.empty()) throw ArgumentError("numerical semigroup needs at least one generator");
    NumericalSemigroup s;
    s.gens_.assign(gens.begin(), gens.end());
    std::sort(s.gens_.begin(), s.gens_.end());
    s.gens_.erase(std::unique(s.gens_.begin(), s.gens_.end()), s.gens_.end());
    if (s.gens_.front() == 0) throw ArgumentError("generators must be positive");
    std::uint64_t g = 0;
    for (auto a : s.gens_) g = std::gcd(g, a);
    if (g != 1) throw ArgumentError("generators have gcd " + std::to_string(g) + ", expected 1");

    const std::uint64_t max_gen = s.gens_.back();
    std::uint64_t run = 0;
    for (std::uint64_t m = 0;; ++m) {
        bool in = m == 0;
        for (auto a : s.gens_) {
            if (a > m) break;
            if (s.member_[m - a]) {
                in = true;
                break;
            }
        }
        s.member_.push_back(in);
        run = in ? run + 1 : 0;
        if (run == max_gen) {
            s.conductor_ = m + 1 - run;
            break;
        }
    }
    s.member_.resize(s.conductor_ + max_gen, true);
    for (std::uint64_t m = 0; m < s.conductor_; ++m) {
        if (!s.member_[m]) s.gaps_.push_back(m);
    }
    return s;
}

std::uint64_t NumericalSemigroup::count_up_to(std::uint64_t m) const {
    if (m >= conductor_) return m + 1 - genus();
    std::uint64_t c = 0;
    for (std::uint64_t i = 0; i <= m; ++i) c += member_[i] ? 1 : 0;
    return c;
}

namespace {

bool in_generated(std::span<const std::uint64_t> gens, std::uint64_t target) {
    std::vector<bool> reach(target + 1, false);
    reach[0] = true;
    for (std::uint64_t v = 1; v <= target; ++v) {
        for (auto a : gens) {
            if (a <= v && reach[v - a]) {
                reach[v] = true;
                break;
            }
        }
    }
    return reach[target];
}

}  // namespace

TelescopicData is_telescopic(std::span<const std::uint64_t> seq) {
    if (seq.empty()) throw ArgumentError("empty sequence");
    TelescopicData t;
    t.seq.assign(seq.begin(), seq.end());
    std::uint64_t g = 0;
    for (auto a : seq) {
        if (a == 0) throw ArgumentError("sequence entries must be positive");
        g = std::gcd(g, a);
        t.d.push_back(g);
    }
    if (g != 1) throw ArgumentError("sequence has gcd " + std::to_string(g) + ", expected 1");

    t.telescopic = true;
    for (std::size_t i = 1; i < seq.size() && t.telescopic; ++i) {
        std::vector<std::uint64_t> prev;
        for (std::size_t j = 0; j < i; ++j) prev.push_back(seq[j] / t.d[i - 1]);
        t.telescopic = in_generated(prev, seq[i] / t.d[i]);
    }
    return t;
}

std::uint64_t genus_telescopic(std::span<const std::uint64_t> seq) {
    const auto t = is_telescopic(seq);
    if (!t.telescopic) throw ArgumentError("sequence is not telescopic");
    // i = 1 contributes (0/d_1 - 1) a_1 = -a_1.
    std::int64_t total = 1 - static_cast<std::int64_t>(seq[0]);
    for (std::size_t i = 1; i < seq.size(); ++i) {
        total += static_cast<std::int64_t>((t.d[i - 1] / t.d[i] - 1) * seq[i]);
    }
    return static_cast<std::uint64_t>(total / 2);
}

std::vector<std::uint64_t> decompose(std::span<const std::uint64_t> seq, std::uint64_t m) {
    const auto t = is_telescopic(seq);
    if (!t.telescopic) throw ArgumentError("sequence is not telescopic");
    std::vector<std::uint64_t> j(seq.size(), 0);
    auto rest = static_cast<std::int64_t>(m);
    for (std::size_t i = seq.size(); i-- > 1;) {
        const auto modulus = static_cast<std::int64_t>(t.d[i - 1]);
        const std::uint64_t bound = t.d[i - 1] / t.d[i];
        bool found = false;
        for (std::uint64_t c = 0; c < bound; ++c) {
            const std::int64_t r = rest - static_cast<std::int64_t>(c * seq[i]);
            if (((r % modulus) + modulus) % modulus == 0) {
                j[i] = c;
                rest = r;
                found = true;
                break;
            }
        }
        if (!found || rest < 0) throw ArgumentError(std::to_string(m) + " is a gap");
    }
    j[0] = static_cast<std::uint64_t>(rest) / seq[0];
    return j;
}

std::array<std::uint64_t, 3> weierstrass_generators(std::uint64_t n) {
    if (n < 2) throw ArgumentError("n must be at least 2");
    const std::uint64_t n3 = n * n * n;
    return {n3 - n * n + n, n3, n3 + 1};
}

NumericalSemigroup weierstrass_semigroup(std::uint64_t n) {
    const auto gens = weierstrass_generators(n);
    return NumericalSemigroup::from_generators(gens);
}

std::array<std::uint64_t, 4> order_sequence(std::uint64_t n) {
    const auto s = weierstrass_semigroup(n);
    const std::uint64_t top = n * n * n + 1;
    std::vector<std::uint64_t> orders;
    for (std::uint64_t v = 0; v <= top; ++v) {
        if (s.contains(v)) orders.push_back(top - v);
    }
    if (orders.size() != 4) {
        throw std::logic_error("expected 4 members up to n^3+1, found " + std::to_string(orders.size()));
    }
    std::sort(orders.begin(), orders.end());
    return {orders[0], orders[1], orders[2], orders[3]};
}

}  // namespace gk
