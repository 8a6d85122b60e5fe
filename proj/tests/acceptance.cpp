// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. The n = 4 group closure (811200 elements, minutes of CPU)
// runs only with --with-n4-closure or GK_ACCEPT_N4_CLOSURE=1.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "gk/aut.hpp"
#include "gk/curve.hpp"
#include "gk/numsg.hpp"
#include "gk/poly.hpp"
#include "gk/quotients.hpp"

namespace {

using namespace gk;

struct Outcome {
    bool pass = false;
    std::string detail;
};

constexpr std::uint64_t kAllN[] = {2, 3, 4, 5, 7, 8, 9};

TowerField make_tower(std::uint64_t n) {
    const auto p = TowerParams::from_n(n);
    return TowerField(p.p, p.h);
}

Outcome identities() {
    std::ostringstream d;
    bool ok = true;
    for (auto n : {2, 3, 4, 5, 7, 8, 9}) {
        const auto f = make_tower(static_cast<std::uint64_t>(n));
        const auto r = verify_h_identities(f);
        ok = ok && r.all();
        d << "n=" << n << (r.all() ? ":ok " : ":FAILED ");
    }
    return {ok, d.str()};
}

Outcome maximality() {
    std::ostringstream d;
    bool ok = true;
    const std::uint64_t expected[] = {225, 6076, 62465};
    for (std::uint64_t n : {2, 3, 4}) {
        const auto f = make_tower(n);
        const auto s = enumerate_points(f, f.size());
        const bool hit = s.size() == expected[n - 2] && s.size() == expected_point_count(n);
        ok = ok && hit;
        d << "n=" << n << ":" << s.size() << " ";
    }
    d << "(printed formula gives " << printed_point_count(2) << " at n=2; enumeration governs)";
    return {ok, d.str()};
}

Outcome hermitian() {
    std::ostringstream d;
    bool ok = true;
    for (std::uint64_t n : {2, 3, 4}) {
        const auto f = make_tower(n);
        const auto s = enumerate_points(f, f.size());
        const bool in = verify_on_hermitian_surface(f, s);
        ok = ok && in;
        d << "n=" << n << ":" << (in ? "all " : "not all ") << s.size() << " ";
    }
    return {ok, d.str()};
}

Outcome genus_three_ways() {
    std::ostringstream d;
    bool ok = true;
    for (auto n : kAllN) {
        const auto gens = weierstrass_generators(n);
        const auto s = weierstrass_semigroup(n);
        const bool agree = genus(n) == genus_telescopic(gens) && genus(n) == s.genus();
        ok = ok && agree;
        d << "n=" << n << ":" << s.genus() << (agree ? " " : "(mismatch) ");
    }
    const std::vector<std::uint64_t> g2{1, 2, 3, 4, 5, 7, 10, 11, 13, 19};
    ok = ok && weierstrass_semigroup(2).gaps() == g2 && genus(3) == 99;
    return {ok, d.str()};
}

Outcome hurwitz_fixed_points() {
    std::ostringstream d;
    bool ok = true;
    for (auto n : kAllN) ok = ok && hurwitz_genus_check(n);
    d << "hurwitz n=2..9 " << (ok ? "exact" : "FAILED") << "; fixed points";
    for (std::uint64_t n : {2, 3}) {
        const auto f = make_tower(n);
        const auto s = enumerate_points(f);
        const auto c = cyclic_generators(f);
        for (std::size_t i = 1; i < c.size(); ++i) ok = ok && fixed_points(f, c[i], s) == n * n * n + 1;
        d << " n=" << n << ":" << fixed_points(f, c[1], s);
    }
    return {ok, d.str()};
}

std::vector<Collineation> all_generators(const TowerField& f) {
    auto g = su3_generators(f);
    const auto c = cyclic_generators(f);
    g.insert(g.end(), c.begin(), c.end());
    if (auto e = extra_generator(f)) g.push_back(*e);
    return g;
}

Outcome automorphisms(bool with_n4) {
    std::ostringstream d;
    bool ok = true;
    for (std::uint64_t n : {2, 3}) {
        const auto f = make_tower(n);
        const auto s = enumerate_points(f);
        const auto g = all_generators(f);
        const bool pres = verify_preserves(f, g, s);
        ok = ok && pres;
        d << "n=" << n << (pres ? " generators preserve; " : " generators DO NOT preserve; ");
    }
    {
        const auto f = make_tower(2);
        const auto su3 = su3_generators(f);
        const auto o = group_closure(f, su3).order();
        ok = ok && o == 216 && o == su3_order(2);
        d << "n=2 su3 " << o << "; ";
        const auto full = group_closure(f, all_generators(f)).order();
        ok = ok && full == 648 && full == aut_order(2);
        d << "n=2 full " << full << "; ";
    }
    {
        const auto f = make_tower(3);
        const auto full = group_closure(f, all_generators(f)).order();
        ok = ok && full == 42336 && full == aut_order(3);
        d << "n=3 full " << full;
    }
    if (with_n4) {
        const auto f = make_tower(4);
        const auto full = group_closure(f, all_generators(f), 1'000'000).order();
        ok = ok && full == 811200 && full == aut_order(4);
        d << "; n=4 full " << full;
    } else {
        d << "; n=4 skipped";
    }
    return {ok, d.str()};
}

Outcome covering() {
    std::ostringstream d;
    bool ok = !covering_obstruction(2, expected_point_count(2)).contradiction;
    d << "n=2:open";
    for (std::uint64_t n : {3, 4, 5, 7, 8, 9}) {
        const auto c = covering_obstruction(n, expected_point_count(n));
        ok = ok && c.contradiction;
        d << " n=" << n << ":" << c.m_max_genus << "<" << c.m_min_count;
    }
    return {ok, d.str()};
}

Outcome semigroup_rr() {
    std::ostringstream d;
    bool ok = true;
    for (auto n : {2, 3, 4, 5, 7, 8, 9}) {
        const auto nn = static_cast<std::uint64_t>(n);
        const std::array<std::uint64_t, 4> e{0, 1, nn * nn - nn + 1, nn * nn * nn + 1};
        ok = ok && order_sequence(nn) == e;
    }
    d << "order sequences " << (ok ? "ok" : "FAILED");
    for (std::uint64_t n : {2, 3}) {
        const auto gens = weierstrass_generators(n);
        const auto s = weierstrass_semigroup(n);
        const auto t = is_telescopic(gens);
        // decompose against an exhaustive search over bounded coefficient vectors
        for (std::uint64_t m = 0; m <= s.conductor() + 20; ++m) {
            if (!s.contains(m)) continue;
            std::size_t hits = 0;
            std::vector<std::uint64_t> found;
            for (std::uint64_t j3 = 0; j3 < t.d[1] / t.d[2]; ++j3)
                for (std::uint64_t j2 = 0; j2 < t.d[0] / t.d[1]; ++j2) {
                    const std::uint64_t used = j2 * gens[1] + j3 * gens[2];
                    if (used <= m && (m - used) % gens[0] == 0) {
                        ++hits;
                        found = {(m - used) / gens[0], j2, j3};
                    }
                }
            ok = ok && hits == 1 && decompose(gens, m) == found;
        }
        const std::uint64_t g = genus(n);
        for (std::uint64_t m = 0; m <= 3 * g; ++m) {
            const auto sz = rr_basis(n, m).size();
            ok = ok && sz == s.count_up_to(m);
            if (m + 1 >= 2 * g) ok = ok && sz == m + 1 - g;
        }
        const auto f = make_tower(n);
        const auto pts = enumerate_points(f);
        const auto sweep = rr_independence_sweep(f, 2 * g + 10, pts);
        bool indep = true;
        for (bool b : sweep) indep = indep && b;
        ok = ok && indep;
        d << "; n=" << n << " decompose/basis/independence m<=" << 2 * g + 10 << (indep ? " ok" : " FAILED");
    }
    return {ok, d.str()};
}

Outcome quotients() {
    std::ostringstream d;
    bool ok = true;
    std::size_t rows = 0;
    for (auto n : kAllN) {
        for (const auto& r : quotient_table(n)) {
            ++rows;
            ok = ok && r.hurwitz_ok && (r.d < 7 || r.large);
            if (n == 3 && r.d == 7) {
                ok = ok && r.G1_order == 6048 && 24 * r.g1 * r.g1 == 216;
                d << "n=3 d=7: " << r.G1_order << " > " << 24 * r.g1 * r.g1 << "; ";
            }
        }
    }
    d << rows << " rows";
    return {ok, d.str()};
}

Outcome smoothness() {
    std::ostringstream d;
    bool ok = true;
    for (std::uint64_t n : {2, 3}) {
        const auto f = make_tower(n);
        const auto r = smoothness_affine(f, enumerate_points(f));
        ok = ok && r.all_rank2 && r.checked == expected_point_count(n) - 1;
        d << "n=" << n << ":" << r.checked << " points" << (r.all_rank2 ? " rank 2 " : " rank deficient ");
    }
    return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    bool with_n4 = false;
    if (const char* env = std::getenv("GK_ACCEPT_N4_CLOSURE")) with_n4 = std::strcmp(env, "1") == 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--with-n4-closure") == 0) {
            with_n4 = true;
        } else {
            std::cerr << "usage: " << argv[0] << " [--with-n4-closure]\n";
            return 2;
        }
    }

    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0 = no runtime bound
        std::function<Outcome()> body;
    };
    const Criterion criteria[] = {
        {1, "h-identities n in {2,3,4,5,7,8,9}", 10.0, identities},
        {2, "maximal point counts n=2,3,4", 60.0, maximality},
        {3, "Hermitian surface containment n=2,3,4", 0.0, hermitian},
        {4, "genus by formula, telescopic sum and gap count", 0.0, genus_three_ways},
        {5, "Hurwitz identity and cyclic fixed points", 0.0, hurwitz_fixed_points},
        {6, "generators preserve the curve; closure orders", 0.0, [&] { return automorphisms(with_n4); }},
        {7, "covering obstruction n=3..9, open at n=2", 0.0, covering},
        {8, "Weierstrass semigroup and Riemann-Roch spaces", 120.0, semigroup_rr},
        {9, "quotient Hurwitz identity and large groups", 0.0, quotients},
        {10, "affine smoothness n=2,3", 0.0, smoothness},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
        const bool pass = o.pass && in_time;
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s";
        if (c.limit_s > 0.0) std::cout << ", limit " << c.limit_s << " s";
        std::cout << ") " << o.detail << '\n';
    }
    std::cout << (failed == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failed)) << '\n';
    return failed == 0 ? 0 : 1;
}
