#include "gk/aut.hpp"

#include <algorithm>

namespace gk {

namespace col {

Collineation identity(const TowerField& f) { return diag(f, f.one(), f.one(), f.one(), f.one()); }

Collineation diag(const TowerField&, FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
    Collineation r;
    r.at(0, 0) = a;
    r.at(1, 1) = b;
    r.at(2, 2) = c;
    r.at(3, 3) = d;
    return r;
}

Collineation lift(const TowerField& f, const std::array<std::array<FieldElem, 3>, 3>& a) {
    static constexpr int kPos[3] = {0, 1, 3};  // (X, Y, T)
    Collineation r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) r.at(kPos[i], kPos[j]) = a[i][j];
    }
    r.at(2, 2) = f.one();
    return r;
}

Collineation multiply(const TowerField& f, const Collineation& a, const Collineation& b) {
    Collineation r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            FieldElem acc = f.zero();
            for (int k = 0; k < 4; ++k) {
                const FieldElem x = a.at(i, k);
                if (x.is_zero()) continue;
                const FieldElem y = b.at(k, j);
                if (y.is_zero()) continue;
                acc = f.add(acc, f.mul(x, y));
            }
            r.at(i, j) = acc;
        }
    }
    return r;
}

bool has_fixed_z_row_and_column(const TowerField& f, const Collineation& c) {
    for (int i = 0; i < 4; ++i) {
        const FieldElem want = i == 2 ? f.one() : f.zero();
        if (c.at(2, i) != want || c.at(i, 2) != want) return false;
    }
    return true;
}

}  // namespace col

ProjPoint apply(const TowerField& f, const Collineation& c, const ProjPoint& p) {
    std::array<FieldElem, 4> v{};
    for (int i = 0; i < 4; ++i) {
        FieldElem acc = f.zero();
        for (int k = 0; k < 4; ++k) acc = f.add(acc, f.mul(c.at(i, k), p.c[static_cast<std::size_t>(k)]));
        v[static_cast<std::size_t>(i)] = acc;
    }
    return normalize(f, v);
}

Collineation q_matrix(const TowerField& f, FieldElem a, FieldElem b) {
    const FieldElem o = f.one(), z = f.zero();
    return col::lift(f, {{{o, f.pow(b, f.params().n), a}, {z, o, b}, {z, z, o}}});
}

Collineation h_matrix(const TowerField& f, FieldElem k) {
    const std::uint64_t n = f.params().n;
    const FieldElem z = f.zero();
    return col::lift(f, {{{f.inv(f.pow(k, n)), z, z}, {z, f.pow(k, n - 1), z}, {z, z, k}}});
}

Collineation w_matrix(const TowerField& f) {
    const FieldElem o = f.one(), z = f.zero();
    return col::lift(f, {{{z, z, o}, {z, f.neg(o), z}, {o, z, z}}});
}

std::vector<Collineation> su3_generators(const TowerField& f) {
    const std::uint64_t n = f.params().n;
    const auto sub = static_cast<std::uint32_t>(f.params().sub_size);
    std::vector<Collineation> out;
    for (std::uint32_t a = 0; a < sub; ++a) {
        for (std::uint32_t b = 0; b < sub; ++b) {
            const FieldElem fa{a}, fb{b};
            if (f.add(f.pow(fa, n), fa) == f.pow(fb, n + 1)) out.push_back(q_matrix(f, fa, fb));
        }
    }
    for (std::uint32_t k = 1; k < sub; ++k) out.push_back(h_matrix(f, FieldElem{k}));
    out.push_back(w_matrix(f));
    return out;
}

std::vector<Collineation> cyclic_generators(const TowerField& f) {
    const std::uint64_t n = f.params().n;
    const std::uint64_t d = n * n - n + 1;
    const FieldElem root = f.root_of_unity(d);
    std::vector<Collineation> out;
    FieldElem lambda = f.one();
    for (std::uint64_t i = 0; i < d; ++i) {
        out.push_back(col::diag(f, lambda, lambda, f.one(), lambda));
        lambda = f.mul(lambda, root);
    }
    return out;
}

std::optional<Collineation> extra_generator(const TowerField& f) {
    const std::uint64_t n = f.params().n;
    if ((n + 1) % 3 != 0) return std::nullopt;
    const FieldElem rho = f.root_of_unity(n * n * n + 1);
    const FieldElem rho_inv = f.inv(rho);
    return col::diag(f, rho_inv, f.pow(rho, n * n - n), f.one(), rho_inv);
}

bool verify_preserves(const TowerField& f, std::span<const Collineation> gens, const CurvePointSet& s) {
    const PointIndex index(s);
    const auto count = static_cast<std::int64_t>(s.points.size());
    for (const auto& g : gens) {
        std::vector<ProjPoint> image(s.points.size());
        bool inside = true;
#pragma omp parallel for reduction(&& : inside) schedule(static)
        for (std::int64_t i = 0; i < count; ++i) {
            const auto k = static_cast<std::size_t>(i);
            image[k] = apply(f, g, s.points[k]);
            inside = inside && index.contains(image[k]);
        }
        if (!inside) return false;
        const std::unordered_set<ProjPoint, ProjPointHash> distinct(image.begin(), image.end());
        if (distinct.size() != s.points.size()) return false;
    }
    return true;
}

std::size_t fixed_points(const TowerField& f, const Collineation& c, const CurvePointSet& s) {
    std::size_t fixed = 0;
    const auto count = static_cast<std::int64_t>(s.points.size());
#pragma omp parallel for reduction(+ : fixed) schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& p = s.points[static_cast<std::size_t>(i)];
        if (apply(f, c, p) == p) ++fixed;
    }
    return fixed;
}

std::uint64_t su3_order(std::uint64_t n) {
    const std::uint64_t n3 = n * n * n;
    return (n3 + 1) * n3 * (n * n - 1);
}

std::uint64_t aut_order(std::uint64_t n) { return su3_order(n) * (n * n - n + 1); }

bool hurwitz_genus_check(std::uint64_t n) {
    if (n < 2) throw ArgumentError("n must be at least 2");
    const auto ni = static_cast<std::int64_t>(n);
    const std::int64_t g = static_cast<std::int64_t>(genus(n));
    const std::int64_t g_bar2 = ni * ni - ni;  // 2 * g_bar
    const std::int64_t lhs = 2 * g - 2;
    const std::int64_t rhs = (ni * ni - ni + 1) * (g_bar2 - 2) + (ni * ni * ni + 1) * (ni * ni - ni);
    return lhs == rhs;
}

}  // namespace gk
