#include "gk/curve.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include <omp.h>

#include "json.hpp"

namespace gk {

namespace {

using SortKey = std::array<std::uint32_t, 4>;

SortKey sort_key(const TowerField& f, const ProjPoint& p) {
    return {f.lex_key(p.c[0]), f.lex_key(p.c[1]), f.lex_key(p.c[2]), f.lex_key(p.c[3])};
}

std::uint64_t checked_pow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > UINT64_MAX / b) throw LimitError("integer overflow for n = " + std::to_string(b));
        r *= b;
    }
    return r;
}

}  // namespace

ProjPoint normalize(const TowerField& f, std::array<FieldElem, 4> v) {
    const auto last = std::find_if(v.rbegin(), v.rend(), [](FieldElem e) { return !e.is_zero(); });
    if (last == v.rend()) throw ArgumentError("zero vector is not a projective point");
    if (*last != f.one()) {
        const FieldElem s = f.inv(*last);
        for (auto& e : v) e = f.mul(e, s);
    }
    return ProjPoint{v};
}

ProjPoint affine_point(FieldElem x, FieldElem y, FieldElem z) {
    return ProjPoint{{x, y, z, FieldElem{1}}};
}

ProjPoint infinite_point() { return ProjPoint{{FieldElem{1}, FieldElem{0}, FieldElem{0}, FieldElem{0}}}; }

bool canonical_less(const TowerField& f, const ProjPoint& a, const ProjPoint& b) {
    return sort_key(f, a) < sort_key(f, b);
}

std::size_t CurvePointSet::affine_count() const {
    return static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [](const ProjPoint& p) { return p.is_affine(); }));
}

std::uint64_t genus(std::uint64_t n) {
    if (n < 2) throw ArgumentError("n must be at least 2");
    const std::uint64_t n3 = checked_pow(n, 3);
    return (n3 + 1) * (n * n - 2) / 2 + 1;
}

std::uint64_t expected_point_count(std::uint64_t n) {
    const std::uint64_t q = checked_pow(n, 3);
    return q * q + 1 + 2 * genus(n) * q;
}

std::uint64_t printed_point_count(std::uint64_t n) {
    return checked_pow(n, 8) - checked_pow(n, 6) + checked_pow(n, 3) + 1;
}

void sort_canonical(const TowerField& f, std::vector<ProjPoint>& pts) {
    std::vector<std::pair<SortKey, ProjPoint>> keyed;
    keyed.reserve(pts.size());
    for (const auto& p : pts) keyed.emplace_back(sort_key(f, p), p);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = keyed[i].second;
}

CurvePointSet enumerate_points(const TowerField& f, std::uint64_t max_field_size) {
    if (f.size() > max_field_size) {
        throw LimitError("enumeration over q^2 = " + std::to_string(f.size()) +
                         " elements exceeds the cap " + std::to_string(max_field_size));
    }
    const auto& prm = f.params();
    const std::uint64_t n = prm.n;
    const std::uint64_t d = n * n - n + 1;
    const std::uint64_t order = prm.size - 1;
    const std::uint64_t step = order / d;
    const auto size = static_cast<std::uint32_t>(prm.size);
    const UniPoly h = build_h(f);

    // CSR buckets: value v -> all y with y^{n+1} = v.
    std::vector<std::uint32_t> offset(size + 1, 0);
    std::vector<std::uint32_t> norm(size);
    for (std::uint32_t y = 0; y < size; ++y) {
        norm[y] = f.pow(FieldElem{y}, n + 1).code;
        ++offset[norm[y] + 1];
    }
    for (std::uint32_t v = 0; v < size; ++v) offset[v + 1] += offset[v];
    std::vector<std::uint32_t> ys(size);
    {
        auto fill = offset;
        for (std::uint32_t y = 0; y < size; ++y) ys[fill[norm[y]]++] = y;
    }

    std::vector<std::vector<ProjPoint>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(size); ++xi) {
            const FieldElem x{static_cast<std::uint32_t>(xi)};
            const FieldElem s = f.add(f.pow(x, n), x);
            const FieldElem hx = poly::eval(f, h, x);
            for (std::uint32_t k = offset[s.code]; k < offset[s.code + 1]; ++k) {
                const FieldElem y{ys[k]};
                const FieldElem w = f.mul(y, hx);
                if (w.is_zero()) {
                    local.push_back(affine_point(x, y, FieldElem{0}));
                    continue;
                }
                const std::uint64_t lw = f.log(w);
                if (lw % d != 0) continue;
                for (std::uint64_t j = 0; j < d; ++j) {
                    local.push_back(affine_point(x, y, f.exp(lw / d + j * step)));
                }
            }
        }
    }

    CurvePointSet out{prm, f.id(), {}};
    std::size_t total = 1;
    for (const auto& v : partial) total += v.size();
    out.points.reserve(total);
    for (auto& v : partial) out.points.insert(out.points.end(), v.begin(), v.end());
    out.points.push_back(infinite_point());
    sort_canonical(f, out.points);
    return out;
}

bool on_hermitian_surface(const TowerField& f, const ProjPoint& p) {
    const std::uint64_t q = f.params().q;
    const FieldElem lhs = f.add(f.mul(f.pow(p.x(), q), p.t()), f.mul(p.x(), f.pow(p.t(), q)));
    const FieldElem rhs = f.add(f.pow(p.y(), q + 1), f.pow(p.z(), q + 1));
    return lhs == rhs;
}

bool verify_on_hermitian_surface(const TowerField& f, std::span<const ProjPoint> points) {
    bool ok = true;
    const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for reduction(&& : ok) schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        ok = ok && on_hermitian_surface(f, points[static_cast<std::size_t>(i)]);
    }
    return ok;
}

bool on_curve_affine(const TowerField& f, const UniPoly& h, FieldElem x, FieldElem y, FieldElem z) {
    const std::uint64_t n = f.params().n;
    const bool cone = f.add(f.pow(x, n), x) == f.pow(y, n + 1);
    const bool surface = f.pow(z, n * n - n + 1) == f.mul(y, poly::eval(f, h, x));
    return cone && surface;
}

int jacobian_rank(const TowerField& f, const JacobianRow& r1, const JacobianRow& r2) {
    auto minor = [&](int i, int j) { return f.sub(f.mul(r1[i], r2[j]), f.mul(r1[j], r2[i])); };
    if (!minor(0, 1).is_zero() || !minor(0, 2).is_zero() || !minor(1, 2).is_zero()) return 2;
    const auto nz = [](const JacobianRow& r) {
        return std::any_of(r.begin(), r.end(), [](FieldElem e) { return !e.is_zero(); });
    };
    return (nz(r1) || nz(r2)) ? 1 : 0;
}

SmoothnessReport smoothness_affine(const TowerField& f, const CurvePointSet& s) {
    const std::uint64_t n = f.params().n;
    const std::uint64_t d = n * n - n + 1;
    const UniPoly h = build_h(f);
    const UniPoly dh = poly::derivative(f, h);
    const FieldElem coef_n = f.from_int(static_cast<std::int64_t>(n % f.characteristic()));
    const FieldElem coef_n1 = f.from_int(static_cast<std::int64_t>((n + 1) % f.characteristic()));
    const FieldElem coef_d = f.from_int(static_cast<std::int64_t>(d % f.characteristic()));

    std::size_t checked = 0;
    bool ok = true;
    const auto count = static_cast<std::int64_t>(s.points.size());
#pragma omp parallel for reduction(+ : checked) reduction(&& : ok) schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const ProjPoint& p = s.points[static_cast<std::size_t>(i)];
        if (!p.is_affine()) continue;
        const FieldElem x = p.x(), y = p.y(), z = p.z();
        // F2 = X^n + X - Y^{n+1}
        const JacobianRow f2{f.add(f.mul(coef_n, f.pow(x, n - 1)), f.one()),
                             f.neg(f.mul(coef_n1, f.pow(y, n))), f.zero()};
        // F1 = Z^d - Y h(X)
        const JacobianRow f1{f.neg(f.mul(y, poly::eval(f, dh, x))), f.neg(poly::eval(f, h, x)),
                             f.mul(coef_d, f.pow(z, d - 1))};
        ++checked;
        ok = ok && jacobian_rank(f, f1, f2) == 2;
    }
    return {checked, ok};
}

CoveringObstruction covering_obstruction(std::uint64_t n, std::uint64_t point_count) {
    if (n < 2) throw ArgumentError("n must be at least 2");
    if (point_count == 0) throw ArgumentError("point count must be positive");
    const std::uint64_t n3 = checked_pow(n, 3);
    const std::uint64_t num = checked_pow(n, 6) - n3 - 2;
    const std::uint64_t den = (n3 + 1) * (n * n - 2);
    const std::uint64_t hermitian_points = checked_pow(n, 9) + 1;
    CoveringObstruction r;
    r.m_max_genus = num / den;
    r.m_min_count = (hermitian_points + point_count - 1) / point_count;
    r.contradiction = r.m_min_count > r.m_max_genus;
    return r;
}

FiberStats fiber_structure(const TowerField& f) {
    const auto& prm = f.params();
    const std::uint64_t n = prm.n;
    const std::uint64_t d = n * n - n + 1;
    const auto size = static_cast<std::uint32_t>(prm.size);
    const UniPoly h = build_h(f);

    std::vector<std::uint32_t> roots(size, 0);  // #{z : z^d = v}
    for (std::uint32_t z = 0; z < size; ++z) ++roots[f.pow(FieldElem{z}, d).code];

    FiberStats st;
    for (std::uint32_t xc = 0; xc < size; ++xc) {
        const FieldElem x{xc};
        const FieldElem s = f.add(f.pow(x, n), x);
        const FieldElem hx = poly::eval(f, h, x);
        for (std::uint32_t yc = 0; yc < size; ++yc) {
            const FieldElem y{yc};
            if (f.pow(y, n + 1) != s) continue;
            ++st.cone_points;
            const FieldElem w = f.mul(y, hx);
            const std::uint32_t c = roots[w.code];
            if (w.is_zero()) {
                (c == 1 ? st.zero_fibers : st.irregular_fibers)++;
            } else if (c == d) {
                ++st.full_fibers;
            } else if (c == 0) {
                ++st.empty_fibers;
            } else {
                ++st.irregular_fibers;
            }
        }
    }
    return st;
}

namespace {

nlohmann::ordered_json digits_json(const TowerField& f, FieldElem e) { return f.digits(e); }

FieldElem elem_from_json(const TowerField& f, const nlohmann::json& j) {
    const auto d = j.get<std::vector<std::uint32_t>>();
    return f.from_digits(d);
}

nlohmann::ordered_json header_json(const TowerField& f) {
    const auto& prm = f.params();
    nlohmann::ordered_json g3 = nlohmann::ordered_json::array();
    for (FieldElem c : f.g3()) {
        auto d = f.digits(c);
        d.resize(2 * prm.h);
        g3.push_back(d);
    }
    return {{"p", prm.p}, {"h", prm.h}, {"g2", f.g2()}, {"g3", g3}};
}

}  // namespace

void write_jsonl(std::ostream& os, const TowerField& f, const CurvePointSet& s) {
    os << header_json(f).dump() << '\n';
    for (const auto& p : s.points) {
        const nlohmann::ordered_json rec = {{"x", digits_json(f, p.x())},
                                    {"y", digits_json(f, p.y())},
                                    {"z", digits_json(f, p.z())},
                                    {"t", digits_json(f, p.t())}};
        os << rec.dump() << '\n';
    }
}

CurvePointSet read_jsonl(std::istream& is, const TowerField& f) {
    std::string line;
    if (!std::getline(is, line)) throw ArgumentError("missing JSONL header");
    CurvePointSet out{f.params(), f.id(), {}};
    try {
        // Key order is not significant on input.
        if (nlohmann::json::parse(line) != nlohmann::json::parse(header_json(f).dump())) {
            throw ArgumentError("JSONL header does not match the tower");
        }
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            const auto rec = nlohmann::json::parse(line);
            out.points.push_back(ProjPoint{{elem_from_json(f, rec.at("x")), elem_from_json(f, rec.at("y")),
                                            elem_from_json(f, rec.at("z")), elem_from_json(f, rec.at("t"))}});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("malformed JSONL: ") + e.what());
    }
    return out;
}

}  // namespace gk
