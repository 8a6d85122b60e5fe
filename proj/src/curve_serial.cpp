#include "gk/curve.hpp"

namespace gk::serial {

namespace {

FieldElem eval_reference(const TowerField& f, const UniPoly& a, FieldElem x) {
    FieldElem acc = f.zero();
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul_reference(acc, x), c[i]);
    return acc;
}

}  // namespace

CurvePointSet enumerate_points(const TowerField& f) {
    const auto& prm = f.params();
    const std::uint64_t n = prm.n;
    const std::uint64_t d = n * n - n + 1;
    const auto size = static_cast<std::uint32_t>(prm.size);
    const UniPoly h = build_h(f);

    std::vector<FieldElem> trace(size), norm(size), zpow(size), hx(size);
    for (std::uint32_t c = 0; c < size; ++c) {
        const FieldElem e{c};
        trace[c] = f.add(f.pow_reference(e, n), e);
        norm[c] = f.pow_reference(e, n + 1);
        zpow[c] = f.pow_reference(e, d);
        hx[c] = eval_reference(f, h, e);
    }

    CurvePointSet out{prm, f.id(), {}};
    for (std::uint32_t x = 0; x < size; ++x) {
        for (std::uint32_t y = 0; y < size; ++y) {
            if (trace[x] != norm[y]) continue;
            const FieldElem w = f.mul_reference(FieldElem{y}, hx[x]);
            for (std::uint32_t z = 0; z < size; ++z) {
                if (zpow[z] == w) out.points.push_back(affine_point(FieldElem{x}, FieldElem{y}, FieldElem{z}));
            }
        }
    }
    out.points.push_back(infinite_point());
    sort_canonical(f, out.points);
    return out;
}

}  // namespace gk::serial
