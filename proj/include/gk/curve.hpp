#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_set>
#include <vector>

#include "gk/poly.hpp"
#include "gk/tower.hpp"

namespace gk {

/// Homogeneous coordinates (x, y, z, t) in PG(3, q^2), last nonzero entry 1,
/// so affine points carry t = 1 and X_inf is (1, 0, 0, 0).
struct ProjPoint {
    std::array<FieldElem, 4> c{};

    FieldElem x() const { return c[0]; }
    FieldElem y() const { return c[1]; }
    FieldElem z() const { return c[2]; }
    FieldElem t() const { return c[3]; }
    bool is_affine() const { return c[3] == FieldElem{1}; }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

struct ProjPointHash {
    std::size_t operator()(const ProjPoint& p) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto e : p.c) {
            h ^= e.code + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Scales v so its last nonzero coordinate is 1. Throws on the zero vector.
ProjPoint normalize(const TowerField& f, std::array<FieldElem, 4> v);
ProjPoint affine_point(FieldElem x, FieldElem y, FieldElem z);
ProjPoint infinite_point();  // X_inf = (1, 0, 0, 0)

/// Canonical order: lexicographic on the concatenated digit vectors of x, y, z, t.
bool canonical_less(const TowerField& f, const ProjPoint& a, const ProjPoint& b);
void sort_canonical(const TowerField& f, std::vector<ProjPoint>& pts);

/// The F_{q^2}-rational points of the curve, canonically sorted.
struct CurvePointSet {
    TowerParams params;
    std::uint64_t tower_id = 0;
    std::vector<ProjPoint> points;

    std::size_t size() const { return points.size(); }
    std::size_t affine_count() const;
};

/// Hash-set view of a point set for membership queries.
class PointIndex {
public:
    explicit PointIndex(const CurvePointSet& s) : set_(s.points.begin(), s.points.end()) {}
    bool contains(const ProjPoint& p) const { return set_.contains(p); }
    std::size_t size() const { return set_.size(); }

private:
    std::unordered_set<ProjPoint, ProjPointHash> set_;
};

std::uint64_t genus(std::uint64_t n);
/// q^2 + 1 + 2 g q with q = n^3.
std::uint64_t expected_point_count(std::uint64_t n);
/// n^8 - n^6 + n^3 + 1, the count printed in the covering argument; it
/// disagrees with expected_point_count and is only reported.
std::uint64_t printed_point_count(std::uint64_t n);

/// Default cap on q^2 for enumeration (n = 5).
inline constexpr std::uint64_t kDefaultEnumerationCap = 15625;

/// All affine (x, y, z) with x^n + x = y^{n+1} and z^{n^2-n+1} = y h(x), plus
/// X_inf. Parallel over x; the result does not depend on the schedule.
CurvePointSet enumerate_points(const TowerField& f,
                               std::uint64_t max_field_size = kDefaultEnumerationCap);

namespace serial {
/// Direct search: every (x, y) pair is tested against the cone equation and
/// every z is tested against the surface equation. No discrete logs.
CurvePointSet enumerate_points(const TowerField& f);
}  // namespace serial

/// Homogeneous Hermitian surface X^{q}T + XT^{q} = Y^{q+1} + Z^{q+1}.
bool on_hermitian_surface(const TowerField& f, const ProjPoint& p);
bool verify_on_hermitian_surface(const TowerField& f, std::span<const ProjPoint> points);
inline bool verify_on_hermitian_surface(const TowerField& f, const CurvePointSet& s) {
    return verify_on_hermitian_surface(f, std::span<const ProjPoint>(s.points));
}

/// Affine equations of the cone and the surface, evaluated at a point.
bool on_curve_affine(const TowerField& f, const UniPoly& h, FieldElem x, FieldElem y, FieldElem z);

using JacobianRow = std::array<FieldElem, 3>;
/// Rank (0, 1 or 2) of the 2x3 matrix with the given rows.
int jacobian_rank(const TowerField& f, const JacobianRow& r1, const JacobianRow& r2);

struct SmoothnessReport {
    std::size_t checked = 0;
    bool all_rank2 = false;
};

SmoothnessReport smoothness_affine(const TowerField& f, const CurvePointSet& s);

struct CoveringObstruction {
    std::uint64_t m_max_genus = 0;
    std::uint64_t m_min_count = 0;
    bool contradiction = false;
};

/// Degree bounds for a covering by the Hermitian curve over F_{q^2}: the genus
/// bound floor((n^6-n^3-2)/((n^3+1)(n^2-2))) against the point-count bound
/// ceil((n^9+1)/point_count).
CoveringObstruction covering_obstruction(std::uint64_t n, std::uint64_t point_count);

struct FiberStats {
    std::size_t cone_points = 0;       // affine (x, y) on the cone
    std::size_t zero_fibers = 0;       // y h(x) = 0, exactly one z
    std::size_t full_fibers = 0;       // n^2-n+1 values of z
    std::size_t empty_fibers = 0;      // no z
    std::size_t irregular_fibers = 0;  // anything else (must be 0)
};

/// Counts z-solutions over every affine point of the cone by direct search.
FiberStats fiber_structure(const TowerField& f);

/// One JSON object per line: a header {"p","h","g2","g3"} then one
/// {"x","y","z","t"} record per point, each coordinate a flat digit array.
void write_jsonl(std::ostream& os, const TowerField& f, const CurvePointSet& s);
CurvePointSet read_jsonl(std::istream& is, const TowerField& f);

}  // namespace gk
