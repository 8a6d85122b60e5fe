#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "gk/curve.hpp"
#include "gk/tower.hpp"

namespace gk {

/// Invertible 4x4 matrix over F_{q^2} acting on column vectors (X, Y, Z, T),
/// row-major. All collineations built here have third row and column equal to
/// e_3, so products of them stay exact matrices with no scalar ambiguity.
struct Collineation {
    std::array<FieldElem, 16> m{};

    FieldElem at(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }
    FieldElem& at(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }

    friend bool operator==(const Collineation&, const Collineation&) = default;
};

struct CollineationHash {
    std::size_t operator()(const Collineation& c) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto e : c.m) {
            h ^= e.code;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

namespace col {

Collineation identity(const TowerField& f);
Collineation diag(const TowerField& f, FieldElem a, FieldElem b, FieldElem c, FieldElem d);
/// Lift of a 3x3 matrix acting on (X, Y, T): Z is inserted as the third
/// coordinate with row and column e_3.
Collineation lift(const TowerField& f, const std::array<std::array<FieldElem, 3>, 3>& a);
Collineation multiply(const TowerField& f, const Collineation& a, const Collineation& b);
bool has_fixed_z_row_and_column(const TowerField& f, const Collineation& c);

}  // namespace col

/// Matrix-vector product followed by normalization.
ProjPoint apply(const TowerField& f, const Collineation& c, const ProjPoint& p);

/// Lifted Q_(a,b) for every (a, b) in F_{n^2}^2 with a^n + a = b^{n+1}, lifted
/// H_k for every k in F_{n^2}^*, and lifted W, in that order.
std::vector<Collineation> su3_generators(const TowerField& f);
/// diag[l, l, 1, l] for every l with l^{n^2-n+1} = 1, l = 1 first.
std::vector<Collineation> cyclic_generators(const TowerField& f);
/// diag[r^-1, r^{n^2-n}, 1, r^-1] with r a primitive (n^3+1)-th root of
/// unity, present only when 3 | n+1.
std::optional<Collineation> extra_generator(const TowerField& f);

Collineation q_matrix(const TowerField& f, FieldElem a, FieldElem b);
Collineation h_matrix(const TowerField& f, FieldElem k);
Collineation w_matrix(const TowerField& f);

/// True iff every generator maps the point set bijectively onto itself.
bool verify_preserves(const TowerField& f, std::span<const Collineation> gens, const CurvePointSet& s);

std::size_t fixed_points(const TowerField& f, const Collineation& c, const CurvePointSet& s);

/// n^3 (n^3+1)(n^2-1)(n^2-n+1).
std::uint64_t aut_order(std::uint64_t n);
/// (n^3+1) n^3 (n^2-1).
std::uint64_t su3_order(std::uint64_t n);

/// Checks 2g - 2 = (n^2-n+1)(2g' - 2) + (n^3+1)(n^2-n) with g' = (n^2-n)/2.
bool hurwitz_genus_check(std::uint64_t n);

inline constexpr std::size_t kDefaultClosureCap = 100000;

/// Closure of a generator set under multiplication.
class GroupClosure {
public:
    GroupClosure() = default;
    explicit GroupClosure(std::vector<Collineation> elements);

    std::size_t order() const { return elements_.size(); }
    const std::vector<Collineation>& elements() const { return elements_; }
    bool contains(const Collineation& c) const { return index_.contains(c); }

private:
    std::vector<Collineation> elements_;
    std::unordered_set<Collineation, CollineationHash> index_;
};

/// Breadth-first closure; each frontier is multiplied by every generator in
/// parallel and deduplicated serially, so the element set is schedule
/// independent. Throws LimitError past max_elements.
GroupClosure group_closure(const TowerField& f, std::span<const Collineation> gens,
                           std::size_t max_elements = kDefaultClosureCap);

namespace serial {
GroupClosure group_closure(const TowerField& f, std::span<const Collineation> gens,
                           std::size_t max_elements = kDefaultClosureCap);
}  // namespace serial

}  // namespace gk
