#include <algorithm>
#include <string>

#include "gk/numsg.hpp"

namespace gk {

std::uint64_t pole_order(std::uint64_t n, const Monomial& mono) {
    const auto a = weierstrass_generators(n);
    return mono.j1 * a[0] + mono.j2 * a[1] + mono.j3 * a[2];
}

std::vector<Monomial> rr_basis(std::uint64_t n, std::uint64_t m) {
    const auto a = weierstrass_generators(n);
    std::vector<Monomial> out;
    for (std::uint64_t j3 = 0; j3 <= n - 1; ++j3) {
        for (std::uint64_t j2 = 0; j2 <= n * n - n; ++j2) {
            const std::uint64_t used = j2 * a[1] + j3 * a[2];
            if (used > m) break;
            for (std::uint64_t j1 = 0; used + j1 * a[0] <= m; ++j1) out.push_back({j1, j2, j3});
        }
    }
    std::sort(out.begin(), out.end(),
              [n](const Monomial& x, const Monomial& y) { return pole_order(n, x) < pole_order(n, y); });
    return out;
}

bool IncrementalRank::insert(std::vector<FieldElem> row) {
    const TowerField& f = *f_;
    row.resize(columns_);
    const auto cols = static_cast<std::int64_t>(columns_);
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const FieldElem factor = row[pivots_[k]];
        if (factor.is_zero()) continue;
        const auto& pr = rows_[k];
#pragma omp parallel for schedule(static) if (cols > 8192)
        for (std::int64_t c = 0; c < cols; ++c) {
            const auto i = static_cast<std::size_t>(c);
            if (!pr[i].is_zero()) row[i] = f.sub(row[i], f.mul(factor, pr[i]));
        }
    }
    const auto lead = std::find_if(row.begin(), row.end(), [](FieldElem e) { return !e.is_zero(); });
    if (lead == row.end()) return false;
    const FieldElem s = f.inv(*lead);
    for (auto& e : row) e = f.mul(e, s);
    pivots_.push_back(static_cast<std::size_t>(lead - row.begin()));
    rows_.push_back(std::move(row));
    return true;
}

namespace serial {

std::size_t matrix_rank(const TowerField& f, std::vector<std::vector<FieldElem>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const FieldElem s = f.inv(rows[rank][c]);
        for (auto& e : rows[rank]) e = f.mul(e, s);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            const FieldElem factor = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) {
                rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace serial

std::vector<FieldElem> evaluate_monomial(const TowerField& f, const Monomial& mono, const CurvePointSet& s) {
    std::vector<FieldElem> out;
    out.reserve(s.points.size());
    for (const auto& p : s.points) {
        if (!p.is_affine()) continue;
        out.push_back(f.mul(f.mul(f.pow(p.y(), mono.j1), f.pow(p.z(), mono.j2)), f.pow(p.x(), mono.j3)));
    }
    return out;
}

bool rr_independence_check(const TowerField& f, std::span<const Monomial> monomials, const CurvePointSet& s) {
    const std::size_t cols = s.affine_count();
    if (monomials.size() > cols) {
        throw LimitError("basis of size " + std::to_string(monomials.size()) + " exceeds the " +
                         std::to_string(cols) + " affine evaluation points");
    }
    IncrementalRank rank(f, cols);
    for (const auto& mono : monomials) rank.insert(evaluate_monomial(f, mono, s));
    return rank.rank() == monomials.size();
}

bool rr_independence_check(const TowerField& f, std::uint64_t m, const CurvePointSet& s) {
    const auto basis = rr_basis(f.params().n, m);
    return rr_independence_check(f, std::span<const Monomial>(basis), s);
}

std::vector<bool> rr_independence_sweep(const TowerField& f, std::uint64_t m_max, const CurvePointSet& s) {
    const std::uint64_t n = f.params().n;
    const auto basis = rr_basis(n, m_max);
    const std::size_t cols = s.affine_count();
    if (basis.size() > cols) {
        throw LimitError("basis of size " + std::to_string(basis.size()) + " exceeds the " +
                         std::to_string(cols) + " affine evaluation points");
    }
    IncrementalRank rank(f, cols);
    std::vector<bool> out(m_max + 1, false);
    std::size_t next = 0;
    bool independent = true;
    for (std::uint64_t m = 0; m <= m_max; ++m) {
        while (next < basis.size() && pole_order(n, basis[next]) == m) {
            independent = rank.insert(evaluate_monomial(f, basis[next], s)) && independent;
            ++next;
        }
        out[m] = independent;
    }
    return out;
}

}  // namespace gk
