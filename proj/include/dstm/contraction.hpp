#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "dstm/normalization.hpp"
#include "dstm/tensor.hpp"

namespace dstm {

// Diagonal shift homotopy H_p : X_p -> X_{p+1}: the output vanishes on any
// index touching the zero face and otherwise reads the input at m - (1..1).
template <class F>
Tensor<F> homotopy_apply(const Tensor<F>& t) {
    const int p = t.degree;
    Tensor<F> out(t.shape, p + 1);
    const auto bounds = degree_bounds(t.shape, p + 1);
    MultiIndex m(t.shape.k(), 0);
    size_t r = 0;
    do {
        bool touches_zero = false;
        for (int v : m)
            if (v == 0) { touches_zero = true; break; }
        if (!touches_zero) {
            MultiIndex shifted(m);
            for (auto& v : shifted) --v;
            out.c[r] = t.c[index_rank(t.shape, p, shifted)];
        }
        ++r;
    } while (next_index(bounds, m));
    return out;
}

// Checks boundary H + H boundary = id on the standard basis of every
// degree through p_max (at degree 0 the second term is absent).
template <class F>
bool contraction_check(const F& fld, const Shape& s, int p_max) {
    require(p_max >= 0, "p_max must be nonnegative");
    for (int p = 0; p <= p_max; ++p) {
        const auto bounds = degree_bounds(s, p);
        MultiIndex m(s.k(), 0);
        do {
            const auto e = basis_tensor(fld, s, p, m);
            auto lhs = boundary(fld, homotopy_apply(e));
            if (p >= 1) lhs = tensor_add(fld, lhs, homotopy_apply(boundary(fld, e)));
            if (!(lhs == e)) return false;
        } while (next_index(bounds, m));
    }
    return true;
}

// Shifted depth of a tensor: the least min_a(m_a) - p over the support.
// The zero tensor sits below every level; that is reported as nullopt
// rather than a sentinel integer.
template <class F>
std::optional<int> filtration_level(const F& fld, const Tensor<F>& t) {
    std::optional<int> level;
    const auto bounds = degree_bounds(t.shape, t.degree);
    MultiIndex m(t.shape.k(), 0);
    size_t r = 0;
    do {
        if (!fld.is_zero(t.c[r])) {
            int depth = m[0];
            for (int v : m) depth = std::min(depth, v);
            const int lv = depth - t.degree;
            level = level ? std::min(*level, lv) : lv;
        }
        ++r;
    } while (next_index(bounds, m));
    return level;
}

namespace detail {

// Projection onto the graded piece at level t (coordinates with shifted
// depth exactly t). Coordinate-aligned, so it is the quotient map of the
// filtration step.
template <class F>
Tensor<F> graded_part(const F& fld, const Tensor<F>& x, int t) {
    Tensor<F> out(x.shape, x.degree);
    const auto bounds = degree_bounds(x.shape, x.degree);
    MultiIndex m(x.shape.k(), 0);
    size_t r = 0;
    do {
        if (!fld.is_zero(x.c[r])) {
            int depth = m[0];
            for (int v : m) depth = std::min(depth, v);
            if (depth - x.degree == t) out.c[r] = x.c[r];
        }
        ++r;
    } while (next_index(bounds, m));
    return out;
}

} // namespace detail

// Filtration discipline for the shifted depth: faces and the homotopy
// never lower the level, levels are bounded in [-p, min_a M_a(p) - p], and
// every graded piece is contracted by the induced homotopy (so the
// attached spectral sequence collapses at the first page).
template <class F>
bool graded_collapse_check(const F& fld, const Shape& s, int p_max) {
    require(p_max >= 0, "p_max must be nonnegative");
    for (int p = 0; p <= p_max; ++p) {
        int top = s.bound(0, p);
        for (int a = 0; a < s.k(); ++a) top = std::min(top, s.bound(a, p));
        const auto bounds = degree_bounds(s, p);
        MultiIndex m(s.k(), 0);
        do {
            const auto e = basis_tensor(fld, s, p, m);
            const auto lv = filtration_level(fld, e);
            if (!lv || *lv < -p || *lv > top - p) return false;

            // Monotonicity under the structure maps.
            if (p >= 1) {
                for (int i = 0; i <= p; ++i) {
                    const auto fl = filtration_level(fld, face(e, i));
                    if (fl && *fl < *lv) return false;
                }
            }
            const auto hl = filtration_level(fld, homotopy_apply(e));
            if (hl && *hl < *lv) return false;

            // Induced contraction on the graded piece at this level.
            const int t = *lv;
            auto h_e = detail::graded_part(fld, homotopy_apply(e), t);
            auto lhs = detail::graded_part(fld, boundary(fld, h_e), t);
            if (p >= 1) {
                auto d_e = detail::graded_part(fld, boundary(fld, e), t);
                lhs = tensor_add(fld, lhs, detail::graded_part(fld, homotopy_apply(d_e), t));
            }
            if (!(lhs == e)) return false;
        } while (next_index(bounds, m));
    }
    return true;
}

// Orbit bases for the axis-permutation action on a constant shape: sums
// over S_k-orbits (symmetric part) and signed sums over free orbits
// (alternating part). Both are simplicial submodules.
template <class F>
Subspace<F> symmetric_subspace(const F& fld, const Shape& s, int p) {
    require(s.constant(), "symmetric subspace needs a constant shape");
    const size_t dim = index_count(s, p);
    std::vector<std::vector<typename F::Elem>> rows;
    const auto bounds = degree_bounds(s, p);
    MultiIndex m(s.k(), 0);
    do {
        MultiIndex sorted(m);
        std::sort(sorted.begin(), sorted.end());
        if (sorted != m) continue; // one representative per orbit
        std::vector<typename F::Elem> row(dim, fld.zero());
        std::vector<int> perm(s.k());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end());
        do {
            row[index_rank(s, p, apply_perm_to_index(perm, m))] = fld.one();
        } while (std::next_permutation(perm.begin(), perm.end()));
        rows.push_back(std::move(row));
    } while (next_index(bounds, m));
    Mat<F> basis(rows.size(), dim);
    for (size_t i = 0; i < rows.size(); ++i) basis.set_row(i, rows[i]);
    return Subspace<F>::from_rows(fld, basis);
}

template <class F>
Subspace<F> alternating_subspace(const F& fld, const Shape& s, int p) {
    require(s.constant(), "alternating subspace needs a constant shape");
    const size_t dim = index_count(s, p);
    std::vector<std::vector<typename F::Elem>> rows;
    const auto bounds = degree_bounds(s, p);
    MultiIndex m(s.k(), 0);
    do {
        MultiIndex sorted(m);
        std::sort(sorted.begin(), sorted.end());
        if (sorted != m) continue;
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        std::vector<typename F::Elem> row(dim, fld.zero());
        std::vector<int> perm(s.k());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end());
        do {
            const size_t rk = index_rank(s, p, apply_perm_to_index(perm, m));
            row[rk] = (perm_sign(perm) > 0) ? fld.one() : fld.neg(fld.one());
        } while (std::next_permutation(perm.begin(), perm.end()));
        rows.push_back(std::move(row));
    } while (next_index(bounds, m));
    Mat<F> basis(rows.size(), dim);
    for (size_t i = 0; i < rows.size(); ++i) basis.set_row(i, rows[i]);
    return Subspace<F>::from_rows(fld, basis);
}

// Betti numbers of the subcomplex carried by per-degree subspaces
// (boundaries restricted from the ambient complex); valid through
// p_max - 1 because the top boundary is not supplied.
template <class F>
std::vector<size_t> subcomplex_betti(const F& fld, const Shape& s,
                                     const std::vector<Subspace<F>>& pieces) {
    require(pieces.size() >= 2, "subcomplex needs at least two degrees");
    std::vector<size_t> dims(pieces.size());
    for (size_t p = 0; p < pieces.size(); ++p) dims[p] = pieces[p].dim();
    std::vector<Mat<F>> bnd;
    for (size_t p = 1; p < pieces.size(); ++p)
        bnd.push_back(restrict_map(fld, boundary_matrix(fld, s, static_cast<int>(p)),
                                   pieces[p], pieces[p - 1]));
    return chain_betti(fld, dims, bnd);
}

} // namespace dstm
