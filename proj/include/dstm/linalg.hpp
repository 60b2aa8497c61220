#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "dstm/error.hpp"
#include "dstm/fields.hpp"

namespace dstm {

// Dense row-major matrix over a field context F (see fields.hpp). All
// elimination is exact; there is no floating point anywhere in this library.
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    size_t rows = 0;
    size_t cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Elem& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Elem& at(size_t r, size_t c) const { return a[r * cols + c]; }

    static Mat identity(const F& fld, size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = fld.one();
        return m;
    }

    std::vector<Elem> row(size_t r) const {
        return std::vector<Elem>(a.begin() + r * cols, a.begin() + (r + 1) * cols);
    }

    std::vector<Elem> col(size_t c) const {
        std::vector<Elem> v(rows);
        for (size_t r = 0; r < rows; ++r) v[r] = at(r, c);
        return v;
    }

    void set_row(size_t r, const std::vector<Elem>& v) {
        std::copy(v.begin(), v.end(), a.begin() + r * cols);
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class F>
bool is_zero_mat(const F& fld, const Mat<F>& m) {
    for (const auto& x : m.a)
        if (!fld.is_zero(x)) return false;
    return true;
}

template <class F>
Mat<F> transpose(const Mat<F>& m) {
    Mat<F> t(m.cols, m.rows);
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

template <class F>
Mat<F> matmul(const F& fld, const Mat<F>& x, const Mat<F>& y) {
    require(x.cols == y.rows, "matmul dimension mismatch");
    Mat<F> z(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (fld.is_zero(xik)) continue;
            for (size_t j = 0; j < y.cols; ++j)
                z.at(i, j) = fld.add(z.at(i, j), fld.mul(xik, y.at(k, j)));
        }
    return z;
}

template <class F>
std::vector<typename F::Elem> matvec(const F& fld, const Mat<F>& m,
                                     const std::vector<typename F::Elem>& v) {
    require(m.cols == v.size(), "matvec dimension mismatch");
    std::vector<typename F::Elem> out(m.rows, fld.zero());
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c) {
            if (fld.is_zero(m.at(r, c)) || fld.is_zero(v[c])) continue;
            out[r] = fld.add(out[r], fld.mul(m.at(r, c), v[c]));
        }
    return out;
}

// Stacks blocks vertically; all blocks must share a column count.
template <class F>
Mat<F> vstack(const std::vector<Mat<F>>& blocks) {
    require(!blocks.empty(), "vstack of nothing");
    size_t rows = 0;
    for (const auto& b : blocks) {
        require(b.cols == blocks[0].cols, "vstack column mismatch");
        rows += b.rows;
    }
    Mat<F> m(rows, blocks[0].cols);
    size_t r0 = 0;
    for (const auto& b : blocks) {
        std::copy(b.a.begin(), b.a.end(), m.a.begin() + r0 * m.cols);
        r0 += b.rows;
    }
    return m;
}

// Reduced row echelon form, in place. Pivot choice is first nonzero in
// column order, so the result is canonical: leading entries are 1, pivot
// columns strictly increase, and pivot columns are cleared above and below.
template <class F>
struct RrefResult {
    Mat<F> mat;
    size_t rank = 0;
    std::vector<size_t> pivots;
};

template <class F>
RrefResult<F> rref(const F& fld, Mat<F> m) {
    RrefResult<F> out;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t pr = row;
        while (pr < m.rows && fld.is_zero(m.at(pr, col))) ++pr;
        if (pr == m.rows) continue;
        if (pr != row)
            for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
        const auto inv = fld.div(fld.one(), m.at(row, col));
        for (size_t c = col; c < m.cols; ++c) m.at(row, c) = fld.mul(m.at(row, c), inv);
        for (size_t r = 0; r < m.rows; ++r) {
            if (r == row || fld.is_zero(m.at(r, col))) continue;
            const auto f = m.at(r, col);
            for (size_t c = col; c < m.cols; ++c)
                m.at(r, c) = fld.sub(m.at(r, c), fld.mul(f, m.at(row, c)));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.mat = std::move(m);
    return out;
}

template <class F>
size_t rank_of(const F& fld, const Mat<F>& m) {
    return rref(fld, m).rank;
}

// A linear subspace of K^ambient in canonical form: the basis matrix is the
// RREF of any spanning set, so two Subspace values are equal as values
// exactly when they are equal as subspaces.
template <class F>
struct Subspace {
    size_t ambient = 0;
    Mat<F> basis; // dim x ambient, in RREF
    std::vector<size_t> pivots;

    size_t dim() const { return basis.rows; }

    static Subspace zero(size_t ambient) {
        Subspace s;
        s.ambient = ambient;
        s.basis = Mat<F>(0, ambient);
        return s;
    }

    static Subspace full(const F& fld, size_t ambient) {
        Subspace s;
        s.ambient = ambient;
        s.basis = Mat<F>::identity(fld, ambient);
        s.pivots.resize(ambient);
        for (size_t i = 0; i < ambient; ++i) s.pivots[i] = i;
        return s;
    }

    // Span of the rows, canonicalized.
    static Subspace from_rows(const F& fld, const Mat<F>& rows) {
        auto rr = rref(fld, rows);
        Subspace s;
        s.ambient = rows.cols;
        s.basis = Mat<F>(rr.rank, rows.cols);
        std::copy(rr.mat.a.begin(), rr.mat.a.begin() + rr.rank * rows.cols, s.basis.a.begin());
        s.pivots = rr.pivots;
        return s;
    }

    // Coordinate subspace spanned by the given standard basis vectors.
    static Subspace coordinate(const F& fld, size_t ambient, std::vector<size_t> idx) {
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        Subspace s;
        s.ambient = ambient;
        s.basis = Mat<F>(idx.size(), ambient);
        for (size_t i = 0; i < idx.size(); ++i) {
            require(idx[i] < ambient, "coordinate index out of range");
            s.basis.at(i, idx[i]) = fld.one();
        }
        s.pivots = idx;
        return s;
    }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && pivots == o.pivots && basis == o.basis;
    }
};

// v reduced modulo the subspace: subtract the unique basis combination
// matching v at the pivot coordinates. Zero residue <=> membership.
template <class F>
std::vector<typename F::Elem> residue(const F& fld, const Subspace<F>& s,
                                      std::vector<typename F::Elem> v) {
    require(v.size() == s.ambient, "residue ambient mismatch");
    for (size_t i = 0; i < s.dim(); ++i) {
        const auto c = v[s.pivots[i]];
        if (fld.is_zero(c)) continue;
        for (size_t j = 0; j < s.ambient; ++j) {
            const auto& b = s.basis.at(i, j);
            if (!fld.is_zero(b)) v[j] = fld.sub(v[j], fld.mul(c, b));
        }
    }
    return v;
}

template <class F>
bool subspace_contains(const F& fld, const Subspace<F>& s,
                       const std::vector<typename F::Elem>& v) {
    auto r = residue(fld, s, v);
    return std::all_of(r.begin(), r.end(), [&](const auto& x) { return fld.is_zero(x); });
}

// Coordinates of v in the canonical basis, if v lies in the subspace.
template <class F>
std::optional<std::vector<typename F::Elem>> coords_in(const F& fld, const Subspace<F>& s,
                                                       std::vector<typename F::Elem> v) {
    require(v.size() == s.ambient, "coords ambient mismatch");
    std::vector<typename F::Elem> coords(s.dim(), fld.zero());
    for (size_t i = 0; i < s.dim(); ++i) {
        const auto c = v[s.pivots[i]];
        coords[i] = c;
        if (fld.is_zero(c)) continue;
        for (size_t j = 0; j < s.ambient; ++j) {
            const auto& b = s.basis.at(i, j);
            if (!fld.is_zero(b)) v[j] = fld.sub(v[j], fld.mul(c, b));
        }
    }
    for (const auto& x : v)
        if (!fld.is_zero(x)) return std::nullopt;
    return coords;
}

// Intersection and sum in one elimination (Zassenhaus block trick).
template <class F>
struct MeetJoin {
    Subspace<F> meet;
    Subspace<F> join;
};

template <class F>
MeetJoin<F> subspace_meet_join(const F& fld, const Subspace<F>& x, const Subspace<F>& y) {
    require(x.ambient == y.ambient, "meet/join ambient mismatch");
    const size_t n = x.ambient;
    Mat<F> z(x.dim() + y.dim(), 2 * n);
    for (size_t i = 0; i < x.dim(); ++i)
        for (size_t j = 0; j < n; ++j) {
            z.at(i, j) = x.basis.at(i, j);
            z.at(i, n + j) = x.basis.at(i, j);
        }
    for (size_t i = 0; i < y.dim(); ++i)
        for (size_t j = 0; j < n; ++j) z.at(x.dim() + i, j) = y.basis.at(i, j);
    auto rr = rref(fld, std::move(z));
    Mat<F> joinrows(0, n), meetrows(0, n);
    std::vector<std::vector<typename F::Elem>> jr, mr;
    for (size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] < n) {
            jr.emplace_back(rr.mat.a.begin() + i * 2 * n, rr.mat.a.begin() + i * 2 * n + n);
        } else {
            mr.emplace_back(rr.mat.a.begin() + i * 2 * n + n, rr.mat.a.begin() + (i + 1) * 2 * n);
        }
    }
    joinrows = Mat<F>(jr.size(), n);
    for (size_t i = 0; i < jr.size(); ++i) joinrows.set_row(i, jr[i]);
    meetrows = Mat<F>(mr.size(), n);
    for (size_t i = 0; i < mr.size(); ++i) meetrows.set_row(i, mr[i]);
    MeetJoin<F> out;
    out.join = Subspace<F>::from_rows(fld, joinrows);
    out.meet = Subspace<F>::from_rows(fld, meetrows);
    return out;
}

// RREF, rank and right null space in one pass. The kernel comes back
// canonical (its own RREF) like every other Subspace.
template <class F>
struct RrefRankKernel {
    Mat<F> rref;
    size_t rank = 0;
    std::vector<size_t> pivots;
    Subspace<F> kernel;
};

template <class F>
RrefRankKernel<F> rref_rank_kernel(const F& fld, const Mat<F>& m) {
    auto rr = rref(fld, m);
    RrefRankKernel<F> out;
    out.rank = rr.rank;
    out.pivots = rr.pivots;
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    Mat<F> ker(m.cols - rr.rank, m.cols);
    size_t kr = 0;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        ker.at(kr, f) = fld.one();
        for (size_t i = 0; i < rr.rank; ++i) ker.at(kr, rr.pivots[i]) = fld.neg(rr.mat.at(i, f));
        ++kr;
    }
    out.kernel = Subspace<F>::from_rows(fld, ker);
    out.rref = std::move(rr.mat);
    return out;
}

template <class F>
Subspace<F> kernel_of(const F& fld, const Mat<F>& m) {
    return rref_rank_kernel(fld, m).kernel;
}

// Row space / column space as canonical subspaces.
template <class F>
Subspace<F> row_space(const F& fld, const Mat<F>& m) {
    return Subspace<F>::from_rows(fld, m);
}

template <class F>
Subspace<F> column_space(const F& fld, const Mat<F>& m) {
    return Subspace<F>::from_rows(fld, transpose(m));
}

// Matrix of the ambient linear map L restricted to V, expressed in the
// canonical bases of V (domain) and W (codomain). Requires L(V) <= W.
template <class F>
Mat<F> restrict_map(const F& fld, const Mat<F>& L, const Subspace<F>& V, const Subspace<F>& W) {
    require(L.cols == V.ambient && L.rows == W.ambient, "restrict_map ambient mismatch");
    Mat<F> out(W.dim(), V.dim());
    for (size_t j = 0; j < V.dim(); ++j) {
        auto img = matvec(fld, L, V.basis.row(j));
        auto c = coords_in(fld, W, std::move(img));
        require(c.has_value(), "restricted map leaves the target subspace");
        for (size_t i = 0; i < W.dim(); ++i) out.at(i, j) = (*c)[i];
    }
    return out;
}

// Betti numbers of a finite chain complex given as boundary matrices
// bnd[p] : C_p -> C_{p-1} for p = 1..P, with P = p_max (top boundary treated
// as zero) or P = p_max + 1 (top boundary supplied). dims holds dim C_p for
// p = 0..p_max. Checks shape compatibility and that consecutive boundaries
// compose to zero.
template <class F>
std::vector<size_t> chain_betti(const F& fld, const std::vector<size_t>& dims,
                                const std::vector<Mat<F>>& bnd) {
    require(!dims.empty(), "chain_betti needs at least degree 0");
    const size_t pmax = dims.size() - 1;
    require(bnd.size() == pmax || bnd.size() == pmax + 1,
            "chain_betti expects boundaries through p_max or p_max+1");
    for (size_t p = 1; p <= bnd.size(); ++p) {
        const auto& b = bnd[p - 1];
        require(b.rows == dims[p - 1], "boundary row count mismatch");
        if (p <= pmax) require(b.cols == dims[p], "boundary column count mismatch");
    }
    for (size_t p = 1; p + 1 <= bnd.size(); ++p) {
        require(is_zero_mat(fld, matmul(fld, bnd[p - 1], bnd[p])),
                "boundaries do not compose to zero");
    }
    std::vector<size_t> ranks(bnd.size() + 2, 0);
    for (size_t p = 1; p <= bnd.size(); ++p) ranks[p] = rank_of(fld, bnd[p - 1]);
    std::vector<size_t> betti(pmax + 1);
    for (size_t p = 0; p <= pmax; ++p) {
        const size_t cut = ranks[p] + ranks[p + 1];
        require(dims[p] >= cut, "negative Betti number; inconsistent complex");
        betti[p] = dims[p] - cut;
    }
    return betti;
}

} // namespace dstm
