#pragma once

#include <vector>

#include "dstm/horn.hpp"
#include "dstm/tensor.hpp"

namespace dstm {

// Normalization idempotent (id - s_0 d_1) ... (id - s_{p-1} d_p), applied
// right factor first: the top face is cleared first and each earlier
// factor preserves the faces already cleared (d_i s_j = s_j d_{i-1} for
// i > j + 1). Projects onto the Moore summand N_p along the degenerate
// subspace D_p; the identity at degree 0.
template <class F>
Tensor<F> em_project(const F& fld, const Tensor<F>& t) {
    Tensor<F> u = t;
    for (int r = t.degree - 1; r >= 0; --r) {
        u = tensor_sub(fld, u, degeneracy(face(u, r + 1), r));
    }
    return u;
}

// The three canonical subspaces of X_p: the Moore summand N_p (kernel of
// every face but d_0; all of X_0 at degree 0), the degenerate part D_p
// (sum of the degeneracy images), and the cycle space Z_p (kernel of every
// face).
template <class F>
struct CanonicalBases {
    Subspace<F> n;
    Subspace<F> d;
    Subspace<F> z;
};

template <class F>
CanonicalBases<F> canonical_bases(const F& fld, const Shape& s, int p) {
    require(p >= 0, "negative degree");
    CanonicalBases<F> out;
    const size_t dim = index_count(s, p);

    require(p < 63, "degree out of supported range");
    std::vector<size_t> n_ranks, z_ranks;
    const uint64_t all = (1ull << (p + 1)) - 1;
    const uint64_t tail = all & ~1ull; // {1..p}
    const auto bounds = degree_bounds(s, p);
    MultiIndex m(s.k(), 0);
    size_t r = 0;
    do {
        uint64_t mask = 0;
        for (int v : m)
            if (v <= p) mask |= 1ull << v;
        if ((mask & tail) == tail) n_ranks.push_back(r);
        if ((mask & all) == all) z_ranks.push_back(r);
        ++r;
    } while (next_index(bounds, m));
    out.n = Subspace<F>::coordinate(fld, dim, n_ranks);
    out.z = Subspace<F>::coordinate(fld, dim, z_ranks);

    if (p == 0) {
        out.d = Subspace<F>::zero(dim);
    } else {
        std::vector<Mat<F>> images;
        for (int i = 0; i < p; ++i) images.push_back(transpose(degeneracy_matrix(fld, s, p - 1, i)));
        out.d = Subspace<F>::from_rows(fld, vstack(images));
    }
    return out;
}

// Direct-sum bookkeeping at one degree: dim X_p agrees with the binomial
// sum over Moore dimensions, and N_p splits off D_p exactly.
struct EzCheckResult {
    size_t dim_x = 0;
    size_t binomial_sum = 0;
    size_t dim_n = 0;
    size_t dim_d = 0;
    size_t dim_meet = 0;
    bool pass = false;
};

template <class F>
EzCheckResult ez_check(const F& fld, const Shape& s, int p) {
    EzCheckResult out;
    out.dim_x = index_count(s, p);
    for (int q = 0; q <= p; ++q) {
        const size_t dim_nq = canonical_bases(fld, s, q).n.dim();
        out.binomial_sum += binomial(p, p - q).convert_to<size_t>() * dim_nq;
    }
    auto cb = canonical_bases(fld, s, p);
    out.dim_n = cb.n.dim();
    out.dim_d = cb.d.dim();
    auto mj = subspace_meet_join(fld, cb.n, cb.d);
    out.dim_meet = mj.meet.dim();
    out.pass = (out.binomial_sum == out.dim_x) && (out.dim_meet == 0) &&
               (mj.join.dim() == out.dim_x) && (out.dim_n + out.dim_d == out.dim_x);
    return out;
}

// Homology of the quotient by the cycle subcomplex: every boundary kills
// Z_r coordinate-wise, the quotient complex is formed on the complementary
// coordinates, and H_r(X/Z) must match Z_{r-1} in dimension for
// 1 <= r <= p_max - 1.
struct QuotientHomologyRow {
    int r = 0;
    size_t dim_h = 0;
    size_t dim_z_prev = 0;
    bool ok = false;
};

struct QuotientHomologyResult {
    std::vector<QuotientHomologyRow> rows;
    bool pass = false;
};

template <class F>
QuotientHomologyResult quotient_homology_check(const F& fld, const Shape& s, int p_max) {
    require(p_max >= 2, "quotient homology needs p_max >= 2");

    std::vector<std::vector<size_t>> z_ranks(p_max + 1), comp(p_max + 1);
    std::vector<size_t> zdim(p_max + 1);
    for (int p = 0; p <= p_max; ++p) {
        auto cb = canonical_bases(fld, s, p);
        z_ranks[p] = cb.z.pivots;
        zdim[p] = cb.z.dim();
        std::vector<bool> in_z(index_count(s, p), false);
        for (size_t rk : z_ranks[p]) in_z[rk] = true;
        for (size_t rk = 0; rk < in_z.size(); ++rk)
            if (!in_z[rk]) comp[p].push_back(rk);
        // The cycle subspace must be a subcomplex killed by the boundary.
        if (p >= 1) {
            for (size_t rk : z_ranks[p]) {
                auto e = basis_tensor(fld, s, p, index_unrank(s, p, rk));
                require(is_zero_tensor(fld, boundary(fld, e)),
                        "cycle coordinate not killed by the boundary");
            }
        }
    }

    // Quotient boundaries on the complementary coordinates. Dropping the
    // Z-coordinates is the quotient projection because Z is spanned by
    // standard basis vectors.
    std::vector<size_t> qdims(p_max + 1);
    for (int p = 0; p <= p_max; ++p) qdims[p] = comp[p].size();
    std::vector<Mat<F>> qbnd;
    for (int p = 1; p <= p_max; ++p) {
        const auto full = boundary_matrix(fld, s, p);
        Mat<F> b(qdims[p - 1], qdims[p]);
        for (size_t r = 0; r < qdims[p - 1]; ++r)
            for (size_t c = 0; c < qdims[p]; ++c) b.at(r, c) = full.at(comp[p - 1][r], comp[p][c]);
        qbnd.push_back(std::move(b));
    }

    auto betti = chain_betti(fld, qdims, qbnd);
    QuotientHomologyResult out;
    out.pass = true;
    for (int r = 1; r <= p_max - 1; ++r) {
        QuotientHomologyRow row;
        row.r = r;
        row.dim_h = betti[r];
        row.dim_z_prev = zdim[r - 1];
        row.ok = (row.dim_h == row.dim_z_prev);
        out.pass = out.pass && row.ok;
        out.rows.push_back(row);
    }
    return out;
}

} // namespace dstm
