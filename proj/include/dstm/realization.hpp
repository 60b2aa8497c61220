#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dstm/contraction.hpp"
#include "dstm/monotone.hpp"
#include "dstm/poly.hpp"
#include "dstm/tensor.hpp"

namespace dstm {

// Coefficient table of the realization morphism in degree p: rows are the
// degree-p indices, columns the monotone maps [p] -> [n], and the (m,
// alpha) entry reads the tensor at the index alpha pushes m to. Requires a
// top-degree tensor (degree n).
template <class F>
Mat<F> realization_matrix(const F& fld, const Tensor<F>& t, int p) {
    (void)fld;
    const int n = t.shape.dim();
    require(t.degree == n, "realization needs a top-degree tensor");
    require(p >= 0, "negative degree");
    const auto maps = monotone_maps(p, n);
    Mat<F> out(index_count(t.shape, p), maps.size());
    const auto bounds = degree_bounds(t.shape, p);
    for (size_t col = 0; col < maps.size(); ++col) {
        MultiIndex m(t.shape.k(), 0);
        size_t row = 0;
        do {
            out.at(row++, col) = t.c[index_rank(t.shape, n, induced_index_map(t.shape, maps[col], m))];
        } while (next_index(bounds, m));
    }
    return out;
}

// Face matrix of the simplex complex C_p = K[Delta^n]: position deletion
// on value tables.
template <class F>
Mat<F> simplex_face_matrix(const F& fld, int p, int n, int i) {
    require(p >= 1, "simplex face needs degree >= 1");
    const auto dom = monotone_maps(p, n);
    Mat<F> m(monotone_count(p - 1, n), dom.size());
    for (size_t col = 0; col < dom.size(); ++col)
        m.at(monotone_rank(monotone_face(dom[col], i)), col) = fld.one();
    return m;
}

template <class F>
Mat<F> simplex_boundary_matrix(const F& fld, int p, int n) {
    require(p >= 1, "simplex boundary needs degree >= 1");
    const auto dom = monotone_maps(p, n);
    Mat<F> m(monotone_count(p - 1, n), dom.size());
    for (size_t col = 0; col < dom.size(); ++col)
        for (int i = 0; i <= p; ++i) {
            auto& e = m.at(monotone_rank(monotone_face(dom[col], i)), col);
            e = (i % 2 == 0) ? fld.add(e, fld.one()) : fld.sub(e, fld.one());
        }
    return m;
}

// Kernels of the realization in degrees 0..p_max, with the source complex
// dimensions and a content digest of the defining tensor.
template <class F>
struct KernelSequence {
    Shape shape;
    std::string tensor_hash;
    int p_max = 0;
    std::vector<size_t> source_dims; // dim C_p
    std::vector<size_t> ranks;       // rank of the realization matrix
    std::vector<Subspace<F>> kernels;
};

// FNV-1a over the canonical serialization; enough to key fingerprints.
template <class F>
std::string tensor_digest(const F& fld, const Tensor<F>& t) {
    uint64_t h = 1469598103934665603ull;
    auto eat = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
    };
    eat(t.shape.str());
    eat("|" + std::to_string(t.degree) + "|");
    for (const auto& x : t.c) eat(fld.str(x) + ",");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

// Incidence of the kernels with the simplex faces: d_i K_p <= K_{p-1}.
template <class F>
bool incidence_check(const F& fld, const KernelSequence<F>& ks) {
    const int n = ks.shape.dim();
    for (int p = 1; p <= ks.p_max; ++p) {
        for (int i = 0; i <= p; ++i) {
            const auto di = simplex_face_matrix(fld, p, n, i);
            for (size_t r = 0; r < ks.kernels[p].dim(); ++r) {
                auto img = matvec(fld, di, ks.kernels[p].basis.row(r));
                if (!subspace_contains(fld, ks.kernels[p - 1], img)) return false;
            }
        }
    }
    return true;
}

template <class F>
KernelSequence<F> kernel_sequence(const F& fld, const Tensor<F>& t, int p_max) {
    require(p_max >= 0, "p_max must be nonnegative");
    KernelSequence<F> ks;
    ks.shape = t.shape;
    ks.tensor_hash = tensor_digest(fld, t);
    ks.p_max = p_max;
    for (int p = 0; p <= p_max; ++p) {
        auto m = realization_matrix(fld, t, p);
        auto rrk = rref_rank_kernel(fld, m);
        ks.source_dims.push_back(m.cols);
        ks.ranks.push_back(rrk.rank);
        ks.kernels.push_back(std::move(rrk.kernel));
    }
    require(incidence_check(fld, ks), "kernel sequence fails face incidence");
    return ks;
}

// Maximum realization rank over random tensors, an exact certified lower
// bound for the generic rank; a nonzero minor over GF(q) lifts to a
// nonzero minor polynomial. The symbolic mode (available while the column
// count stays small) settles the exact value by fraction-free elimination
// over the polynomial ring on one variable per index.
struct GenericRankResult {
    size_t rank = 0;
    bool all_trials_agree = true;
    uint64_t q = 0;
    size_t trials = 0;
    std::optional<size_t> exact;
};

constexpr size_t kSymbolicColumnLimit = 12;

inline std::vector<std::vector<MPoly>> symbolic_realization_matrix(const Shape& s, int p) {
    const int n = s.dim();
    const size_t nvars = index_count(s, n);
    const auto maps = monotone_maps(p, n);
    std::vector<std::vector<MPoly>> a(index_count(s, p));
    const auto bounds = degree_bounds(s, p);
    MultiIndex m(s.k(), 0);
    size_t row = 0;
    do {
        a[row].reserve(maps.size());
        for (const auto& alpha : maps)
            a[row].push_back(MPoly::variable(nvars, index_rank(s, n, induced_index_map(s, alpha, m))));
        ++row;
    } while (next_index(bounds, m));
    return a;
}

inline size_t symbolic_generic_rank(const Shape& s, int p) {
    require(monotone_count(p, s.dim()) <= kSymbolicColumnLimit,
            "symbolic mode limited to small column counts");
    return poly_matrix_rank(symbolic_realization_matrix(s, p));
}

GenericRankResult generic_rank(const Shape& s, int p, size_t trials, uint64_t seed, int prime_bits);

// Homology of the submodule generated by a top tensor, computed two ways:
// directly from the image complex, and through the kernel sequence of the
// source simplex complex. Both must agree.
struct GeneratedHomology {
    std::vector<size_t> betti;         // degrees 0 .. p_max-1, direct
    std::vector<size_t> betti_formula; // same window, via kernels
    bool agree = false;
};

template <class F>
GeneratedHomology homology_generated(const F& fld, const Tensor<F>& t, int p_max) {
    const int n = t.shape.dim();
    require(p_max >= n && p_max >= 2, "homology window needs p_max >= max(n, 2)");

    std::vector<Subspace<F>> image(p_max + 1);
    std::vector<Subspace<F>> kern(p_max + 1);
    std::vector<size_t> cdims(p_max + 1);
    for (int p = 0; p <= p_max; ++p) {
        auto m = realization_matrix(fld, t, p);
        cdims[p] = m.cols;
        image[p] = column_space(fld, m);
        kern[p] = kernel_of(fld, m);
    }

    // Direct route: boundaries of the ambient module restricted to the
    // image pieces.
    std::vector<size_t> idims(p_max + 1);
    for (int p = 0; p <= p_max; ++p) idims[p] = image[p].dim();
    std::vector<Mat<F>> ibnd;
    for (int p = 1; p <= p_max; ++p)
        ibnd.push_back(restrict_map(fld, boundary_matrix(fld, t.shape, p), image[p], image[p - 1]));
    auto direct = chain_betti(fld, idims, ibnd);

    // Kernel route: the kernel subcomplex of the source simplex complex.
    std::vector<size_t> kdims(p_max + 1);
    for (int p = 0; p <= p_max; ++p) kdims[p] = kern[p].dim();
    std::vector<Mat<F>> kbnd;
    for (int p = 1; p <= p_max; ++p)
        kbnd.push_back(restrict_map(fld, simplex_boundary_matrix(fld, p, n), kern[p], kern[p - 1]));
    auto kbetti = chain_betti(fld, kdims, kbnd);

    GeneratedHomology out;
    out.betti.assign(direct.begin(), direct.begin() + p_max);

    // Low-degree formulas use the boundary image in the source complex.
    const auto b0c = column_space(fld, simplex_boundary_matrix(fld, 1, n));
    auto mj = subspace_meet_join(fld, kern[0], b0c);
    const size_t h0 = cdims[0] - mj.join.dim();
    const size_t rank_k1 = rank_of(fld, kbnd[0]);
    const size_t h1 = mj.meet.dim() - rank_k1;

    out.betti_formula.resize(p_max);
    out.betti_formula[0] = h0;
    if (p_max >= 2) out.betti_formula[1] = h1;
    for (int p = 2; p < p_max; ++p) out.betti_formula[p] = kbetti[p - 1];

    out.agree = (out.betti == out.betti_formula);
    return out;
}

// Kernel-sequence fingerprint study on the square two-axis shape: pairs of
// generic tensors sharing a diagonal have identical kernel sequences, and
// projectively distinct diagonals separate the degree-0 kernels.
struct ModuliFingerprint {
    size_t samples = 0;
    size_t pairs_identical = 0;
    size_t distinct_checked = 0;
    size_t distinct_separated = 0;
    bool pass = false;
    std::vector<std::string> fingerprints; // per sample: digest of the pair's shared kernels
};

ModuliFingerprint moduli_fingerprint(size_t samples, uint64_t seed);

// Kernel dimensions after reduction mod q, compared against the rational
// ones; drops are reported, not failed.
struct BaseChangeRow {
    uint64_t q = 0;
    std::vector<size_t> dims_mod;
    bool drop = false;
};

struct BaseChangeResult {
    std::vector<size_t> dims_rational;
    std::vector<BaseChangeRow> rows;
};

BaseChangeResult base_change_check(const Tensor<RationalField>& t,
                                   const std::vector<uint64_t>& primes, int p_max);

} // namespace dstm
