#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dstm/enumeration.hpp"
#include "dstm/tensor.hpp"

namespace dstm {

// Indices whose coordinate image covers [p] \ {j}; the span of the matching
// basis tensors is exactly the horn kernel R_{p,j} (joint kernel of every
// face but d_j).
struct MissingIndices {
    std::vector<MultiIndex> indices; // lexicographic
    std::vector<size_t> ranks;
};

inline MissingIndices missing_indices(const Shape& s, int p, int j) {
    require(p >= 1, "horn degree must be >= 1");
    require(j >= 0 && j <= p, "omitted face out of range");
    MissingIndices out;
    const auto bounds = degree_bounds(s, p);
    const uint64_t all = (1ull << (p + 1)) - 1;
    const uint64_t needed = all & ~(1ull << j);
    MultiIndex m(s.k(), 0);
    size_t r = 0;
    do {
        uint64_t mask = 0;
        for (int v : m)
            if (v <= p) mask |= 1ull << v;
        if ((mask & needed) == needed) {
            out.indices.push_back(m);
            out.ranks.push_back(r);
        }
        ++r;
    } while (next_index(bounds, m));
    return out;
}

template <class F>
Subspace<F> missing_kernel(const F& fld, const Shape& s, int p, int j) {
    return Subspace<F>::coordinate(fld, index_count(s, p), missing_indices(s, p, j).ranks);
}

// A horn: all faces of a would-be degree-p element except the j-th, indexed
// by the face they stand for.
template <class F>
struct Horn {
    Shape shape;
    int p = 0;
    int j = 0;
    std::vector<Tensor<F>> faces; // ascending face index, skipping j

    const Tensor<F>& face_at(int i) const {
        require(i >= 0 && i <= p && i != j, "horn face index out of range");
        return faces[static_cast<size_t>(i < j ? i : i - 1)];
    }
};

template <class F>
Horn<F> horn_from_faces(const Shape& s, int p, int j, std::vector<Tensor<F>> faces) {
    require(p >= 1, "horn degree must be >= 1");
    require(j >= 0 && j <= p, "omitted face out of range");
    require(faces.size() == static_cast<size_t>(p), "horn needs p faces");
    for (const auto& f : faces) {
        require(f.shape == s, "horn face over the wrong shape");
        require(f.degree == p - 1, "horn face of the wrong degree");
    }
    Horn<F> h;
    h.shape = s;
    h.p = p;
    h.j = j;
    h.faces = std::move(faces);
    return h;
}

// Faces of t with the j-th dropped; always compatible by construction.
template <class F>
Horn<F> horn_restrict(const Tensor<F>& t, int j) {
    require(t.degree >= 1, "horn restriction needs degree >= 1");
    require(j >= 0 && j <= t.degree, "omitted face out of range");
    std::vector<Tensor<F>> faces;
    for (int i = 0; i <= t.degree; ++i)
        if (i != j) faces.push_back(face(t, i));
    return horn_from_faces(t.shape, t.degree, j, std::move(faces));
}

// First violated compatibility pair (i, l), i < l, both != j, under
// d_i x_l = d_{l-1} x_i; nullopt when the horn is compatible.
template <class F>
std::optional<std::pair<int, int>> horn_incompatibility(const F& fld, const Horn<F>& h) {
    if (h.p == 1) return std::nullopt;
    for (int i = 0; i <= h.p; ++i) {
        if (i == h.j) continue;
        for (int l = i + 1; l <= h.p; ++l) {
            if (l == h.j) continue;
            auto lhs = face(h.face_at(l), i);
            auto rhs = face(h.face_at(i), l - 1);
            if (!(lhs == rhs)) return std::make_pair(i, l);
        }
    }
    (void)fld;
    return std::nullopt;
}

// Two-phase Moore filler: degeneracy corrections for the faces below j in
// ascending order, then for the faces above j in descending order. The
// result matches every prescribed face exactly and lies in the degenerate
// subspace D_p.
template <class F>
Tensor<F> moore_filler(const F& fld, const Horn<F>& h) {
    if (auto bad = horn_incompatibility(fld, h)) {
        fail_pre("incompatible horn: faces (" + std::to_string(bad->first) + ", " +
                 std::to_string(bad->second) + ") violate d_i x_l = d_{l-1} x_i");
    }
    Tensor<F> t = zero_tensor<F>(h.shape, h.p);
    for (int i = 0; i < h.j; ++i) {
        auto corr = tensor_sub(fld, h.face_at(i), face(t, i));
        t = tensor_add(fld, t, degeneracy(corr, i));
    }
    for (int i = h.p; i > h.j; --i) {
        auto corr = tensor_sub(fld, h.face_at(i), face(t, i));
        t = tensor_add(fld, t, degeneracy(corr, i - 1));
    }
    return t;
}

// t = filler(horn_j(t)) + residual with the residual supported on the
// missing indices; the filler part is the canonical degenerate
// representative of the horn.
template <class F>
struct HornDecomposition {
    Tensor<F> filler;
    Tensor<F> residual;
};

template <class F>
HornDecomposition<F> horn_decompose(const F& fld, const Tensor<F>& t, int j) {
    HornDecomposition<F> out{moore_filler(fld, horn_restrict(t, j)), zero_tensor<F>(t.shape, t.degree)};
    out.residual = tensor_sub(fld, t, out.filler);
    return out;
}

// A degree-p tensor is generic for the j-horn chart when its residual is
// supported on every missing index (all coordinates in the chart are
// "visible"). Vacuously true when the missing set is empty.
template <class F>
bool genericity_test(const F& fld, const Tensor<F>& t, int j) {
    auto dec = horn_decompose(fld, t, j);
    const auto miss = missing_indices(t.shape, t.degree, j);
    return support(fld, dec.residual) == miss.ranks;
}

// The two-step complex attached to the inner j-horn at the top dimension
// n = dim(shape): X_n -> sum of the horn faces -> pairwise compatibility
// targets. Returns (dim H2, dim H1) and checks them against the horn
// kernel dimension and exactness.
struct HornComplexResult {
    size_t dim_h2 = 0;
    size_t dim_h1 = 0;
    size_t dim_r = 0;
    bool pass = false;
};

template <class F>
HornComplexResult horn_complex_check(const F& fld, const Shape& s, int j) {
    const int n = s.dim();
    require(n >= 2, "horn complex needs dimension >= 2");
    require(j >= 0 && j <= n, "omitted face out of range");

    std::vector<int> keep;
    for (int i = 0; i <= n; ++i)
        if (i != j) keep.push_back(i);

    const size_t dn1 = index_count(s, n - 1);
    const size_t dn2 = index_count(s, n - 2);

    // Face collection map X_n -> sum_{i != j} X_{n-1}.
    std::vector<Mat<F>> blocks;
    for (int i : keep) blocks.push_back(face_matrix(fld, s, n, i));
    Mat<F> phi = vstack(blocks);

    // Compatibility pairing (x_i) -> (d_i x_m - d_{m-1} x_i) over pairs
    // i < m with i, m != j.
    std::vector<std::pair<int, int>> pairs;
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = a + 1; b < keep.size(); ++b) pairs.emplace_back(keep[a], keep[b]);
    Mat<F> psi(pairs.size() * dn2, keep.size() * dn1);
    for (size_t pr = 0; pr < pairs.size(); ++pr) {
        const auto [i, m] = pairs[pr];
        const size_t bi = static_cast<size_t>(std::find(keep.begin(), keep.end(), i) - keep.begin());
        const size_t bm = static_cast<size_t>(std::find(keep.begin(), keep.end(), m) - keep.begin());
        const auto di = face_matrix(fld, s, n - 1, i);
        const auto dm1 = face_matrix(fld, s, n - 1, m - 1);
        for (size_t r = 0; r < dn2; ++r) {
            for (size_t c = 0; c < dn1; ++c) {
                auto& pos = psi.at(pr * dn2 + r, bm * dn1 + c);
                pos = fld.add(pos, di.at(r, c));
                auto& neg = psi.at(pr * dn2 + r, bi * dn1 + c);
                neg = fld.sub(neg, dm1.at(r, c));
            }
        }
    }

    require(is_zero_mat(fld, matmul(fld, psi, phi)), "horn complex is not a complex");

    HornComplexResult out;
    const size_t rank_phi = rank_of(fld, phi);
    const size_t rank_psi = rank_of(fld, psi);
    out.dim_h2 = index_count(s, n) - rank_phi;
    out.dim_h1 = (keep.size() * dn1 - rank_psi) - rank_phi;
    out.dim_r = missing_indices(s, n, j).ranks.size();
    out.pass = (out.dim_h1 == 0) && (out.dim_h2 == out.dim_r);
    return out;
}

} // namespace dstm
