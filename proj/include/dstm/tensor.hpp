#pragma once

#include <vector>

#include "dstm/linalg.hpp"
#include "dstm/shape.hpp"

namespace dstm {

// Degree-p element of the diagonal tensor module attached to a shape: a
// coefficient table over I_p in lexicographic index order. Face and
// degeneracy act by precomposition with the product coface/codegeneracy
// maps, so on coefficient tables they are pure index shuffles.
template <class F>
struct Tensor {
    using Elem = typename F::Elem;

    Shape shape;
    int degree = 0;
    std::vector<Elem> c;

    Tensor() = default;
    Tensor(Shape s, int p) : shape(std::move(s)), degree(p), c(index_count(shape, p)) {}

    Elem& at(const MultiIndex& m) { return c[index_rank(shape, degree, m)]; }
    const Elem& at(const MultiIndex& m) const { return c[index_rank(shape, degree, m)]; }

    bool operator==(const Tensor& o) const {
        return shape == o.shape && degree == o.degree && c == o.c;
    }
};

template <class F>
Tensor<F> zero_tensor(const Shape& s, int p) {
    return Tensor<F>(s, p);
}

template <class F>
Tensor<F> basis_tensor(const F& fld, const Shape& s, int p, const MultiIndex& m) {
    Tensor<F> t(s, p);
    t.c[index_rank(s, p, m)] = fld.one();
    return t;
}

template <class F>
Tensor<F> tensor_from_entries(const Shape& s, int p, std::vector<typename F::Elem> entries) {
    require(entries.size() == index_count(s, p), "entry count does not match |I_p|");
    Tensor<F> t(s, p);
    t.c = std::move(entries);
    return t;
}

template <class F>
bool is_zero_tensor(const F& fld, const Tensor<F>& t) {
    for (const auto& x : t.c)
        if (!fld.is_zero(x)) return false;
    return true;
}

template <class F>
Tensor<F> tensor_add(const F& fld, const Tensor<F>& a, const Tensor<F>& b) {
    require(a.shape == b.shape && a.degree == b.degree, "tensor add shape/degree mismatch");
    Tensor<F> out(a.shape, a.degree);
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = fld.add(a.c[i], b.c[i]);
    return out;
}

template <class F>
Tensor<F> tensor_sub(const F& fld, const Tensor<F>& a, const Tensor<F>& b) {
    require(a.shape == b.shape && a.degree == b.degree, "tensor sub shape/degree mismatch");
    Tensor<F> out(a.shape, a.degree);
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = fld.sub(a.c[i], b.c[i]);
    return out;
}

template <class F>
Tensor<F> tensor_scale(const F& fld, const typename F::Elem& s, const Tensor<F>& a) {
    Tensor<F> out(a.shape, a.degree);
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = fld.mul(s, a.c[i]);
    return out;
}

template <class F>
Tensor<F> random_tensor(const F& fld, Rng& rng, const Shape& s, int p) {
    Tensor<F> t(s, p);
    for (auto& x : t.c) x = fld.sample(rng);
    return t;
}

// d_i : X_p -> X_{p-1}, (d_i T)(m) = T(Delta_i m).
template <class F>
Tensor<F> face(const Tensor<F>& t, int i) {
    require(t.degree >= 1, "face of a degree-0 tensor");
    require(i >= 0 && i <= t.degree, "face index out of range");
    const int p = t.degree;
    Tensor<F> out(t.shape, p - 1);
    const auto bounds = degree_bounds(t.shape, p - 1);
    MultiIndex m(t.shape.k(), 0);
    size_t r = 0;
    do {
        out.c[r++] = t.c[index_rank(t.shape, p, coface_index(t.shape, p, i, m))];
    } while (next_index(bounds, m));
    return out;
}

// s_i : X_p -> X_{p+1}, (s_i T)(m) = T(Sigma_i m).
template <class F>
Tensor<F> degeneracy(const Tensor<F>& t, int i) {
    require(i >= 0 && i <= t.degree, "degeneracy index out of range");
    const int p = t.degree;
    Tensor<F> out(t.shape, p + 1);
    const auto bounds = degree_bounds(t.shape, p + 1);
    MultiIndex m(t.shape.k(), 0);
    size_t r = 0;
    do {
        out.c[r++] = t.c[index_rank(t.shape, p, codegeneracy_index(t.shape, p, i, m))];
    } while (next_index(bounds, m));
    return out;
}

// Alternating face sum; defined for degree >= 1.
template <class F>
Tensor<F> boundary(const F& fld, const Tensor<F>& t) {
    require(t.degree >= 1, "boundary of a degree-0 tensor");
    Tensor<F> out = face(t, 0);
    for (int i = 1; i <= t.degree; ++i) {
        auto fi = face(t, i);
        if (i % 2 == 1) {
            for (size_t r = 0; r < out.c.size(); ++r) out.c[r] = fld.sub(out.c[r], fi.c[r]);
        } else {
            for (size_t r = 0; r < out.c.size(); ++r) out.c[r] = fld.add(out.c[r], fi.c[r]);
        }
    }
    return out;
}

// Axis permutation action (sigma . T)(m) = T(sigma^{-1} . m); sigma must
// preserve the shape.
template <class F>
Tensor<F> permute_axes(const Tensor<F>& t, const std::vector<int>& sigma) {
    require(stab_contains(t.shape, sigma), "permutation does not stabilize the shape");
    Tensor<F> out(t.shape, t.degree);
    const auto bounds = degree_bounds(t.shape, t.degree);
    MultiIndex m(t.shape.k(), 0);
    size_t r = 0;
    do {
        out.c[index_rank(t.shape, t.degree, apply_perm_to_index(sigma, m))] = t.c[r++];
    } while (next_index(bounds, m));
    return out;
}

template <class F>
std::vector<size_t> support(const F& fld, const Tensor<F>& t) {
    std::vector<size_t> out;
    for (size_t i = 0; i < t.c.size(); ++i)
        if (!fld.is_zero(t.c[i])) out.push_back(i);
    return out;
}

// Matrix of d_i on the standard bases: one 1 per row, at the coface image.
template <class F>
Mat<F> face_matrix(const F& fld, const Shape& s, int p, int i) {
    require(p >= 1, "face matrix needs degree >= 1");
    Mat<F> m(index_count(s, p - 1), index_count(s, p));
    const auto bounds = degree_bounds(s, p - 1);
    MultiIndex mi(s.k(), 0);
    size_t r = 0;
    do {
        m.at(r++, index_rank(s, p, coface_index(s, p, i, mi))) = fld.one();
    } while (next_index(bounds, mi));
    return m;
}

template <class F>
Mat<F> degeneracy_matrix(const F& fld, const Shape& s, int p, int i) {
    Mat<F> m(index_count(s, p + 1), index_count(s, p));
    const auto bounds = degree_bounds(s, p + 1);
    MultiIndex mi(s.k(), 0);
    size_t r = 0;
    do {
        m.at(r++, index_rank(s, p, codegeneracy_index(s, p, i, mi))) = fld.one();
    } while (next_index(bounds, mi));
    return m;
}

template <class F>
Mat<F> boundary_matrix(const F& fld, const Shape& s, int p) {
    require(p >= 1, "boundary matrix needs degree >= 1");
    Mat<F> m(index_count(s, p - 1), index_count(s, p));
    const auto bounds = degree_bounds(s, p - 1);
    MultiIndex mi(s.k(), 0);
    size_t r = 0;
    do {
        for (int i = 0; i <= p; ++i) {
            const size_t col = index_rank(s, p, coface_index(s, p, i, mi));
            auto& e = m.at(r, col);
            e = (i % 2 == 0) ? fld.add(e, fld.one()) : fld.sub(e, fld.one());
        }
        ++r;
    } while (next_index(bounds, mi));
    return m;
}

// Coefficient vector of a tensor (alias of the table; kept explicit so
// call sites read as linear algebra).
template <class F>
const std::vector<typename F::Elem>& tensor_vector(const Tensor<F>& t) {
    return t.c;
}

} // namespace dstm
