#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dstm/error.hpp"
#include "dstm/rng.hpp"

namespace dstm {

// A multidegree shape (n_1, ..., n_k) with every n_a >= 1. The attached
// simplicial dimension is n = min_a(n_a) - 1, and the degree-p index box is
// I_p = prod_a [0 .. M_a(p)] with M_a(p) = n_a - 1 - n + p >= p.
struct Shape {
    std::vector<int> entries;

    int k() const { return static_cast<int>(entries.size()); }

    int dim() const {
        int m = entries[0];
        for (int e : entries) m = std::min(m, e);
        return m - 1;
    }

    // M_a(p), the axis bound at degree p.
    int bound(int axis, int p) const { return entries[axis] - 1 - dim() + p; }

    bool constant() const {
        for (int e : entries)
            if (e != entries[0]) return false;
        return true;
    }

    bool operator==(const Shape& o) const { return entries == o.entries; }

    static Shape of(std::vector<int> entries);
    static Shape parse(const std::string& text); // "3,3" -> (3,3)
    std::string str() const;
};

using MultiIndex = std::vector<int>;

size_t index_count(const Shape& s, int p);
bool valid_index(const Shape& s, int p, const MultiIndex& m);

// Lexicographic rank of m in I_p, first axis most significant.
size_t index_rank(const Shape& s, int p, const MultiIndex& m);
MultiIndex index_unrank(const Shape& s, int p, size_t r);
std::vector<MultiIndex> index_set(const Shape& s, int p);

// In-place lexicographic successor over the box [0..bounds[0]] x ...;
// returns false once the last index has been passed.
bool next_index(const std::vector<int>& bounds, MultiIndex& m);
std::vector<int> degree_bounds(const Shape& s, int p);

// Injection product map Delta_i^p : I_{p-1} -> I_p (component-wise coface
// delta_i on every axis).
MultiIndex coface_index(const Shape& s, int p, int i, const MultiIndex& m);

// Surjection product map Sigma_i^p : I_{p+1} -> I_p (component-wise
// codegeneracy sigma_i on every axis).
MultiIndex codegeneracy_index(const Shape& s, int p, int i, const MultiIndex& m);

// The unique preimage of m under Delta_i^p, when m lies in its image
// (equivalently, no coordinate of m equals i).
std::optional<MultiIndex> face_preimage(const Shape& s, int p, int i, const MultiIndex& m);

// Bitmask over the coordinate values of m (values must stay below 64,
// which holds at any degree this library is meant for).
uint64_t image_mask(const MultiIndex& m);

// Axis permutations preserving the shape. sigma is stored as the image
// table sigma[a] = sigma(a); the action on indices is (sigma.m)_a =
// m_{sigma^{-1}(a)}.
bool stab_contains(const Shape& s, const std::vector<int>& sigma);
std::vector<std::pair<int, int>> stab_generators(const Shape& s);
std::vector<int> random_stab_element(const Shape& s, Rng& rng);
int perm_sign(const std::vector<int>& sigma);
std::vector<int> perm_inverse(const std::vector<int>& sigma);
MultiIndex apply_perm_to_index(const std::vector<int>& sigma, const MultiIndex& m);

} // namespace dstm
