#pragma once

#include <string>
#include <vector>

#include "dstm/error.hpp"
#include "dstm/shape.hpp"

namespace dstm {

// A weakly increasing map [p] -> [q], stored by its value table. These are
// the simplex basis elements of the free simplicial module on Delta^q and
// the arguments of the induced index maps.
struct MonotoneMap {
    int codomain = 0;
    std::vector<int> values;

    int domain() const { return static_cast<int>(values.size()) - 1; }
    bool operator==(const MonotoneMap& o) const {
        return codomain == o.codomain && values == o.values;
    }
    std::string str() const;
};

MonotoneMap monotone_identity(int n);
MonotoneMap monotone_from_values(int codomain, std::vector<int> values);

// All monotone maps [p] -> [n] in lexicographic order of value tables;
// there are C(n + p + 1, p + 1) of them.
std::vector<MonotoneMap> monotone_maps(int p, int n);
size_t monotone_count(int p, int n);
size_t monotone_rank(const MonotoneMap& alpha);

// outer after inner.
MonotoneMap monotone_compose(const MonotoneMap& outer, const MonotoneMap& inner);

// alpha o delta_i (drop position i) and alpha o sigma_i (repeat position i).
MonotoneMap monotone_face(const MonotoneMap& alpha, int i);
MonotoneMap monotone_degeneracy(const MonotoneMap& alpha, int i);

// delta_i : [q-1] -> [q] and sigma_i : [q+1] -> [q] as value tables.
MonotoneMap coface_map(int q, int i);
MonotoneMap codegeneracy_map(int q, int i);

// Canonical epi-mono factorization: alpha is the cofaces (missed values,
// applied in ascending index order) after the codegeneracies (repeat
// positions, applied in descending index order).
struct EpiMonoFactorization {
    std::vector<int> degens_desc; // j with alpha(j) = alpha(j+1), descending
    std::vector<int> cofaces_asc; // values of [q] missed by alpha, ascending
};

EpiMonoFactorization epi_mono_factorization(const MonotoneMap& alpha);

// Rebuild the map from its factorization (used to pin the generator order).
MonotoneMap recompose(int p, const EpiMonoFactorization& f);

// Functorial action on index boxes: factor alpha into generators and apply
// the matching product coface/codegeneracy maps. Independent of the chosen
// factorization because the product maps satisfy the cosimplicial
// identities.
MultiIndex induced_index_map(const Shape& s, const MonotoneMap& alpha, const MultiIndex& m);

} // namespace dstm
