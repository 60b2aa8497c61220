#include "dstm/monotone.hpp"

#include <algorithm>

#include "dstm/enumeration.hpp"

namespace dstm {

std::string MonotoneMap::str() const {
    std::string out = "(";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    out += ")";
    return out;
}

MonotoneMap monotone_identity(int n) {
    require(n >= 0, "negative simplex dimension");
    MonotoneMap m;
    m.codomain = n;
    m.values.resize(n + 1);
    for (int i = 0; i <= n; ++i) m.values[i] = i;
    return m;
}

MonotoneMap monotone_from_values(int codomain, std::vector<int> values) {
    require(codomain >= 0 && !values.empty(), "monotone map needs a nonempty table");
    for (size_t i = 0; i < values.size(); ++i) {
        require(values[i] >= 0 && values[i] <= codomain, "monotone value out of range");
        require(i == 0 || values[i - 1] <= values[i], "values must be weakly increasing");
    }
    MonotoneMap m;
    m.codomain = codomain;
    m.values = std::move(values);
    return m;
}

std::vector<MonotoneMap> monotone_maps(int p, int n) {
    require(p >= 0 && n >= 0, "negative degree or dimension");
    std::vector<MonotoneMap> out;
    std::vector<int> v(p + 1, 0);
    while (true) {
        out.push_back(monotone_from_values(n, v));
        int i = p;
        while (i >= 0 && v[i] == n) --i;
        if (i < 0) break;
        const int nv = v[i] + 1;
        for (int t = i; t <= p; ++t) v[t] = nv;
    }
    return out;
}

size_t monotone_count(int p, int n) {
    return binomial(n + p + 1, p + 1).convert_to<size_t>();
}

size_t monotone_rank(const MonotoneMap& alpha) {
    // Lexicographic rank: count tables strictly below alpha. At position i
    // with prefix fixed, choosing a smaller value v leaves a weakly
    // increasing tail of length (p - i) with values in [v, n]: a binomial
    // count.
    const int p = alpha.domain();
    const int n = alpha.codomain;
    Int rank = 0;
    int lo = 0;
    for (int i = 0; i <= p; ++i) {
        for (int v = lo; v < alpha.values[i]; ++v) {
            rank += binomial((n - v) + (p - i), p - i);
        }
        lo = alpha.values[i];
    }
    return rank.convert_to<size_t>();
}

MonotoneMap monotone_compose(const MonotoneMap& outer, const MonotoneMap& inner) {
    require(inner.codomain == outer.domain(), "composition domain mismatch");
    MonotoneMap m;
    m.codomain = outer.codomain;
    m.values.reserve(inner.values.size());
    for (int v : inner.values) m.values.push_back(outer.values[v]);
    return m;
}

MonotoneMap monotone_face(const MonotoneMap& alpha, int i) {
    require(alpha.domain() >= 1, "face of a vertex map");
    require(i >= 0 && i <= alpha.domain(), "face position out of range");
    MonotoneMap m;
    m.codomain = alpha.codomain;
    m.values = alpha.values;
    m.values.erase(m.values.begin() + i);
    return m;
}

MonotoneMap monotone_degeneracy(const MonotoneMap& alpha, int i) {
    require(i >= 0 && i <= alpha.domain(), "degeneracy position out of range");
    MonotoneMap m;
    m.codomain = alpha.codomain;
    m.values = alpha.values;
    m.values.insert(m.values.begin() + i, m.values[i]);
    return m;
}

MonotoneMap coface_map(int q, int i) {
    require(q >= 1 && i >= 0 && i <= q, "coface out of range");
    MonotoneMap m;
    m.codomain = q;
    m.values.resize(q);
    for (int x = 0; x < q; ++x) m.values[x] = x < i ? x : x + 1;
    return m;
}

MonotoneMap codegeneracy_map(int q, int i) {
    require(q >= 0 && i >= 0 && i <= q, "codegeneracy out of range");
    MonotoneMap m;
    m.codomain = q;
    m.values.resize(q + 2);
    for (int x = 0; x <= q + 1; ++x) m.values[x] = x <= i ? x : x - 1;
    return m;
}

EpiMonoFactorization epi_mono_factorization(const MonotoneMap& alpha) {
    EpiMonoFactorization f;
    for (int j = 0; j < alpha.domain(); ++j)
        if (alpha.values[j] == alpha.values[j + 1]) f.degens_desc.push_back(j);
    std::reverse(f.degens_desc.begin(), f.degens_desc.end());
    std::vector<bool> hit(alpha.codomain + 1, false);
    for (int v : alpha.values) hit[v] = true;
    for (int v = 0; v <= alpha.codomain; ++v)
        if (!hit[v]) f.cofaces_asc.push_back(v);
    return f;
}

MonotoneMap recompose(int p, const EpiMonoFactorization& f) {
    MonotoneMap cur = monotone_identity(p);
    for (int j : f.degens_desc) cur = monotone_compose(codegeneracy_map(cur.codomain - 1, j), cur);
    for (int i : f.cofaces_asc) cur = monotone_compose(coface_map(cur.codomain + 1, i), cur);
    return cur;
}

MultiIndex induced_index_map(const Shape& s, const MonotoneMap& alpha, const MultiIndex& m) {
    const int p = alpha.domain();
    require(valid_index(s, p, m), "index outside the domain box");
    const auto f = epi_mono_factorization(alpha);
    MultiIndex cur = m;
    int deg = p;
    for (int j : f.degens_desc) {
        cur = codegeneracy_index(s, deg - 1, j, cur);
        --deg;
    }
    for (int i : f.cofaces_asc) {
        cur = coface_index(s, deg + 1, i, cur);
        ++deg;
    }
    require(deg == alpha.codomain, "factorization degree bookkeeping failed");
    return cur;
}

} // namespace dstm
