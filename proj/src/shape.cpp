#include "dstm/shape.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dstm {

Shape Shape::of(std::vector<int> entries) {
    if (entries.empty()) fail_pre("shape needs at least one axis");
    for (int e : entries)
        if (e < 1) fail_pre("shape entries must be positive");
    Shape s;
    s.entries = std::move(entries);
    return s;
}

Shape Shape::parse(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            entries.push_back(v);
        } catch (const std::exception&) {
            fail_usage("malformed shape component '" + tok + "'");
        }
    }
    if (entries.empty()) fail_usage("empty shape");
    for (int e : entries)
        if (e < 1) fail_usage("shape entries must be positive");
    return Shape::of(std::move(entries));
}

std::string Shape::str() const {
    std::string out;
    for (size_t a = 0; a < entries.size(); ++a) {
        if (a) out += ',';
        out += std::to_string(entries[a]);
    }
    return out;
}

std::vector<int> degree_bounds(const Shape& s, int p) {
    require(p >= 0, "negative degree");
    std::vector<int> b(s.entries.size());
    for (int a = 0; a < s.k(); ++a) b[a] = s.bound(a, p);
    return b;
}

size_t index_count(const Shape& s, int p) {
    size_t n = 1;
    for (int b : degree_bounds(s, p)) n *= static_cast<size_t>(b + 1);
    return n;
}

bool valid_index(const Shape& s, int p, const MultiIndex& m) {
    if (p < 0 || static_cast<int>(m.size()) != s.k()) return false;
    for (int a = 0; a < s.k(); ++a)
        if (m[a] < 0 || m[a] > s.bound(a, p)) return false;
    return true;
}

size_t index_rank(const Shape& s, int p, const MultiIndex& m) {
    require(valid_index(s, p, m), "index outside I_p");
    size_t r = 0;
    for (int a = 0; a < s.k(); ++a) r = r * static_cast<size_t>(s.bound(a, p) + 1) + m[a];
    return r;
}

MultiIndex index_unrank(const Shape& s, int p, size_t r) {
    MultiIndex m(s.k());
    for (int a = s.k() - 1; a >= 0; --a) {
        const size_t radix = static_cast<size_t>(s.bound(a, p) + 1);
        m[a] = static_cast<int>(r % radix);
        r /= radix;
    }
    require(r == 0, "rank outside I_p");
    return m;
}

std::vector<MultiIndex> index_set(const Shape& s, int p) {
    const size_t n = index_count(s, p);
    std::vector<MultiIndex> out;
    out.reserve(n);
    MultiIndex m(s.k(), 0);
    const auto bounds = degree_bounds(s, p);
    do {
        out.push_back(m);
    } while (next_index(bounds, m));
    require(out.size() == n, "index enumeration mismatch");
    return out;
}

bool next_index(const std::vector<int>& bounds, MultiIndex& m) {
    for (int a = static_cast<int>(m.size()) - 1; a >= 0; --a) {
        if (m[a] < bounds[a]) {
            ++m[a];
            std::fill(m.begin() + a + 1, m.end(), 0);
            return true;
        }
    }
    return false;
}

MultiIndex coface_index(const Shape& s, int p, int i, const MultiIndex& m) {
    require(p >= 1 && i >= 0 && i <= p, "coface index out of range");
    require(valid_index(s, p - 1, m), "coface argument outside I_{p-1}");
    MultiIndex out(m);
    for (auto& v : out)
        if (v >= i) ++v;
    return out;
}

MultiIndex codegeneracy_index(const Shape& s, int p, int i, const MultiIndex& m) {
    require(p >= 0 && i >= 0 && i <= p, "codegeneracy index out of range");
    require(valid_index(s, p + 1, m), "codegeneracy argument outside I_{p+1}");
    MultiIndex out(m);
    for (auto& v : out)
        if (v > i) --v;
    return out;
}

std::optional<MultiIndex> face_preimage(const Shape& s, int p, int i, const MultiIndex& m) {
    require(p >= 1 && i >= 0 && i <= p, "face index out of range");
    require(valid_index(s, p, m), "face argument outside I_p");
    MultiIndex out(m);
    for (auto& v : out) {
        if (v == i) return std::nullopt;
        if (v > i) --v;
    }
    return out;
}

uint64_t image_mask(const MultiIndex& m) {
    uint64_t mask = 0;
    for (int v : m) {
        require(v >= 0 && v < 64, "coordinate too large for mask");
        mask |= 1ull << v;
    }
    return mask;
}

bool stab_contains(const Shape& s, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != s.k()) return false;
    std::vector<bool> seen(sigma.size(), false);
    for (int a = 0; a < s.k(); ++a) {
        int b = sigma[a];
        if (b < 0 || b >= s.k() || seen[b]) return false;
        seen[b] = true;
        if (s.entries[b] != s.entries[a]) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> stab_generators(const Shape& s) {
    std::vector<std::pair<int, int>> gens;
    for (int a = 0; a + 1 < s.k(); ++a)
        for (int b = a + 1; b < s.k(); ++b)
            if (s.entries[a] == s.entries[b]) gens.emplace_back(a, b);
    return gens;
}

std::vector<int> random_stab_element(const Shape& s, Rng& rng) {
    // Group axes by entry value and shuffle within each block.
    std::vector<int> sigma(s.k());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> order(sigma);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return s.entries[a] < s.entries[b]; });
    for (size_t lo = 0; lo < order.size();) {
        size_t hi = lo;
        while (hi < order.size() && s.entries[order[hi]] == s.entries[order[lo]]) ++hi;
        for (size_t i = hi - lo; i > 1; --i) {
            size_t j = rng.below(i);
            std::swap(order[lo + i - 1], order[lo + j]);
        }
        lo = hi;
    }
    std::vector<int> sorted(order.size());
    std::iota(sorted.begin(), sorted.end(), 0);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](int a, int b) { return s.entries[a] < s.entries[b]; });
    for (size_t i = 0; i < order.size(); ++i) sigma[sorted[i]] = order[i];
    require(stab_contains(s, sigma), "stabilizer sampling produced an invalid permutation");
    return sigma;
}

int perm_sign(const std::vector<int>& sigma) {
    int sign = 1;
    std::vector<bool> seen(sigma.size(), false);
    for (size_t a = 0; a < sigma.size(); ++a) {
        if (seen[a]) continue;
        size_t len = 0, b = a;
        while (!seen[b]) {
            seen[b] = true;
            b = sigma[b];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<int> perm_inverse(const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size());
    for (size_t a = 0; a < sigma.size(); ++a) inv[sigma[a]] = static_cast<int>(a);
    return inv;
}

MultiIndex apply_perm_to_index(const std::vector<int>& sigma, const MultiIndex& m) {
    require(sigma.size() == m.size(), "permutation size mismatch");
    MultiIndex out(m.size());
    for (size_t a = 0; a < m.size(); ++a) out[sigma[a]] = m[a];
    return out;
}

} // namespace dstm
