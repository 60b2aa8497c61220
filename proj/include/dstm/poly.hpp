#pragma once

#include <map>
#include <vector>

#include "dstm/error.hpp"
#include "dstm/fields.hpp"

namespace dstm {

// Sparse multivariate polynomial over the integers: exponent vector ->
// coefficient, keyed lexicographically. Sized for symbolic elimination of
// small matrices, not for general computer algebra.
struct MPoly {
    size_t nvars = 0;
    std::map<std::vector<uint16_t>, Int> terms;

    bool is_zero() const { return terms.empty(); }

    static MPoly zero(size_t nvars) {
        MPoly p;
        p.nvars = nvars;
        return p;
    }

    static MPoly constant(size_t nvars, Int c) {
        MPoly p;
        p.nvars = nvars;
        if (c != 0) p.terms.emplace(std::vector<uint16_t>(nvars, 0), std::move(c));
        return p;
    }

    static MPoly variable(size_t nvars, size_t idx) {
        require(idx < nvars, "variable index out of range");
        MPoly p;
        p.nvars = nvars;
        std::vector<uint16_t> e(nvars, 0);
        e[idx] = 1;
        p.terms.emplace(std::move(e), Int(1));
        return p;
    }
};

inline MPoly poly_add(const MPoly& a, const MPoly& b) {
    require(a.nvars == b.nvars, "polynomial variable count mismatch");
    MPoly out = a;
    for (const auto& [e, c] : b.terms) {
        auto it = out.terms.find(e);
        if (it == out.terms.end()) {
            out.terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

inline MPoly poly_neg(const MPoly& a) {
    MPoly out = a;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
}

inline MPoly poly_sub(const MPoly& a, const MPoly& b) { return poly_add(a, poly_neg(b)); }

inline MPoly poly_mul(const MPoly& a, const MPoly& b) {
    require(a.nvars == b.nvars, "polynomial variable count mismatch");
    MPoly out = MPoly::zero(a.nvars);
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            std::vector<uint16_t> e(a.nvars);
            for (size_t i = 0; i < a.nvars; ++i) e[i] = static_cast<uint16_t>(ea[i] + eb[i]);
            auto it = out.terms.find(e);
            if (it == out.terms.end()) {
                out.terms.emplace(std::move(e), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

// Exact division (the quotient must exist in Z[v]); repeatedly cancels
// leading terms under the lexicographic order.
inline MPoly poly_div_exact(MPoly a, const MPoly& b) {
    require(!b.is_zero(), "polynomial division by zero");
    require(a.nvars == b.nvars, "polynomial variable count mismatch");
    MPoly q = MPoly::zero(a.nvars);
    const auto& ltb = *b.terms.rbegin();
    while (!a.is_zero()) {
        const auto& lta = *a.terms.rbegin();
        std::vector<uint16_t> e(a.nvars);
        for (size_t i = 0; i < a.nvars; ++i) {
            require(lta.first[i] >= ltb.first[i], "inexact polynomial division");
            e[i] = static_cast<uint16_t>(lta.first[i] - ltb.first[i]);
        }
        require(lta.second % ltb.second == 0, "inexact polynomial division");
        MPoly t = MPoly::zero(a.nvars);
        t.terms.emplace(std::move(e), lta.second / ltb.second);
        q = poly_add(q, t);
        a = poly_sub(a, poly_mul(t, b));
    }
    return q;
}

// Rank of a polynomial matrix over the fraction field, by fraction-free
// (Bareiss) elimination with full pivoting. Entries stay in Z[v]
// throughout; every division is exact by the Sylvester identity.
inline size_t poly_matrix_rank(std::vector<std::vector<MPoly>> a) {
    const size_t rows = a.size();
    if (rows == 0) return 0;
    const size_t cols = a[0].size();
    size_t rank = 0;
    const size_t nvars = a[0].empty() ? 0 : a[0][0].nvars;
    MPoly prev = MPoly::constant(nvars, 1);
    for (size_t step = 0; step < std::min(rows, cols); ++step) {
        size_t pr = rows, pc = cols;
        for (size_t r = step; r < rows && pr == rows; ++r)
            for (size_t c = step; c < cols; ++c)
                if (!a[r][c].is_zero()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == rows) break;
        std::swap(a[step], a[pr]);
        if (pc != step)
            for (size_t r = 0; r < rows; ++r) std::swap(a[r][step], a[r][pc]);
        for (size_t r = step + 1; r < rows; ++r) {
            for (size_t c = step + 1; c < cols; ++c) {
                auto num = poly_sub(poly_mul(a[step][step], a[r][c]), poly_mul(a[r][step], a[step][c]));
                a[r][c] = poly_div_exact(std::move(num), prev);
            }
            a[r][step] = MPoly::zero(nvars);
        }
        prev = a[step][step];
        ++rank;
    }
    return rank;
}

} // namespace dstm
