#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dstm/fields.hpp"
#include "dstm/shape.hpp"

namespace dstm {

// Binomials, factorials and Stirling numbers are kept in arbitrary
// precision: (p+1)! S(k, p+1) overflows fixed width almost immediately.
Int binomial(int n, int t);
Int factorial(int n);
Int stirling2(int k, int m);

// Inclusion-exclusion ranks. rank_r is the common dimension of every horn
// kernel at degree p (it does not depend on the omitted face); rank_z is
// the dimension of the joint kernel of all faces.
Int rank_r_formula(const Shape& s, int p);
Int rank_z_formula(const Shape& s, int p);
// dim N_p; equals rank_r_formula with the degree-0 convention N_0 = X_0.
Int rank_n_formula(const Shape& s, int p);

// Closed Stirling forms, valid for constant shapes only.
Int rank_z_stirling(int k, int p);
Int rank_n_stirling(int k, int p);

struct Classification {
    int k = 0;
    int n = 0;
    // Largest degree with a nonvanishing horn kernel.
    int threshold = 0;
    bool strict = false;
    // When not strict, the degree window witnessing the failure.
    int witness_lo = 0;
    int witness_hi = 0;
    std::string verdict;
};

Classification classify_shape(const Shape& s);

// Brute-force dimensions at one degree, by enumerating I_p and filtering
// coordinate images; independent of the inclusion-exclusion route.
struct DegreeDims {
    size_t dim_x = 0;
    std::vector<size_t> dim_r; // per j = 0..p
    size_t dim_n = 0;
    size_t dim_z = 0;
};

DegreeDims brute_degree_dims(const Shape& s, int p);

struct RankRow {
    int p = 0;
    size_t dim_x = 0;
    std::optional<size_t> dim_r; // enumerated, j as requested; absent at p = 0
    size_t dim_n = 0;
    size_t dim_z = 0;
    std::optional<size_t> f_r; // formula values
    size_t f_z = 0;
    bool ok = false;
};

struct RankReport {
    Shape shape;
    int p_max = 0;
    int j = 0;
    std::vector<RankRow> rows;
    bool all_ok = false;
};

// Builds the rank table for degrees 0..p_max and cross-checks the formula
// values against enumeration, the j-independence of the horn kernel
// dimension, the Moore rank identity dim N_{p+1} = dim Z_{p+1} + dim Z_p,
// and the boundary criterion B_p != 0 <=> k >= p+1.
RankReport consistency_checks(const Shape& s, int p_max, int j);

std::string rank_report_csv(const RankReport& r);

} // namespace dstm
