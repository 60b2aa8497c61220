#pragma once

#include <string>
#include <vector>

#include "dstm/shape.hpp"

namespace dstm {

// One named assertion inside a verification suite, with a short printable
// outcome ("ok", a dimension table, a counterexample location, ...).
struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;
    bool pass = true;

    void add(std::string name, bool ok, std::string detail = "ok") {
        pass = pass && ok;
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

// Horn filling: exact fills, degenerate fillers, residuals in the missing
// kernel, trivial meet with the degenerate part, and the two-row homology
// of the horn complex (top dimension >= 2 only).
SuiteResult horn_suite(const Shape& s, int p_max, uint64_t seed, size_t trials);

// Normalization: binomial dimension count, complement split, projection
// onto the face-kernel part, quotient homology against the cycle part.
SuiteResult normalization_suite(const Shape& s, int p_max, uint64_t seed, size_t trials);

// Contraction: boundary-homotopy identity, the face identities, nullity of
// the symmetric/alternating pieces (constant shapes), equivariance.
SuiteResult contraction_suite(const Shape& s, int p_max, uint64_t seed, size_t trials);

// Depth filtration: level bounds and per-level collapse.
SuiteResult spectral_suite(const Shape& s, int p_max);

std::vector<SuiteResult> all_suites(const Shape& s, int p_max, uint64_t seed, size_t trials);

} // namespace dstm
