#include "dstm/suites.hpp"

#include <sstream>

#include "dstm/contraction.hpp"
#include "dstm/horn.hpp"
#include "dstm/normalization.hpp"

namespace dstm {

namespace {

std::string dims_str(const std::vector<size_t>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

} // namespace

SuiteResult horn_suite(const Shape& s, int p_max, uint64_t seed, size_t trials) {
    RationalField fld;
    SuiteResult out;
    out.suite = "horn";
    const int n = s.dim();

    for (int p = 1; p <= p_max; ++p) {
        const auto d_part = canonical_bases(fld, s, p).d;
        for (int j = 0; j <= p; ++j) {
            const auto miss = missing_kernel(fld, s, p, j);
            const auto mj = subspace_meet_join(fld, miss, d_part);
            out.add("meet_trivial p=" + std::to_string(p) + " j=" + std::to_string(j),
                    mj.meet.dim() == 0,
                    "kernel dim " + std::to_string(miss.dim()) + ", meet with degenerate part " +
                        std::to_string(mj.meet.dim()));

            Rng rng(derive_seed(seed, (static_cast<uint64_t>(p) << 8) | static_cast<uint64_t>(j)));
            bool fills = true, degenerate = true, residuals = true, generic_seen = false;
            for (size_t tr = 0; tr < trials; ++tr) {
                const auto t = random_tensor(fld, rng, s, p);
                const auto dec = horn_decompose(fld, t, j);
                for (int i = 0; i <= p; ++i) {
                    if (i == j) continue;
                    if (!(face(dec.filler, i) == face(t, i))) fills = false;
                }
                if (!subspace_contains(fld, d_part, dec.filler.c)) degenerate = false;
                if (!subspace_contains(fld, miss, dec.residual.c)) residuals = false;
                if (genericity_test(fld, t, j)) generic_seen = true;
            }
            const std::string tag = " p=" + std::to_string(p) + " j=" + std::to_string(j);
            out.add("filler_faces_match" + tag, fills,
                    std::to_string(trials) + " random horns");
            out.add("filler_degenerate" + tag, degenerate);
            out.add("residual_in_kernel" + tag, residuals);
            out.add("generic_sample_seen" + tag, generic_seen || miss.dim() == 0);
        }
    }

    if (n >= 2) {
        for (int j = 0; j <= n; ++j) {
            auto hc = horn_complex_check(fld, s, j);
            out.add("horn_complex j=" + std::to_string(j), hc.pass,
                    "H2=" + std::to_string(hc.dim_h2) + " H1=" + std::to_string(hc.dim_h1) +
                        " dimR=" + std::to_string(hc.dim_r));
        }
    }
    return out;
}

SuiteResult normalization_suite(const Shape& s, int p_max, uint64_t seed, size_t trials) {
    RationalField fld;
    SuiteResult out;
    out.suite = "normalization";

    for (int p = 0; p <= p_max; ++p) {
        auto ez = ez_check(fld, s, p);
        out.add("dimension_split p=" + std::to_string(p), ez.pass,
                "dimX=" + std::to_string(ez.dim_x) + " binom_sum=" + std::to_string(ez.binomial_sum) +
                    " N=" + std::to_string(ez.dim_n) + " D=" + std::to_string(ez.dim_d) +
                    " meet=" + std::to_string(ez.dim_meet));
    }

    for (int p = 1; p <= p_max; ++p) {
        auto cb = canonical_bases(fld, s, p);
        Rng rng(derive_seed(seed, static_cast<uint64_t>(p)));
        bool in_n = true, complement_in_d = true, idempotent = true;
        for (size_t tr = 0; tr < trials; ++tr) {
            const auto t = random_tensor(fld, rng, s, p);
            const auto pi = em_project(fld, t);
            if (!subspace_contains(fld, cb.n, pi.c)) in_n = false;
            if (!subspace_contains(fld, cb.d, tensor_sub(fld, t, pi).c)) complement_in_d = false;
            if (!(em_project(fld, pi) == pi)) idempotent = false;
        }
        const std::string tag = " p=" + std::to_string(p);
        out.add("projection_lands_in_moore_part" + tag, in_n, std::to_string(trials) + " samples");
        out.add("projection_complement_degenerate" + tag, complement_in_d);
        out.add("projection_idempotent" + tag, idempotent);
    }

    if (p_max >= 2) {
        auto qh = quotient_homology_check(fld, s, p_max);
        for (const auto& row : qh.rows)
            out.add("quotient_homology r=" + std::to_string(row.r), row.ok,
                    "dimH=" + std::to_string(row.dim_h) +
                        " dimZ_prev=" + std::to_string(row.dim_z_prev));
    }
    return out;
}

SuiteResult contraction_suite(const Shape& s, int p_max, uint64_t seed, size_t trials) {
    RationalField fld;
    SuiteResult out;
    out.suite = "contraction";

    out.add("boundary_homotopy_identity", contraction_check(fld, s, p_max),
            "through degree " + std::to_string(p_max));

    // Face identities on every basis tensor: the zero face undoes the
    // homotopy, the others commute past it with a shift, and at degree 0
    // the top face kills the image.
    bool faces_ok = true;
    for (int p = 0; p <= p_max && faces_ok; ++p) {
        const auto bounds = degree_bounds(s, p);
        MultiIndex m(s.k(), 0);
        do {
            const auto e = basis_tensor(fld, s, p, m);
            const auto he = homotopy_apply(e);
            if (!(face(he, 0) == e)) faces_ok = false;
            if (p == 0) {
                if (!is_zero_tensor(fld, face(he, 1))) faces_ok = false;
            } else {
                for (int i = 1; i <= p + 1; ++i)
                    if (!(face(he, i) == homotopy_apply(face(e, i - 1)))) faces_ok = false;
            }
        } while (next_index(bounds, m) && faces_ok);
    }
    out.add("face_identities", faces_ok, "through degree " + std::to_string(p_max));

    Rng rng(derive_seed(seed, 1));
    bool equivariant = true;
    for (size_t tr = 0; tr < trials; ++tr) {
        const int p = static_cast<int>(rng.below(static_cast<uint64_t>(p_max) + 1));
        const auto t = random_tensor(fld, rng, s, p);
        const auto sigma = random_stab_element(s, rng);
        if (!(homotopy_apply(permute_axes(t, sigma)) == permute_axes(homotopy_apply(t), sigma)))
            equivariant = false;
    }
    out.add("equivariance", equivariant, std::to_string(trials) + " samples");

    if (s.constant() && p_max >= 1) {
        std::vector<Subspace<RationalField>> sym, alt;
        for (int p = 0; p <= p_max; ++p) {
            sym.push_back(symmetric_subspace(fld, s, p));
            alt.push_back(alternating_subspace(fld, s, p));
        }
        auto bs = subcomplex_betti(fld, s, sym);
        auto ba = subcomplex_betti(fld, s, alt);
        bool sym_zero = true, alt_zero = true;
        for (int p = 0; p <= p_max - 1; ++p) {
            if (bs[p] != 0) sym_zero = false;
            if (ba[p] != 0) alt_zero = false;
        }
        out.add("symmetric_betti_zero", sym_zero,
                dims_str(std::vector<size_t>(bs.begin(), bs.end() - 1)));
        out.add("alternating_betti_zero", alt_zero,
                dims_str(std::vector<size_t>(ba.begin(), ba.end() - 1)));
    }
    return out;
}

SuiteResult spectral_suite(const Shape& s, int p_max) {
    RationalField fld;
    SuiteResult out;
    out.suite = "spectral";
    out.add("graded_pieces_collapse", graded_collapse_check(fld, s, p_max),
            "through degree " + std::to_string(p_max));
    return out;
}

std::vector<SuiteResult> all_suites(const Shape& s, int p_max, uint64_t seed, size_t trials) {
    return {horn_suite(s, p_max, seed, trials), normalization_suite(s, p_max, seed, trials),
            contraction_suite(s, p_max, seed, trials), spectral_suite(s, p_max)};
}

} // namespace dstm
