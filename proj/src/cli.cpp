#include "dstm/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dstm/enumeration.hpp"
#include "dstm/io.hpp"
#include "dstm/realization.hpp"
#include "dstm/suites.hpp"
#include "dstm/version.hpp"

namespace dstm {

namespace {

using ordered_json = nlohmann::ordered_json;

size_t default_trials(size_t fallback) {
    if (const char* s = std::getenv("DSTM_TRIALS")) {
        const long v = std::atol(s);
        if (v >= 1) return static_cast<size_t>(v);
    }
    return fallback;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s = "dstm";
    for (const auto& a : args) s += " " + a;
    return s;
}

ordered_json report_head(const std::vector<std::string>& args) {
    ordered_json doc;
    doc["command"] = join_args(args);
    doc["version"] = DSTM_VERSION;
    return doc;
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

int run_classify(const std::vector<std::string>& args, const std::string& shape_str,
                 const std::string& format, std::ostream& out) {
    const Shape s = Shape::parse(shape_str);
    const auto c = classify_shape(s);
    if (format == "csv") {
        out << "k,n,threshold,strict,verdict\n"
            << c.k << ',' << c.n << ',' << c.threshold << ',' << (c.strict ? "true" : "false")
            << ",\"" << c.verdict << "\"\n";
        return 0;
    }
    ordered_json doc = report_head(args);
    doc["shape"] = s.entries;
    doc["k"] = c.k;
    doc["n"] = c.n;
    doc["threshold"] = c.threshold;
    doc["strict"] = c.strict;
    if (!c.strict) doc["witness_degrees"] = {c.witness_lo, c.witness_hi};
    doc["verdict"] = c.verdict;
    emit(out, doc);
    return 0;
}

int run_ranks(const std::vector<std::string>& args, const std::string& shape_str, int p_max,
              int j, const std::string& format, std::ostream& out) {
    const Shape s = Shape::parse(shape_str);
    if (p_max < 0) p_max = s.k() + 2;
    const auto report = consistency_checks(s, p_max, j);
    if (format == "csv") {
        out << rank_report_csv(report);
        return report.all_ok ? 0 : 1;
    }
    ordered_json doc = report_head(args);
    doc["shape"] = s.entries;
    doc["pmax"] = report.p_max;
    doc["j"] = report.j;
    auto rows = ordered_json::array();
    for (const auto& r : report.rows) {
        ordered_json row;
        row["p"] = r.p;
        row["dimX"] = r.dim_x;
        row["dimR"] = r.dim_r ? ordered_json(*r.dim_r) : ordered_json(nullptr);
        row["dimN"] = r.dim_n;
        row["dimZ"] = r.dim_z;
        row["fR"] = r.f_r ? ordered_json(*r.f_r) : ordered_json(nullptr);
        row["fZ"] = r.f_z;
        row["ok"] = r.ok;
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["all_ok"] = report.all_ok;
    emit(out, doc);
    return report.all_ok ? 0 : 1;
}

int run_verify(const std::vector<std::string>& args, const std::string& shape_str,
               const std::string& suite, int p_max, uint64_t seed, size_t trials,
               std::ostream& out) {
    const Shape s = Shape::parse(shape_str);
    if (p_max < 0) p_max = s.dim() + 2;

    std::vector<SuiteResult> results;
    if (suite == "horn")
        results.push_back(horn_suite(s, p_max, seed, trials));
    else if (suite == "normalization")
        results.push_back(normalization_suite(s, p_max, seed, trials));
    else if (suite == "contraction")
        results.push_back(contraction_suite(s, p_max, seed, trials));
    else if (suite == "spectral")
        results.push_back(spectral_suite(s, p_max));
    else if (suite == "all")
        results = all_suites(s, p_max, seed, trials);
    else
        fail_usage("unknown suite '" + suite + "'");

    bool pass = true;
    ordered_json doc = report_head(args);
    doc["shape"] = s.entries;
    doc["suite"] = suite;
    doc["pmax"] = p_max;
    doc["seed"] = seed;
    doc["trials"] = trials;
    auto arr = ordered_json::array();
    for (const auto& r : results) {
        pass = pass && r.pass;
        ordered_json sj;
        sj["suite"] = r.suite;
        auto checks = ordered_json::array();
        for (const auto& c : r.checks) {
            ordered_json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        sj["checks"] = std::move(checks);
        sj["pass"] = r.pass;
        arr.push_back(std::move(sj));
    }
    doc["suites"] = std::move(arr);
    doc["pass"] = pass;
    emit(out, doc);
    return pass ? 0 : 1;
}

int run_realize(const std::vector<std::string>& args, const std::string& shape_str,
                const std::string& tensor_path, int p_max, uint64_t seed, size_t trials,
                const std::string& format, const std::string& write_path, std::ostream& out) {
    const auto t = read_tensor_file(tensor_path);
    if (!shape_str.empty() && !(Shape::parse(shape_str) == t.shape))
        fail_input("tensor file shape (" + t.shape.str() + ") does not match --shape " + shape_str);
    const int n = t.shape.dim();
    if (t.degree != n)
        fail_input("realization needs a top-degree tensor (degree " + std::to_string(n) + ")");
    if (p_max < 0) p_max = n;

    RationalField fld;
    const auto ks = kernel_sequence(fld, t, p_max);
    const auto hom = homology_generated(fld, t, std::max(n + 1, 2));

    // Generic-locus detection: the tensor's rank profile must match the
    // generic one at every computed degree.
    std::vector<size_t> generic_ranks;
    bool generic = true;
    for (int p = 0; p <= p_max; ++p) {
        const auto gr = generic_rank(t.shape, p, trials, seed, 0);
        generic_ranks.push_back(gr.exact ? *gr.exact : gr.rank);
        if (ks.ranks[static_cast<size_t>(p)] != generic_ranks.back()) generic = false;
    }

    if (!write_path.empty()) write_tensor_file(write_path, t);

    if (format == "csv") {
        out << "p,dimC,rank,dimK\n";
        for (int p = 0; p <= p_max; ++p)
            out << p << ',' << ks.source_dims[p] << ',' << ks.ranks[p] << ','
                << ks.kernels[p].dim() << "\n";
        for (int p = 0; p <= p_max; ++p) {
            out << "K" << p << "\n";
            const auto& b = ks.kernels[p].basis;
            for (size_t r = 0; r < b.rows; ++r) {
                for (size_t c = 0; c < b.cols; ++c)
                    out << (c ? "," : "") << rational_str(b.at(r, c));
                out << "\n";
            }
        }
        return 0;
    }

    ordered_json doc = report_head(args);
    doc["shape"] = t.shape.entries;
    doc["degree"] = t.degree;
    doc["tensor_hash"] = ks.tensor_hash;
    doc["pmax"] = p_max;
    doc["seed"] = seed;
    doc["trials"] = trials;
    doc["source_dims"] = ks.source_dims;
    doc["ranks"] = ks.ranks;
    auto kdims = ordered_json::array();
    auto bases = ordered_json::array();
    for (int p = 0; p <= p_max; ++p) {
        kdims.push_back(ks.kernels[p].dim());
        auto basis = ordered_json::array();
        const auto& b = ks.kernels[p].basis;
        for (size_t r = 0; r < b.rows; ++r) {
            auto row = ordered_json::array();
            for (size_t c = 0; c < b.cols; ++c) row.push_back(rational_str(b.at(r, c)));
            basis.push_back(std::move(row));
        }
        bases.push_back(std::move(basis));
    }
    doc["kernel_dims"] = std::move(kdims);
    doc["kernel_bases"] = std::move(bases);
    doc["incidence"] = true; // asserted during construction
    doc["betti"] = hom.betti;
    doc["betti_formula"] = hom.betti_formula;
    doc["betti_agree"] = hom.agree;
    doc["generic_ranks"] = generic_ranks;
    doc["generic"] = generic;
    emit(out, doc);
    return hom.agree ? 0 : 1;
}

int run_generic_rank(const std::vector<std::string>& args, const std::string& shape_str, int p,
                     size_t trials, uint64_t seed, int prime_bits, std::ostream& out) {
    const Shape s = Shape::parse(shape_str);
    const auto r = generic_rank(s, p, trials, seed, prime_bits);
    if (r.exact)
        require(r.rank <= *r.exact, "sampled rank exceeds the exact generic rank");
    ordered_json doc = report_head(args);
    doc["shape"] = s.entries;
    doc["p"] = p;
    doc["trials"] = r.trials;
    doc["seed"] = seed;
    doc["q"] = r.q;
    doc["rank"] = r.rank;
    doc["all_trials_agree"] = r.all_trials_agree;
    doc["certified_lower"] = true;
    doc["exact_mode"] = r.exact.has_value();
    if (r.exact) {
        doc["exact"] = *r.exact;
        doc["exact_matches_sampled"] = (*r.exact == r.rank);
    }
    emit(out, doc);
    return 0;
}

int run_moduli(const std::vector<std::string>& args, const std::string& shape_str, size_t samples,
               uint64_t seed, std::ostream& out) {
    const Shape s = Shape::parse(shape_str);
    require(s == Shape::of({3, 3}), "fingerprint supported for shape 3,3 only");
    const auto m = moduli_fingerprint(samples, seed);
    ordered_json doc = report_head(args);
    doc["shape"] = s.entries;
    doc["samples"] = m.samples;
    doc["seed"] = seed;
    doc["pairs_identical"] = m.pairs_identical;
    doc["distinct_checked"] = m.distinct_checked;
    doc["distinct_separated"] = m.distinct_separated;
    doc["fingerprints"] = m.fingerprints;
    doc["pass"] = m.pass;
    emit(out, doc);
    return m.pass ? 0 : 1;
}

} // namespace

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations on diagonal simplicial tensor modules"};
    app.set_version_flag("--version", DSTM_VERSION);
    app.require_subcommand(1);

    std::string shape_str, format = "json", suite = "all", tensor_path, write_path;
    int p = 0, p_max = -1, j = 0, prime_bits = 0;
    uint64_t seed = 0;
    size_t trials = 0;

    auto* classify = app.add_subcommand("classify", "uniqueness threshold and strictness");
    classify->add_option("--shape", shape_str, "comma-separated shape, e.g. 3,3")->required();
    classify->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* ranks = app.add_subcommand("ranks", "rank table with formula cross-checks");
    ranks->add_option("--shape", shape_str, "comma-separated shape")->required();
    ranks->add_option("--pmax", p_max, "top degree (default k+2)");
    ranks->add_option("--j", j, "omitted face for the kernel column");
    ranks->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "identity suites over a shape");
    verify->add_option("--shape", shape_str, "comma-separated shape")->required();
    verify->add_option("--suite", suite, "horn, normalization, contraction, spectral, or all");
    verify->add_option("--pmax", p_max, "top degree (default n+2)");
    verify->add_option("--seed", seed, "RNG seed (echoed in the report)");
    verify->add_option("--trials", trials, "random samples per check");

    auto* realize = app.add_subcommand("realize", "kernel sequence and homology of a tensor");
    realize->add_option("--tensor", tensor_path, "tensor file (JSON)")->required();
    realize->add_option("--shape", shape_str, "expected shape (cross-checked)");
    realize->add_option("--pmax", p_max, "kernel window (default n)");
    realize->add_option("--seed", seed, "RNG seed for generic-rank sampling");
    realize->add_option("--trials", trials, "trials for generic-rank sampling");
    realize->add_option("--write-tensor", write_path, "re-emit the parsed tensor to a file");
    realize->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* grank = app.add_subcommand("generic-rank", "generic realization rank at one degree");
    grank->add_option("--shape", shape_str, "comma-separated shape")->required();
    grank->add_option("--p", p, "degree")->required();
    grank->add_option("--trials", trials, "random evaluations");
    grank->add_option("--seed", seed, "RNG seed");
    grank->add_option("--prime-bits", prime_bits, "bit size of the sampled prime (default 31)");

    auto* moduli = app.add_subcommand("moduli", "kernel-sequence fingerprint study");
    moduli->add_option("--shape", shape_str, "shape (3,3 only)");
    moduli->add_option("--samples", trials, "sampled diagonal pairs");
    moduli->add_option("--seed", seed, "RNG seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (classify->parsed()) return run_classify(args, shape_str, format, out);
        if (ranks->parsed()) return run_ranks(args, shape_str, p_max, j, format, out);
        if (verify->parsed())
            return run_verify(args, shape_str, suite, p_max, seed,
                              trials ? trials : default_trials(10), out);
        if (realize->parsed())
            return run_realize(args, shape_str, tensor_path, p_max, seed,
                               trials ? trials : default_trials(8), format, write_path, out);
        if (grank->parsed())
            return run_generic_rank(args, shape_str, p, trials ? trials : default_trials(8), seed,
                                    prime_bits, out);
        if (moduli->parsed())
            return run_moduli(args, shape_str.empty() ? "3,3" : shape_str, trials ? trials : 25,
                              seed, out);
        fail_usage("no command given");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrKind::usage: return 2;
            case ErrKind::input: return 3;
            default: return 1;
        }
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace dstm
