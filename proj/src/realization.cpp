#include "dstm/realization.hpp"

#include <cstdlib>

namespace dstm {

static int prime_bits_default() {
    if (const char* s = std::getenv("DSTM_PRIME_BITS")) {
        int b = std::atoi(s);
        if (b >= 31 && b <= 62) return b;
    }
    return 31;
}

GenericRankResult generic_rank(const Shape& s, int p, size_t trials, uint64_t seed, int prime_bits) {
    require(trials >= 1, "at least one trial");
    if (prime_bits == 0) prime_bits = prime_bits_default();
    GenericRankResult out;
    out.trials = trials;
    Rng prime_rng(derive_seed(seed, 0));
    out.q = sample_prime(prime_rng, prime_bits);
    PrimeField fld(out.q);

    const int n = s.dim();
    std::optional<size_t> first;
    for (size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t + 1));
        auto tensor = random_tensor(fld, rng, s, n);
        size_t r = rank_of(fld, realization_matrix(fld, tensor, p));
        if (!first) first = r;
        if (r != *first) out.all_trials_agree = false;
        out.rank = std::max(out.rank, r);
    }
    if (monotone_count(p, n) <= kSymbolicColumnLimit) out.exact = symbolic_generic_rank(s, p);
    return out;
}

// Rank profile at degrees 0..p_max against the generic values; the generic
// locus is exactly where they all match.
template <class F>
static bool is_generic(const F& fld, const Tensor<F>& t, const std::vector<size_t>& generic_ranks) {
    for (size_t p = 0; p < generic_ranks.size(); ++p)
        if (rank_of(fld, realization_matrix(fld, t, static_cast<int>(p))) != generic_ranks[p])
            return false;
    return true;
}

namespace {

// Square two-axis sampling helpers for the fingerprint study. Indices of
// I_2 are (i, j) with 0 <= i, j <= 2; the diagonal triple sits at i == j.
struct Square33 {
    RationalField fld;
    Shape s = Shape::of({3, 3});

    size_t diag_rank(int i) const { return index_rank(s, 2, {i, i}); }

    Tensor<RationalField> with_diagonal(const std::vector<Rational>& diag, Rng& rng) const {
        auto t = zero_tensor<RationalField>(s, 2);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                t.c[index_rank(s, 2, {i, j})] = (i == j) ? diag[i] : fld.sample(rng);
        return t;
    }

    std::vector<Rational> random_diagonal(Rng& rng) const {
        std::vector<Rational> d(3);
        for (auto& v : d)
            do {
                v = fld.sample(rng);
            } while (v == 0);
        return d;
    }
};

bool projectively_equal(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    // Rank of the 2x3 stack: equal up to scale iff every 2x2 minor vanishes.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

} // namespace

ModuliFingerprint moduli_fingerprint(size_t samples, uint64_t seed) {
    Square33 sq;
    const std::vector<size_t> generic_ranks = {1, 4, 8};
    constexpr int kResampleLimit = 64;
    constexpr int kPmax = 2;

    ModuliFingerprint out;
    out.samples = samples;
    bool ok = true;

    for (size_t idx = 0; idx < samples; ++idx) {
        Rng rng(derive_seed(seed, idx));

        auto diag = sq.random_diagonal(rng);
        auto draw_generic = [&](const std::vector<Rational>& d) {
            for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
                auto t = sq.with_diagonal(d, rng);
                if (is_generic(sq.fld, t, generic_ranks)) return t;
            }
            fail_check("no generic tensor found for the sampled diagonal");
        };

        auto t1 = draw_generic(diag);
        auto t2 = draw_generic(diag);
        auto ks1 = kernel_sequence(sq.fld, t1, kPmax);
        auto ks2 = kernel_sequence(sq.fld, t2, kPmax);
        bool identical = true;
        for (int p = 0; p <= kPmax; ++p)
            if (!(ks1.kernels[p] == ks2.kernels[p])) identical = false;
        if (identical)
            ++out.pairs_identical;
        else
            ok = false;

        // A projectively distinct diagonal must separate the degree-0
        // kernels (they are the hyperplanes cut out by the diagonals).
        std::vector<Rational> other;
        do {
            other = sq.random_diagonal(rng);
        } while (projectively_equal(diag, other));
        auto t3 = draw_generic(other);
        auto ks3 = kernel_sequence(sq.fld, t3, 0);
        ++out.distinct_checked;
        if (!(ks3.kernels[0] == ks1.kernels[0]))
            ++out.distinct_separated;
        else
            ok = false;

        // Scaling the diagonal leaves the hyperplane alone.
        std::vector<Rational> scaled = {diag[0] * 5, diag[1] * 5, diag[2] * 5};
        auto t4 = draw_generic(scaled);
        auto ks4 = kernel_sequence(sq.fld, t4, 0);
        if (!(ks4.kernels[0] == ks1.kernels[0])) ok = false;

        // Fingerprint: digest of the pair's shared canonical kernel bases.
        uint64_t h = 1469598103934665603ull;
        auto eat = [&h](const std::string& str) {
            for (unsigned char ch : str) {
                h ^= ch;
                h *= 1099511628211ull;
            }
        };
        for (int p = 0; p <= kPmax; ++p)
            for (const auto& x : ks1.kernels[p].basis.a) eat(rational_str(x) + ";");
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        out.fingerprints.emplace_back(buf);
    }

    out.pass = ok && out.pairs_identical == samples && out.distinct_separated == samples;
    return out;
}

BaseChangeResult base_change_check(const Tensor<RationalField>& t,
                                   const std::vector<uint64_t>& primes, int p_max) {
    for (const auto& x : t.c)
        require(denominator(x) == 1, "base change needs integer entries");
    require(p_max >= 0, "p_max must be nonnegative");

    RationalField qf;
    BaseChangeResult out;
    for (int p = 0; p <= p_max; ++p) {
        auto m = realization_matrix(qf, t, p);
        out.dims_rational.push_back(m.cols - rank_of(qf, m));
    }

    for (uint64_t q : primes) {
        PrimeField fq(q);
        Tensor<PrimeField> tq(t.shape, t.degree);
        for (size_t i = 0; i < t.c.size(); ++i) tq.c[i] = fq.from_rational(t.c[i]);

        BaseChangeRow row;
        row.q = q;
        for (int p = 0; p <= p_max; ++p) {
            auto m = realization_matrix(fq, tq, p);
            row.dims_mod.push_back(m.cols - rank_of(fq, m));
        }
        row.drop = (row.dims_mod != out.dims_rational);
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace dstm
