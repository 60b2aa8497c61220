#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dstm/realization.hpp"
#include "testutil.hpp"

using namespace dstm;
using namespace dstm::testutil;

TEST_CASE("realization matrix of the worked square example") {
    RationalField f;
    auto t = worked_t33();

    auto m0 = realization_matrix(f, t, 0);
    REQUIRE(m0.rows == 1);
    REQUIRE(m0.cols == 3);
    CHECK(m0.row(0) == std::vector<Rational>{1, 2, 3}); // the diagonal
    CHECK(rank_of(f, m0) == 1);

    auto m1 = realization_matrix(f, t, 1);
    REQUIRE(m1.rows == 4);
    REQUIRE(m1.cols == 6);
    CHECK(m1.row(0) == std::vector<Rational>{1, 1, 1, 2, 2, 3});
    CHECK(m1.row(1) == std::vector<Rational>{1, 1, 1, 2, 1, 3});
    CHECK(m1.row(2) == std::vector<Rational>{1, 2, 2, 2, 2, 3});
    CHECK(m1.row(3) == std::vector<Rational>{1, 2, 3, 2, 3, 3});
    CHECK(rank_of(f, m1) == 4);

    CHECK(rank_of(f, realization_matrix(f, t, 2)) == 8);

    // Only top-degree tensors realize.
    Rng rng(1);
    auto low = random_tensor(f, rng, t.shape, 1);
    CHECK_THROWS_AS(realization_matrix(f, low, 1), Error);
}

TEST_CASE("kernel sequence of the worked square example") {
    RationalField f;
    auto ks = kernel_sequence(f, worked_t33(), 2);
    CHECK(ks.source_dims == std::vector<size_t>{3, 6, 10});
    CHECK(ks.ranks == std::vector<size_t>{1, 4, 8});
    for (int p = 0; p <= 2; ++p) CHECK(ks.kernels[p].dim() == 2);

    Mat<RationalField> k0(2, 3);
    k0.set_row(0, {f.one(), f.zero(), make_rational(-1, 3)});
    k0.set_row(1, {f.zero(), f.one(), make_rational(-2, 3)});
    CHECK(ks.kernels[0] == Subspace<RationalField>::from_rows(f, k0));

    std::vector<Rational> v1 = {-2, 0, 0, 1, 0, 0};
    std::vector<Rational> v2 = {-3, 0, 0, 0, 0, 1};
    CHECK(subspace_contains(f, ks.kernels[1], v1));
    CHECK(subspace_contains(f, ks.kernels[1], v2));
    // Those two already span K_1.
    Mat<RationalField> k1(2, 6);
    k1.set_row(0, v1);
    k1.set_row(1, v2);
    CHECK(ks.kernels[1] == Subspace<RationalField>::from_rows(f, k1));

    CHECK(incidence_check(f, ks));
    CHECK(ks.tensor_hash.size() == 16);
    CHECK(ks.tensor_hash == tensor_digest(f, worked_t33()));
}

TEST_CASE("incidence fails once a kernel is perturbed off the ladder") {
    RationalField f;
    auto ks = kernel_sequence(f, worked_t33(), 1);
    auto rows = ks.kernels[1].basis;
    rows.at(0, 0) = f.add(rows.at(0, 0), f.one()); // shift by e_0
    ks.kernels[1] = Subspace<RationalField>::from_rows(f, rows);
    CHECK_FALSE(incidence_check(f, ks));
}

TEST_CASE("simplex complex matrices satisfy the simplicial identities") {
    RationalField f;
    for (int n = 1; n <= 3; ++n) {
        for (int p = 2; p <= 3; ++p) {
            CHECK(is_zero_mat(
                f, matmul(f, simplex_boundary_matrix(f, p - 1, n), simplex_boundary_matrix(f, p, n))));
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j <= p; ++j)
                    CHECK(matmul(f, simplex_face_matrix(f, p - 1, n, i),
                                 simplex_face_matrix(f, p, n, j)) ==
                          matmul(f, simplex_face_matrix(f, p - 1, n, j - 1),
                                 simplex_face_matrix(f, p, n, i)));
        }
    }
}

TEST_CASE("realization is a morphism of simplicial modules") {
    RationalField f;
    Rng rng(29);
    for (const auto& s : {Shape::of({3, 3}), Shape::of({2, 3}), Shape::of({2, 2, 2})}) {
        const int n = s.dim();
        auto t = random_tensor(f, rng, s, n);
        std::vector<Mat<RationalField>> m;
        for (int p = 0; p <= 3; ++p) m.push_back(realization_matrix(f, t, p));
        for (int p = 1; p <= 3; ++p) {
            for (int i = 0; i <= p; ++i) {
                CHECK(matmul(f, face_matrix(f, s, p, i), m[p]) ==
                      matmul(f, m[p - 1], simplex_face_matrix(f, p, n, i)));
            }
        }
        // Kernel dimension is the nullity.
        auto ks = kernel_sequence(f, t, 3);
        for (int p = 0; p <= 3; ++p)
            CHECK(ks.kernels[p].dim() == ks.source_dims[p] - ks.ranks[p]);
    }
}

TEST_CASE("zero tensors realize to nothing") {
    RationalField f;
    auto z = zero_tensor<RationalField>(Shape::of({3, 3}), 2);
    auto ks = kernel_sequence(f, z, 2);
    for (int p = 0; p <= 2; ++p) {
        CHECK(ks.ranks[p] == 0);
        CHECK(ks.kernels[p].dim() == ks.source_dims[p]);
    }
}

TEST_CASE("generated homology of the worked examples") {
    RationalField f;
    // Generic square tensor: connected, one loop.
    auto hom = homology_generated(f, worked_t33(), 3);
    CHECK(hom.agree);
    CHECK(hom.betti == std::vector<size_t>{0, 1, 0});

    // All-ones: contractible image, bottom class only.
    auto ones = tensor_from_entries<RationalField>(
        Shape::of({3, 3}), 2, std::vector<Rational>(9, Rational(1)));
    auto hom1 = homology_generated(f, ones, 2);
    CHECK(hom1.agree);
    CHECK(hom1.betti == std::vector<size_t>{1, 0});

    // The basis tensor at (0,1,2) carries a two-sphere.
    auto sphere = basis_tensor(f, Shape::of({3, 3, 3}), 2, {0, 1, 2});
    auto hom2 = homology_generated(f, sphere, 3);
    CHECK(hom2.agree);
    CHECK(hom2.betti == std::vector<size_t>{0, 0, 1});

    CHECK_THROWS_AS(homology_generated(f, worked_t33(), 1), Error);
}

TEST_CASE("both homology routes agree on random tensors") {
    RationalField f;
    Rng rng(47);
    for (const auto& s : {Shape::of({2, 2}), Shape::of({3, 3}), Shape::of({2, 3})}) {
        for (int trial = 0; trial < 3; ++trial) {
            auto t = random_tensor(f, rng, s, s.dim());
            auto hom = homology_generated(f, t, std::max(s.dim(), 2) + 1);
            CHECK(hom.agree);
        }
    }
}

TEST_CASE("generic ranks: sampled trials and symbolic elimination") {
    auto r22 = generic_rank(Shape::of({2, 2}), 1, 4, 7, 0);
    CHECK(r22.rank == 2);
    CHECK(r22.all_trials_agree);
    CHECK(r22.trials == 4);
    CHECK(r22.q > (1ull << 30));
    CHECK(is_prime_u64(r22.q));
    REQUIRE(r22.exact.has_value());
    CHECK(*r22.exact == 2);
    // Source dimension 3 leaves a one-dimensional kernel at the generic point.
    CHECK(monotone_count(1, 1) - r22.rank == 1);

    auto r33p0 = generic_rank(Shape::of({3, 3}), 0, 4, 7, 0);
    CHECK(r33p0.rank == 1);
    CHECK(*r33p0.exact == 1);
    auto r33p1 = generic_rank(Shape::of({3, 3}), 1, 4, 7, 0);
    CHECK(r33p1.rank == 4);
    CHECK(*r33p1.exact == 4);
    auto r33p2 = generic_rank(Shape::of({3, 3}), 2, 4, 7, 0);
    CHECK(r33p2.rank == 8);
    CHECK(*r33p2.exact == 8);

    CHECK(symbolic_generic_rank(Shape::of({2, 2}), 1) == 2);
    CHECK(symbolic_generic_rank(Shape::of({3, 3}), 2) == 8);
    // Column count 15 exceeds the symbolic budget.
    CHECK_THROWS_AS(symbolic_generic_rank(Shape::of({3, 3}), 3), Error);
    auto wide = generic_rank(Shape::of({3, 3}), 3, 3, 7, 0);
    CHECK_FALSE(wide.exact.has_value());
    CHECK(wide.rank == 13);
    CHECK(wide.all_trials_agree);
}

TEST_CASE("degree-zero kernels separate sampled tensors") {
    RationalField f;
    Rng rng(83);
    auto s = Shape::of({3, 3});
    std::set<std::string> seen;
    for (int trial = 0; trial < 8; ++trial) {
        auto t = random_tensor(f, rng, s, 2);
        auto m0 = realization_matrix(f, t, 0);
        if (rank_of(f, m0) == 0) continue;
        auto k0 = kernel_of(f, m0);
        std::string key;
        for (const auto& x : k0.basis.a) key += rational_str(x) + ";";
        seen.insert(key);
    }
    CHECK(seen.size() >= 3);
}

TEST_CASE("tensor digests key on content") {
    RationalField f;
    auto a = worked_t33();
    auto b = worked_t33();
    CHECK(tensor_digest(f, a) == tensor_digest(f, b));
    b.c[3] = f.add(b.c[3], f.one());
    CHECK(tensor_digest(f, a) != tensor_digest(f, b));
    auto other_shape = tensor_from_entries<RationalField>(
        Shape::of({3, 3, 3}), 0, {Rational(1)});
    CHECK(tensor_digest(f, a) != tensor_digest(f, other_shape));
}

TEST_CASE("moduli fingerprints are deterministic and pass") {
    auto m1 = moduli_fingerprint(4, 123);
    CHECK(m1.pass);
    CHECK(m1.samples == 4);
    CHECK(m1.pairs_identical == 4);
    CHECK(m1.distinct_checked == 4);
    CHECK(m1.distinct_separated == 4);
    CHECK(m1.fingerprints.size() == 4);
    auto m2 = moduli_fingerprint(4, 123);
    CHECK(m1.fingerprints == m2.fingerprints);
}

TEST_CASE("base change flags exactly the kernels that jump") {
    // Rank drop mod 2: the 2x2 tensor (1 1 / 1 3) realizes with rank 2
    // over the rationals but rank 1 over GF(2).
    auto t = rational_tensor(Shape::of({2, 2}), 1, {1, 1, 1, 3});
    auto r = base_change_check(t, {2, 2147483647ull}, 1);
    CHECK(r.dims_rational == std::vector<size_t>{1, 1});
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].q == 2);
    CHECK(r.rows[0].dims_mod == std::vector<size_t>{1, 2});
    CHECK(r.rows[0].drop);
    CHECK(r.rows[1].q == 2147483647ull);
    CHECK(r.rows[1].dims_mod == r.dims_rational);
    CHECK_FALSE(r.rows[1].drop);

    // The worked example stays stable at a large prime.
    auto rr = base_change_check(worked_t33(), {2147483647ull}, 2);
    CHECK(rr.dims_rational == std::vector<size_t>{2, 2, 2});
    CHECK_FALSE(rr.rows[0].drop);
    // Drop flags must match the dimension comparison on every row.
    for (const auto& row : rr.rows)
        CHECK(row.drop == (row.dims_mod != rr.dims_rational));

    // Non-integer tensors are rejected.
    auto frac = zero_tensor<RationalField>(Shape::of({2, 2}), 1);
    frac.c[0] = make_rational(1, 2);
    CHECK_THROWS_AS(base_change_check(frac, {5}, 1), Error);
}
