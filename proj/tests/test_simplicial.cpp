#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dstm/shape.hpp"
#include "dstm/tensor.hpp"
#include "testutil.hpp"

using namespace dstm;
using namespace dstm::testutil;

TEST_CASE("shape parsing and basic invariants") {
    auto s = Shape::parse("2,3,4");
    CHECK(s == Shape::of({2, 3, 4}));
    CHECK(s.str() == "2,3,4");
    CHECK(s.k() == 3);
    CHECK(s.dim() == 1);
    CHECK_FALSE(s.constant());
    CHECK(Shape::of({3, 3}).dim() == 2);
    CHECK(Shape::of({3, 3}).constant());
    CHECK(Shape::of({1, 5}).dim() == 0);
    for (const char* bad : {"", "a", "3,0", "-1,2", "2,,3"}) {
        CHECK_THROWS_AS(Shape::parse(bad), Error);
    }
    CHECK_THROWS_AS(Shape::of({}), Error);
    CHECK_THROWS_AS(Shape::of({2, 0}), Error);
}

TEST_CASE("axis bounds grow linearly and vanish at tight axes") {
    auto s = Shape::of({2, 3, 4});
    for (int p = 0; p <= 4; ++p) {
        CHECK(s.bound(0, p) == p);
        CHECK(s.bound(1, p) == p + 1);
        CHECK(s.bound(2, p) == p + 2);
    }
    // Axes realizing the minimum have bound 0 at degree 0.
    for (const auto& sh : small_shapes()) {
        int mn = *std::min_element(sh.entries.begin(), sh.entries.end());
        for (int a = 0; a < sh.k(); ++a) {
            if (sh.entries[a] == mn) CHECK(sh.bound(a, 0) == 0);
            CHECK(sh.bound(a, 0) >= 0);
        }
    }
    CHECK(index_count(Shape::of({3, 3}), 0) == 1);
    CHECK(index_count(Shape::of({3, 3, 3}), 0) == 1);
}

TEST_CASE("index ranking is a lexicographic bijection") {
    for (const auto& s : small_shapes()) {
        for (int p = 0; p <= 3; ++p) {
            auto idx = index_set(s, p);
            CHECK(idx.size() == index_count(s, p));
            size_t prod = 1;
            for (int a = 0; a < s.k(); ++a) prod *= static_cast<size_t>(s.bound(a, p)) + 1;
            CHECK(idx.size() == prod);
            for (size_t r = 0; r < idx.size(); ++r) {
                CHECK(valid_index(s, p, idx[r]));
                CHECK(index_rank(s, p, idx[r]) == r);
                CHECK(index_unrank(s, p, r) == idx[r]);
                if (r > 0) CHECK(idx[r - 1] < idx[r]); // vector lex order
            }
        }
    }
    auto s = Shape::of({2, 3});
    CHECK_FALSE(valid_index(s, 0, {0, 2}));
    CHECK_FALSE(valid_index(s, 1, {2, 0}));
    CHECK(valid_index(s, 1, {1, 2}));
}

TEST_CASE("next_index walks the whole box once") {
    std::vector<int> bounds = {1, 2};
    MultiIndex m(2, 0);
    std::set<MultiIndex> seen;
    do {
        seen.insert(m);
    } while (next_index(bounds, m));
    CHECK(seen.size() == 6);
}

TEST_CASE("image mask and face preimages") {
    CHECK(image_mask({0, 2, 2}) == 0b101);
    CHECK(image_mask({1}) == 0b10);
    auto s = Shape::of({3, 3});
    // m = (0,2) avoids the value 1, so it is in the image of Delta_1.
    auto pre = face_preimage(s, 2, 1, {0, 2});
    REQUIRE(pre.has_value());
    CHECK(*pre == MultiIndex{0, 1});
    CHECK(coface_index(s, 2, 1, *pre) == MultiIndex{0, 2});
    CHECK_FALSE(face_preimage(s, 2, 1, {1, 2}).has_value());
}

TEST_CASE("simplicial identities hold on random tensors") {
    RationalField f;
    Rng rng(101);
    for (const auto& s : small_shapes()) {
        for (int p = 2; p <= 3; ++p) {
            auto t = random_tensor(f, rng, s, p);
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j <= p; ++j)
                    CHECK(face(face(t, j), i) == face(face(t, i), j - 1));
            for (int j = 0; j <= p; ++j) {
                for (int i = 0; i <= p; ++i) {
                    auto st = degeneracy(t, j);
                    if (i < j) CHECK(face(st, i) == degeneracy(face(t, i), j - 1));
                    if (i == j || i == j + 1) CHECK(face(st, i) == t);
                    if (i > j + 1) CHECK(face(st, i) == degeneracy(face(t, i - 1), j));
                }
                for (int i = 0; i <= j; ++i)
                    CHECK(degeneracy(degeneracy(t, j), i) == degeneracy(degeneracy(t, i), j + 1));
            }
        }
    }
}

TEST_CASE("boundary squares to zero") {
    RationalField f;
    Rng rng(7);
    for (const auto& s : small_shapes()) {
        for (int p = 2; p <= 3; ++p) {
            auto t = random_tensor(f, rng, s, p);
            CHECK(is_zero_tensor(f, boundary(f, boundary(f, t))));
            CHECK(is_zero_mat(f, matmul(f, boundary_matrix(f, s, p - 1), boundary_matrix(f, s, p))));
        }
    }
}

TEST_CASE("operator matrices agree with the index-shuffle implementations") {
    RationalField f;
    Rng rng(13);
    for (const auto& s : small_shapes()) {
        for (int p = 1; p <= 2; ++p) {
            auto t = random_tensor(f, rng, s, p);
            for (int i = 0; i <= p; ++i) {
                CHECK(face(t, i).c == matvec(f, face_matrix(f, s, p, i), t.c));
                CHECK(degeneracy(t, i).c == matvec(f, degeneracy_matrix(f, s, p, i), t.c));
            }
            CHECK(boundary(f, t).c == matvec(f, boundary_matrix(f, s, p), t.c));
        }
    }
}

TEST_CASE("faces of basis tensors follow the coface preimage rule") {
    RationalField f;
    auto s = Shape::of({2, 3});
    for (int p = 1; p <= 2; ++p) {
        for (const auto& m : index_set(s, p)) {
            auto e = basis_tensor(f, s, p, m);
            for (int i = 0; i <= p; ++i) {
                auto d = face(e, i);
                auto pre = face_preimage(s, p, i, m);
                if (pre)
                    CHECK(d == basis_tensor(f, s, p - 1, *pre));
                else
                    CHECK(is_zero_tensor(f, d));
            }
        }
    }
}

TEST_CASE("tensor arithmetic") {
    RationalField f;
    Rng rng(3);
    auto s = Shape::of({3, 3});
    auto a = random_tensor(f, rng, s, 1);
    auto b = random_tensor(f, rng, s, 1);
    CHECK(tensor_sub(f, tensor_add(f, a, b), b) == a);
    CHECK(is_zero_tensor(f, tensor_sub(f, a, a)));
    auto twice = tensor_scale(f, f.from_int(2), a);
    CHECK(twice == tensor_add(f, a, a));
    auto e = basis_tensor(f, s, 1, {1, 0});
    CHECK(support(f, e) == std::vector<size_t>{index_rank(s, 1, {1, 0})});
    CHECK_THROWS_AS(tensor_from_entries<RationalField>(s, 1, {Rational(1)}), Error);
    CHECK_THROWS_AS(tensor_add(f, a, random_tensor(f, rng, s, 2)), Error);
}

TEST_CASE("permutations act through the stabilizer") {
    RationalField f;
    Rng rng(17);
    auto s = Shape::of({3, 2, 3});
    CHECK(stab_contains(s, {2, 1, 0}));
    CHECK_FALSE(stab_contains(s, {1, 0, 2}));
    CHECK(perm_sign({0, 1, 2}) == 1);
    CHECK(perm_sign({2, 1, 0}) == -1);
    CHECK(perm_inverse({2, 0, 1}) == std::vector<int>{1, 2, 0});

    for (const auto& sh : small_shapes()) {
        for (int trial = 0; trial < 5; ++trial) {
            auto sigma = random_stab_element(sh, rng);
            CHECK(stab_contains(sh, sigma));
            auto inv = perm_inverse(sigma);
            auto t = random_tensor(f, rng, sh, 2);
            CHECK(permute_axes(permute_axes(t, sigma), inv) == t);
            // Structure maps are equivariant for the axis action.
            for (int i = 0; i <= 2; ++i) {
                CHECK(face(permute_axes(t, sigma), i) == permute_axes(face(t, i), sigma));
                CHECK(degeneracy(permute_axes(t, sigma), i) == permute_axes(degeneracy(t, i), sigma));
            }
        }
    }

    // Composition order: apply sigma, then tau.
    auto s3 = Shape::of({2, 2, 2});
    std::vector<int> sigma = {1, 0, 2}, tau = {0, 2, 1};
    std::vector<int> both(3);
    for (int a = 0; a < 3; ++a) both[a] = tau[sigma[a]];
    auto t = random_tensor(f, rng, s3, 1);
    CHECK(permute_axes(permute_axes(t, sigma), tau) == permute_axes(t, both));

    // Basis tensors land on the permuted index.
    auto m = MultiIndex{1, 0, 1};
    CHECK(permute_axes(basis_tensor(f, s3, 1, m), sigma) ==
          basis_tensor(f, s3, 1, apply_perm_to_index(sigma, m)));
    CHECK_THROWS_AS(permute_axes(t, std::vector<int>{0, 1}), Error);
}
