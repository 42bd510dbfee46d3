#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coxspec/canonical.hpp"

using namespace coxspec;

namespace {

std::array<int, 10> random_perm(std::mt19937_64& rng) {
    std::array<int, 10> p;
    for (int i = 0; i < 10; ++i) p[i] = i + 1;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("canonical key is invariant under row and column permutations") {
    std::mt19937_64 rng(42);
    std::vector<TripleTuple> tuples = {
        {Triple(1, 2, 3)},
        {Triple(1, 4, 5), Triple(1, 2, 3)},
        {Triple(4, 5, 6), Triple(1, 2, 3)},
        {Triple(7, 8, 9), Triple(4, 5, 6), Triple(1, 2, 3)},
        {Triple(1, 2, 3), Triple(4, 5, 6), Triple(1, 2, 3)},
    };
    for (const auto& t : tuples) {
        Mat11 m = trans(t);
        CanonicalKey base = canonical_key(m);
        for (int probe = 0; probe < 50; ++probe) {
            Mat11 moved = permutation_matrix(random_perm(rng)) * m *
                          permutation_matrix(random_perm(rng));
            CHECK(canonical_key(moved) == base);
        }
    }
}

TEST_CASE("canonical key separates distinct level-2 classes") {
    CanonicalKey a = canonical_key(trans({Triple(1, 4, 5), Triple(1, 2, 3)}));
    CanonicalKey b = canonical_key(trans({Triple(4, 5, 6), Triple(1, 2, 3)}));
    CHECK(a != b);
}

TEST_CASE("monomial fast path agrees with the identity coset") {
    std::mt19937_64 rng(7);
    CanonicalKey id_key = canonical_key(Mat11::identity());
    for (int probe = 0; probe < 20; ++probe)
        CHECK(canonical_key(permutation_matrix(random_perm(rng))) == id_key);
}

TEST_CASE("class key is shared by a matrix and its inverse") {
    std::mt19937_64 rng(11);
    std::vector<TripleTuple> tuples = {
        {Triple(1, 4, 5), Triple(1, 2, 3)},
        {Triple(2, 6, 7), Triple(1, 4, 5), Triple(1, 2, 3)},
    };
    for (const auto& t : tuples) {
        Mat11 m = trans(t) * permutation_matrix(random_perm(rng));
        CHECK(canonical_class_key(m) == canonical_class_key(m.form_inverse()));
    }
}

TEST_CASE("key entries reproduce the matrix up to the found permutations") {
    // The key is itself a matrix reachable by a row/column permutation, so it
    // must have the same multiset of entries as the input.
    Mat11 m = trans({Triple(4, 5, 6), Triple(1, 2, 3)});
    CanonicalKey k = canonical_key(m);
    std::multiset<long> from_key(k.begin(), k.end());
    std::multiset<long> from_m;
    for (int i = 0; i < kDim * kDim; ++i) from_m.insert(m[i].get_si());
    CHECK(from_key == from_m);
}
