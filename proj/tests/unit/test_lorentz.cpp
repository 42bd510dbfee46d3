#include <doctest.h>

#include "coxspec/lorentz.hpp"

using namespace coxspec;

TEST_CASE("triples sort their members and intersect correctly") {
    Triple t(3, 1, 2);
    CHECK(t.m == std::array<int, 3>{1, 2, 3});
    CHECK(t.contains(2));
    CHECK(!t.contains(4));
    CHECK(intersection_size(Triple(1, 2, 3), Triple(3, 4, 5)) == 1);
    CHECK(intersection_size(Triple(1, 2, 3), Triple(4, 5, 6)) == 0);
    CHECK(intersection_size(Triple(1, 2, 3), Triple(1, 2, 3)) == 3);
    CHECK(all_triples().size() == 120);
}

TEST_CASE("bilinear form has signature (1,10) on the standard basis") {
    CHECK(bilinear(basis_vector(0), basis_vector(0)) == 1);
    for (int i = 1; i < kDim; ++i) {
        CHECK(bilinear(basis_vector(i), basis_vector(i)) == -1);
        CHECK(bilinear(basis_vector(0), basis_vector(i)) == 0);
    }
}

TEST_CASE("kappa matrices are form-preserving involutions negating their root") {
    for (const Triple& t : {Triple(1, 2, 3), Triple(2, 5, 9), Triple(8, 9, 10)}) {
        Mat11 k = kappa_matrix(t);
        CHECK(k.preserves_form());
        CHECK((k * k).is_identity());
        Vec11 r = kappa_root(t);
        CHECK(bilinear(r, r) == -2);
        Vec11 img = k.apply(r);
        for (int i = 0; i < kDim; ++i) CHECK(img[i] == -r[i]);
    }
}

TEST_CASE("reflection through an isotropic or non-integral root throws") {
    Vec11 iso{};
    iso[0] = 1;
    iso[1] = 1;  // norm 0
    CHECK_THROWS_AS(reflection_matrix(iso), isotropic_vector_error);

    Vec11 bad{};
    bad[1] = 1;
    bad[2] = 2;  // norm -5 does not divide 2*B(e1, v) = -2
    CHECK_THROWS_AS(reflection_matrix(bad), non_integral_reflection_error);
}

TEST_CASE("trans multiplies kappas with the first triple leftmost") {
    TripleTuple tup{Triple(4, 5, 6), Triple(1, 2, 3)};
    CHECK(trans(tup) == kappa_matrix(Triple(4, 5, 6)) * kappa_matrix(Triple(1, 2, 3)));
    CHECK(trans({}).is_identity());
}

TEST_CASE("permutation matrices compose and act on basis vectors") {
    std::array<int, 10> p{2, 3, 4, 5, 6, 7, 8, 9, 10, 1};  // 10-cycle
    Mat11 m = permutation_matrix(p);
    CHECK(m.preserves_form());
    CHECK(m.apply(basis_vector(0)) == basis_vector(0));
    CHECK(m.apply(basis_vector(1)) == basis_vector(2));
    CHECK(m.apply(basis_vector(10)) == basis_vector(1));

    std::array<int, 10> q{2, 1, 3, 4, 5, 6, 7, 8, 9, 10};
    std::array<int, 10> pq;  // p after q: i -> q[i] -> p[q[i]]
    for (int i = 0; i < 10; ++i) pq[i] = p[q[i] - 1];
    CHECK(permutation_matrix(p) * permutation_matrix(q) == permutation_matrix(pq));
}

TEST_CASE("form_inverse inverts form-preserving products") {
    Mat11 m = trans({Triple(1, 4, 5), Triple(1, 2, 3)}) *
              permutation_matrix({3, 1, 2, 4, 5, 6, 7, 8, 9, 10});
    CHECK(m.preserves_form());
    CHECK((m * m.form_inverse()).is_identity());
    CHECK((m.form_inverse() * m).is_identity());
}

TEST_CASE("is_monomial recognizes W(A9)-like patterns only") {
    std::vector<mpz_class> vals;
    CHECK(permutation_matrix({5, 4, 3, 2, 1, 6, 7, 8, 9, 10}).is_monomial(&vals));
    CHECK(vals == std::vector<mpz_class>(10, 1));
    CHECK(!kappa_matrix(Triple(1, 2, 3)).is_monomial());
    CHECK(Mat11::identity().is_monomial());
}
