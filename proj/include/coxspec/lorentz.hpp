// Exact Lorentzian linear algebra on Z^{1,10}: the signature-(1,10) bilinear
// form, reflections through roots, the kappa generators attached to 3-subsets
// of {1..10}, and products of these (transformation data).
//
// Conventions, fixed globally:
//   * index 0 is the timelike direction; J = diag(1,-1,...,-1)
//   * matrices act on column vectors from the left
//   * trans((I1,...,In)) = kappa_{I1} * kappa_{I2} * ... * kappa_{In},
//     i.e. the first triple of the tuple is the leftmost factor.

#ifndef COXSPEC_LORENTZ_HPP
#define COXSPEC_LORENTZ_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coxspec {

constexpr int kDim = 11;

using Vec11 = std::array<mpz_class, kDim>;

struct isotropic_vector_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct non_integral_reflection_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Sorted 3-subset of {1..10}.
struct Triple {
    std::array<int, 3> m;

    Triple() : m{0, 0, 0} {}
    Triple(int a, int b, int c);

    bool operator==(const Triple& o) const { return m == o.m; }
    bool operator<(const Triple& o) const { return m < o.m; }
    bool contains(int x) const { return m[0] == x || m[1] == x || m[2] == x; }
    std::string str() const;
};

int intersection_size(const Triple& a, const Triple& b);

using TripleTuple = std::vector<Triple>;  // first entry = leftmost kappa factor

// Dense 11x11 exact integer matrix, row-major.
class Mat11 {
  public:
    Mat11() = default;

    static Mat11 identity();

    mpz_class& at(int i, int j) { return e_[i * kDim + j]; }
    const mpz_class& at(int i, int j) const { return e_[i * kDim + j]; }

    Mat11 operator*(const Mat11& o) const;
    bool operator==(const Mat11& o) const { return e_ == o.e_; }

    Vec11 apply(const Vec11& v) const;

    Mat11 transposed() const;
    // Inverse of a form-preserving matrix: J * M^T * J.
    Mat11 form_inverse() const;
    bool preserves_form() const;

    bool is_identity() const;
    // True when row/col 0 equal e0 and rows 1..10 form a permutation pattern
    // with values vals (the W(A9) case is all-ones).
    bool is_monomial(std::vector<mpz_class>* vals = nullptr) const;

    // Max |entry|; used to pick the fast arithmetic path in enumeration.
    mpz_class max_abs() const;
    bool fits_i64() const;
    std::array<std::int64_t, kDim * kDim> to_i64() const;

    const std::array<mpz_class, kDim * kDim>& entries() const { return e_; }
    mpz_class& operator[](int k) { return e_[k]; }
    const mpz_class& operator[](int k) const { return e_[k]; }

  private:
    std::array<mpz_class, kDim * kDim> e_{};
};

mpz_class bilinear(const Vec11& x, const Vec11& y);

Vec11 basis_vector(int i);
// Root e0 - sum_{t in I} e_t of norm -2.
Vec11 kappa_root(const Triple& I);

// Reflection u -> u - 2 B(u,v)/B(v,v) v.  Requires B(v,v) != 0 and exact
// integer divisions for all basis images.
Mat11 reflection_matrix(const Vec11& v);

Mat11 kappa_matrix(const Triple& I);

// kappa_{I1} * ... * kappa_{In} (first tuple entry leftmost).
Mat11 trans(const TripleTuple& tuple);

// p is 1-based on {1..10}: p[i] = image of i.  Fixes e0.
Mat11 permutation_matrix(const std::array<int, 10>& p);

std::vector<Triple> all_triples();  // the 120 3-subsets of {1..10}

}  // namespace coxspec

#endif
