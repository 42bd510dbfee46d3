#include "coxspec/lorentz.hpp"

#include <algorithm>

namespace coxspec {

Triple::Triple(int a, int b, int c) : m{a, b, c} {
    std::sort(m.begin(), m.end());
    if (m[0] < 1 || m[2] > 10 || m[0] == m[1] || m[1] == m[2])
        throw std::invalid_argument("Triple: need three distinct members of 1..10");
}

std::string Triple::str() const {
    return "{" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
           std::to_string(m[2]) + "}";
}

int intersection_size(const Triple& a, const Triple& b) {
    int n = 0;
    for (int x : a.m) n += b.contains(x) ? 1 : 0;
    return n;
}

Mat11 Mat11::identity() {
    Mat11 m;
    for (int i = 0; i < kDim; ++i) m.at(i, i) = 1;
    return m;
}

Mat11 Mat11::operator*(const Mat11& o) const {
    Mat11 r;
    mpz_class acc, t;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            acc = 0;
            for (int k = 0; k < kDim; ++k) {
                t = at(i, k) * o.at(k, j);
                acc += t;
            }
            r.at(i, j) = acc;
        }
    }
    return r;
}

Vec11 Mat11::apply(const Vec11& v) const {
    Vec11 r;
    for (int i = 0; i < kDim; ++i) {
        mpz_class acc = 0;
        for (int k = 0; k < kDim; ++k) acc += at(i, k) * v[k];
        r[i] = acc;
    }
    return r;
}

Mat11 Mat11::transposed() const {
    Mat11 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) r.at(i, j) = at(j, i);
    return r;
}

namespace {
int sgn0(int i) { return i == 0 ? 1 : -1; }
}  // namespace

Mat11 Mat11::form_inverse() const {
    Mat11 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            r.at(i, j) = at(j, i) * (sgn0(i) * sgn0(j));
    return r;
}

bool Mat11::preserves_form() const {
    // M^T J M = J, entrywise.
    for (int i = 0; i < kDim; ++i) {
        for (int j = i; j < kDim; ++j) {
            mpz_class acc = 0;
            for (int k = 0; k < kDim; ++k) acc += at(k, i) * at(k, j) * sgn0(k);
            if (i == j ? acc != sgn0(i) : acc != 0) return false;
        }
    }
    return true;
}

bool Mat11::is_identity() const {
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Mat11::is_monomial(std::vector<mpz_class>* vals) const {
    for (int j = 0; j < kDim; ++j)
        if (at(0, j) != (j == 0 ? 1 : 0)) return false;
    for (int i = 1; i < kDim; ++i)
        if (at(i, 0) != 0) return false;
    std::vector<mpz_class> v;
    std::array<int, kDim> col_used{};
    for (int i = 1; i < kDim; ++i) {
        int nz = 0, jz = -1;
        for (int j = 1; j < kDim; ++j)
            if (at(i, j) != 0) { ++nz; jz = j; }
        if (nz != 1 || col_used[jz]) return false;
        col_used[jz] = 1;
        v.push_back(at(i, jz));
    }
    if (vals) *vals = std::move(v);
    return true;
}

mpz_class Mat11::max_abs() const {
    mpz_class m = 0;
    for (const auto& x : e_) {
        mpz_class a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

bool Mat11::fits_i64() const {
    for (const auto& x : e_)
        if (!x.fits_slong_p()) return false;
    return true;
}

std::array<std::int64_t, kDim * kDim> Mat11::to_i64() const {
    std::array<std::int64_t, kDim * kDim> r;
    for (int k = 0; k < kDim * kDim; ++k) r[k] = e_[k].get_si();
    return r;
}

mpz_class bilinear(const Vec11& x, const Vec11& y) {
    mpz_class acc = x[0] * y[0];
    for (int i = 1; i < kDim; ++i) acc -= x[i] * y[i];
    return acc;
}

Vec11 basis_vector(int i) {
    Vec11 v{};
    v[i] = 1;
    return v;
}

Vec11 kappa_root(const Triple& I) {
    Vec11 v{};
    v[0] = 1;
    for (int t : I.m) v[t] = -1;
    return v;
}

Mat11 reflection_matrix(const Vec11& v) {
    mpz_class den = bilinear(v, v);
    if (den == 0) throw isotropic_vector_error("reflection through isotropic vector");
    Mat11 m = Mat11::identity();
    // column j: e_j - 2 B(e_j, v)/B(v,v) v
    for (int j = 0; j < kDim; ++j) {
        mpz_class bj = (j == 0 ? v[0] : mpz_class(-v[j]));  // B(e_j, v)
        for (int i = 0; i < kDim; ++i) {
            mpz_class num = -2 * bj * v[i];
            mpz_class q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (r != 0)
                throw non_integral_reflection_error("reflection is not integral for this vector");
            m.at(i, j) += q;
        }
    }
    return m;
}

Mat11 kappa_matrix(const Triple& I) { return reflection_matrix(kappa_root(I)); }

Mat11 trans(const TripleTuple& tuple) {
    Mat11 m = Mat11::identity();
    for (auto it = tuple.rbegin(); it != tuple.rend(); ++it)
        m = kappa_matrix(*it) * m;
    return m;
}

Mat11 permutation_matrix(const std::array<int, 10>& p) {
    std::array<int, kDim> seen{};
    Mat11 m;
    m.at(0, 0) = 1;
    for (int j = 1; j <= 10; ++j) {
        int img = p[j - 1];
        if (img < 1 || img > 10 || seen[img])
            throw std::invalid_argument("permutation_matrix: not a bijection of 1..10");
        seen[img] = 1;
        m.at(img, j) = 1;  // e_j -> e_{p(j)}
    }
    return m;
}

std::vector<Triple> all_triples() {
    std::vector<Triple> out;
    out.reserve(120);
    for (int a = 1; a <= 8; ++a)
        for (int b = a + 1; b <= 9; ++b)
            for (int c = b + 1; c <= 10; ++c) out.emplace_back(a, b, c);
    return out;
}

}  // namespace coxspec
