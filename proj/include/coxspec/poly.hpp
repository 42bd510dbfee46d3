// Exact integer polynomials: characteristic polynomials of element matrices
// and cyclotomic stripping.

#ifndef COXSPEC_POLY_HPP
#define COXSPEC_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "coxspec/lorentz.hpp"

namespace coxspec {

// Coefficients ascending: p = c[0] + c[1] x + ... + c[deg] x^deg.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly one() { return IntPoly({mpz_class(1)}); }
    static IntPoly from_descending(const std::vector<long>& desc);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const mpz_class& leading() const { return c_.back(); }
    bool monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](int i) const { return c_[i]; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly derivative() const;

    // Division by a monic divisor; nullopt when the remainder is nonzero.
    std::optional<IntPoly> divide_exact(const IntPoly& monic_divisor) const;

    mpz_class eval(const mpz_class& x) const;
    // Sign of p(a/b), exact.
    int sign_at(const mpq_class& x) const;

    // Palindromic: c[i] == c[deg-i] for all i.
    bool palindromic() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<mpz_class> c_;
};

// Monic characteristic polynomial det(xI - M), exact (trace/Newton route).
IntPoly charpoly(const Mat11& m);

// Generic square matrix (row-major, n*n entries), used for companion powers.
IntPoly charpoly_dense(const std::vector<mpz_class>& m, int n);

// All N with phi(N) <= max_phi together with Phi_N, ascending in N.
const std::vector<std::pair<int, IntPoly>>& cyclotomic_table(int max_phi = 10);

// Repeatedly removes every cyclotomic factor Phi_N with phi(N) <= 10.
// Returns {salem_part, cyclotomic_part}; the parts multiply back to p.
std::pair<IntPoly, IntPoly> strip_cyclotomic(const IntPoly& p);

}  // namespace coxspec

#endif
