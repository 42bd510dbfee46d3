// Salem-polynomial recognition, rigorous largest-real-root isolation, and
// minimal polynomials of Salem powers.

#ifndef COXSPEC_SALEM_HPP
#define COXSPEC_SALEM_HPP

#include <string>
#include <vector>

#include "coxspec/poly.hpp"

namespace coxspec {

struct no_root_above_one_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct non_reciprocal_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact rational enclosure [lower, upper] of an isolated real root,
// upper - lower <= 2^-40, verified to contain exactly one root.
struct RootEnclosure {
    mpq_class lower, upper;

    mpq_class midpoint() const { return (lower + upper) / 2; }
    double to_double() const { return midpoint().get_d(); }
    // Decimal rendering rounded to `places` digits, e.g. "1.17628".
    std::string decimal(int places = 5) const;
};

// Number of distinct real roots of p in the half-open interval (a, b],
// by Sturm's theorem on the squarefree part.
int sturm_count(const IntPoly& p, const mpq_class& a, const mpq_class& b);

// Squarefree part p / gcd(p, p'), primitive with positive leading coeff.
IntPoly squarefree_part(const IntPoly& p);

// For palindromic p of even degree 2m, the trace transform q with
// p(x) = x^m q(x + 1/x), deg q = m.
IntPoly trace_transform(const IntPoly& p);

// Salem test: palindromic of even degree >= 4 whose trace transform has
// exactly one real root in (2, inf) and m-1 real roots inside (-2, 2).
bool is_salem(const IntPoly& p);

// Enclosure of the largest real root (> 1 required) to width <= 2^-40.
RootEnclosure largest_real_root(const IntPoly& p);

struct SalemPolynomial {
    IntPoly poly;
    RootEnclosure radius;

    int degree() const { return poly.degree(); }
    static SalemPolynomial make(IntPoly p);  // verifies is_salem, isolates root
};

// Minimal polynomial of tau^k (tau = Salem root of q): characteristic
// polynomial of the k-th power of the companion matrix of q.
SalemPolynomial minpoly_power(const SalemPolynomial& q, int k);

// Descending-order coefficient prefix (a_0..a_d) of a palindromic degree-2d
// polynomial; the table encoding.  Throws non_reciprocal_error otherwise.
std::vector<mpz_class> half_coefficients(const IntPoly& p);
IntPoly from_half_coefficients(const std::vector<mpz_class>& half);

}  // namespace coxspec

#endif
