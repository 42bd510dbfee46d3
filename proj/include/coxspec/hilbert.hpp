// Hilbert cross-ratio distance on the interior of the Lorentz light cone,
// orbit displacements of group elements, and the level-wise nested-ball
// radius report comparing minimal displacements with log spectral envelopes.
//
// The reference cone is the light cone itself; since it is contained in the
// Tits cone, every computed distance is an upper bound for the Tits-cone
// metric, and log(radius) <= displacement remains a valid inequality.

#ifndef COXSPEC_HILBERT_HPP
#define COXSPEC_HILBERT_HPP

#include <array>
#include <string>
#include <vector>

#include "coxspec/catalog.hpp"
#include "coxspec/lorentz.hpp"

namespace coxspec {

struct boundary_point_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact rational point strictly inside the future light cone.
struct ConePoint {
    std::array<mpq_class, kDim> x;

    bool interior() const;  // bilinear(x,x) > 0 and x0 > 0
    static ConePoint from_coords(const std::array<mpq_class, kDim>& c);
    // Parses "c0,c1,...,c10" with integer or n/d entries.
    static ConePoint parse(const std::string& spec);
};

// (4,1,1,1,1,1,1,1,1,1,0), strictly interior and inside the closed
// fundamental chamber of the permutation action.
ConePoint default_basepoint();

mpq_class bilinear_q(const std::array<mpq_class, kDim>& a,
                     const std::array<mpq_class, kDim>& b);

std::array<mpq_class, kDim> apply_q(const Mat11& m,
                                    const std::array<mpq_class, kDim>& v);

// log of the cross ratio |ax||yb| / (|ay||xb|) with a, x, y, b the ordered
// intersections of the line through x, y with the cone boundary; 0 when the
// points are positive multiples of each other.
double hilbert_distance(const ConePoint& x, const ConePoint& y);

double displacement(const Mat11& omega, const ConePoint& x);

struct BallRow {
    int level = 0;
    double t_hat = 0;        // min displacement over witnessed level-n elements
    double log_m_tilde = 0;  // log of the level's new-minimum radius
    double ratio = 0;        // t_hat / log_m_tilde
};

// One row per level 1..max_level; throws missing_witness_error on a level
// with no catalog records.
std::vector<BallRow> ball_report(const Catalog& catalog, const ConePoint& x,
                                 int max_level);

void write_ball_csv(const std::string& path, const std::vector<BallRow>& rows);

}  // namespace coxspec

#endif
