#include "coxspec/hilbert.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace coxspec {

mpq_class bilinear_q(const std::array<mpq_class, kDim>& a,
                     const std::array<mpq_class, kDim>& b) {
    mpq_class s = a[0] * b[0];
    for (int i = 1; i < kDim; ++i) s -= a[i] * b[i];
    return s;
}

std::array<mpq_class, kDim> apply_q(const Mat11& m,
                                    const std::array<mpq_class, kDim>& v) {
    std::array<mpq_class, kDim> r;
    for (int i = 0; i < kDim; ++i) {
        mpq_class s = 0;
        for (int j = 0; j < kDim; ++j) s += mpq_class(m.at(i, j)) * v[j];
        r[i] = s;
    }
    return r;
}

bool ConePoint::interior() const {
    return x[0] > 0 && bilinear_q(x, x) > 0;
}

ConePoint ConePoint::from_coords(const std::array<mpq_class, kDim>& c) {
    ConePoint p{c};
    if (!p.interior())
        throw boundary_point_error("point is not strictly inside the future cone");
    return p;
}

ConePoint ConePoint::parse(const std::string& spec) {
    std::array<mpq_class, kDim> c;
    std::istringstream in(spec);
    std::string tok;
    int i = 0;
    while (std::getline(in, tok, ',')) {
        if (i >= kDim) throw std::invalid_argument("basepoint: too many coordinates");
        c[i] = mpq_class(tok);
        c[i].canonicalize();
        ++i;
    }
    if (i != kDim) throw std::invalid_argument("basepoint: expected 11 coordinates");
    return from_coords(c);
}

ConePoint default_basepoint() {
    std::array<mpq_class, kDim> c;
    c[0] = 4;
    for (int i = 1; i <= 9; ++i) c[i] = 1;
    c[10] = 0;
    return ConePoint::from_coords(c);
}

double hilbert_distance(const ConePoint& x, const ConePoint& y) {
    if (!x.interior() || !y.interior())
        throw boundary_point_error("hilbert_distance needs interior points");

    // Work on the affine slice x0 = 1, where the projectivized cone is the
    // bounded Klein ball and every secant line meets the boundary on both
    // sides of the segment.  Distances are projective, so slicing is free.
    std::array<mpq_class, kDim> u, v, d;
    for (int i = 0; i < kDim; ++i) {
        u[i] = x.x[i] / x.x[0];
        v[i] = y.x[i] / y.x[0];
    }
    if (u == v) return 0;  // positive multiples of each other

    // Boundary along u + t(v-u): A t^2 + 2B t + C = 0; d0 = 0 forces A < 0.
    for (int i = 0; i < kDim; ++i) d[i] = v[i] - u[i];
    mpq_class A = bilinear_q(d, d);
    mpq_class B = bilinear_q(u, d);
    mpq_class C = bilinear_q(u, u);
    mpq_class D = B * B - A * C;  // exact discriminant
    if (A >= 0 || D <= 0)
        throw std::logic_error("hilbert_distance: line misses the boundary twice");

    // numerically stable root pair: q = -(B + sign(B) sqrt(D)), roots q/A, C/q
    double sq = std::sqrt(D.get_d());
    double a = A.get_d(), b = B.get_d();
    double q = -(b + (b >= 0 ? sq : -sq));
    double r1 = q / a, r2 = C.get_d() / q;
    double ta = std::min(r1, r2), tb = std::max(r1, r2);
    if (!(ta < 0 && tb > 1))
        throw std::logic_error("hilbert_distance: boundary points out of order");
    return std::log(((1 - ta) * tb) / ((-ta) * (tb - 1)));
}

double displacement(const Mat11& omega, const ConePoint& x) {
    ConePoint y{apply_q(omega, x.x)};
    if (!y.interior())
        throw boundary_point_error("image point left the future cone");
    return hilbert_distance(x, y);
}

std::vector<BallRow> ball_report(const Catalog& catalog, const ConePoint& x,
                                 int max_level) {
    std::vector<BallRow> rows;
    for (int n = 1; n <= max_level; ++n) {
        auto idx = catalog.level_indices(n);
        if (idx.empty())
            throw missing_witness_error("no catalog witnesses at level " +
                                        std::to_string(n));
        BallRow row;
        row.level = n;
        row.t_hat = std::numeric_limits<double>::infinity();
        for (std::size_t i : idx) {
            const SalemRecord& r = catalog.record(i);
            Mat11 m = trans(r.witness.tuple) * permutation_matrix(r.witness.perm);
            row.t_hat = std::min(row.t_hat, displacement(m, x));
        }
        row.log_m_tilde = std::log(catalog.record(idx.front()).radius());
        row.ratio = row.t_hat / row.log_m_tilde;
        rows.push_back(row);
    }
    return rows;
}

void write_ball_csv(const std::string& path, const std::vector<BallRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "level,t_hat,log_m_tilde,ratio\n";
    out.precision(10);
    for (const auto& r : rows)
        out << r.level << ',' << r.t_hat << ',' << r.log_m_tilde << ',' << r.ratio
            << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace coxspec
