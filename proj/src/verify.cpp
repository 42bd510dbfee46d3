#include "coxspec/verify.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "coxspec/canonical.hpp"
#include "coxspec/hilbert.hpp"
#include "coxspec/lorentz.hpp"
#include "coxspec/poly.hpp"
#include "coxspec/salem.hpp"
#include "coxspec/store.hpp"

namespace coxspec {

namespace {

struct Reporter {
    std::vector<CheckResult>& out;
    std::string suite;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({suite, name, ok, ok ? "" : detail});
    }
};

Vec11 diff_root(int i, int j) {
    Vec11 v{};
    v[i] = 1;
    v[j] = -1;
    return v;
}

Perm10 random_perm(std::mt19937_64& rng) {
    Perm10 p;
    for (int i = 0; i < 10; ++i) p[i] = i + 1;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

const LevelStore& depth3_store() {
    static LevelStore store = [] {
        LevelStore s;
        s.build_to(3);
        return s;
    }();
    return store;
}

const TripleTuple& random_stored_tuple(std::mt19937_64& rng) {
    const auto& store = depth3_store();
    int lv = 1 + static_cast<int>(rng() % 3);
    const auto& recs = store.level(lv);
    return recs[rng() % recs.size()].tuple;
}

// Spectral radius of an arbitrary W(E10) element: the Salem-part root, or 1
// when the stripped part is constant.
double spectral_radius(const Mat11& m) {
    auto [salem, cyc] = strip_cyclotomic(charpoly(m));
    if (salem.degree() <= 0) return 1.0;
    return largest_real_root(salem).to_double();
}

void suite_kappa(std::vector<CheckResult>& out) {
    Reporter rep{out, "kappa"};
    const auto& store = depth3_store();
    const auto triples = all_triples();
    const Mat11 id = Mat11::identity();

    bool c3 = true, c2 = true, c1 = true, c0 = true;
    std::string d3, d2, d1, d0;
    for (const auto& I : triples) {
        Mat11 kI = kappa_matrix(I);
        for (const auto& J : triples) {
            Mat11 kJ = kappa_matrix(J);
            Mat11 prod = kI * kJ;
            int s = intersection_size(I, J);
            if (s == 3) {
                if (!(prod == id)) { c3 = false; d3 = I.str() + "," + J.str(); }
            } else if (s == 2) {
                int i = 0, j = 0;
                for (int x : I.m)
                    if (!J.contains(x)) i = x;
                for (int x : J.m)
                    if (!I.contains(x)) j = x;
                Mat11 rho = reflection_matrix(diff_root(i, j));
                if (!(prod == rho * kI) || !(prod == kJ * rho)) {
                    c2 = false;
                    d2 = I.str() + "," + J.str();
                }
            } else if (s == 1) {
                if (!(prod == kJ * kI) ||
                    store.demazure_project(prod).level != 2) {
                    c1 = false;
                    d1 = I.str() + "," + J.str();
                }
            } else {
                if (!(kI * kJ * kI == kJ * kI * kJ) ||
                    store.demazure_project(prod).level != 2) {
                    c0 = false;
                    d0 = I.str() + "," + J.str();
                }
            }
        }
    }
    rep.check("intersection-3 gives identity", c3, d3);
    rep.check("intersection-2 absorbs a transposition", c2, d2);
    rep.check("intersection-1 commutes at level 2", c1, d1);
    rep.check("intersection-0 braids at level 2", c0, d0);
}

void suite_trans(std::vector<CheckResult>& out) {
    Reporter rep{out, "trans"};
    const auto& store = depth3_store();

    // common-point case: explicit images of e0 and e1, and level 3
    Mat11 m = trans({Triple(1, 6, 7), Triple(1, 4, 5), Triple(1, 2, 3)});
    Vec11 e0 = m.apply(basis_vector(0));
    Vec11 e1 = m.apply(basis_vector(1));
    Vec11 want0{}, want1{};
    want0[0] = 4;
    want0[1] = -3;
    want1[0] = 3;
    want1[1] = -2;
    for (int i = 2; i <= 7; ++i) want0[i] = want1[i] = -1;
    rep.check("common-point images of e0, e1", e0 == want0 && e1 == want1);
    rep.check("common-point product has level 3",
              store.demazure_project(m).level == 3);

    // disjoint-common-point case collapses to level 2 through transpositions
    Mat11 lhs = trans({Triple(2, 4, 6), Triple(1, 4, 5), Triple(1, 2, 3)});
    Mat11 rhs = reflection_matrix(diff_root(1, 6)) *
                reflection_matrix(diff_root(2, 5)) *
                trans({Triple(4, 5, 6), Triple(1, 2, 3)}) *
                reflection_matrix(diff_root(3, 4));
    rep.check("empty-common-point factorization", lhs == rhs);
    rep.check("empty-common-point product has level 2",
              store.demazure_project(lhs).level == 2);
}

void suite_canonical(std::vector<CheckResult>& out) {
    Reporter rep{out, "canonical"};
    std::mt19937_64 rng(20260823);

    bool stable = true;
    std::string detail;
    std::map<TripleTuple, CanonicalKey> base_keys;
    for (int probe = 0; probe < 10000 && stable; ++probe) {
        const TripleTuple& t = random_stored_tuple(rng);
        Mat11 m = trans(t);
        auto it = base_keys.find(t);
        if (it == base_keys.end()) it = base_keys.emplace(t, canonical_key(m)).first;
        Mat11 moved = permutation_matrix(random_perm(rng)) * m *
                      permutation_matrix(random_perm(rng));
        if (canonical_key(moved) != it->second) {
            stable = false;
            std::ostringstream os;
            os << "probe " << probe;
            detail = os.str();
        }
    }
    rep.check("key invariant under double permutation action", stable, detail);

    std::set<CanonicalKey> keys;
    std::size_t reps = 0;
    const auto& store = depth3_store();
    for (int lv = 0; lv <= 3; ++lv)
        for (const auto& r : store.level(lv)) {
            keys.insert(r.key);
            ++reps;
        }
    rep.check("stored coset keys pairwise distinct", keys.size() == reps);
}

void suite_demazure(std::vector<CheckResult>& out) {
    Reporter rep{out, "demazure"};
    const auto& store = depth3_store();
    std::mt19937_64 rng(7);

    bool roundtrip = true;
    for (int lv = 0; lv <= 3 && roundtrip; ++lv)
        for (const auto& r : store.level(lv))
            if (store.demazure_project(trans(r.tuple)).key != r.key) roundtrip = false;
    rep.check("projection fixes every stored representative", roundtrip);

    bool unit = true;
    for (int i = 0; i < 50; ++i) {
        const TripleTuple& t = random_stored_tuple(rng);
        if (store.demazure_product(t, {}).key != canonical_key(trans(t))) unit = false;
        if (store.demazure_product({}, t).key != canonical_key(trans(t))) unit = false;
    }
    rep.check("identity is a unit for the Demazure product", unit);

    bool subadd = true;
    for (int i = 0; i < 200; ++i) {
        const TripleTuple& a = random_stored_tuple(rng);
        const TripleTuple& b = random_stored_tuple(rng);
        if (static_cast<int>(a.size() + b.size()) > 3) continue;
        int lv = store.demazure_product(a, b).level;
        if (lv > static_cast<int>(a.size() + b.size())) subadd = false;
    }
    rep.check("level of a product is at most the sum of levels", subadd);
}

void suite_salem(std::vector<CheckResult>& out) {
    Reporter rep{out, "salem"};
    std::mt19937_64 rng(101);

    bool reassembly = true, reciprocal = true;
    for (int i = 0; i < 200; ++i) {
        Mat11 m = trans(random_stored_tuple(rng)) * permutation_matrix(random_perm(rng));
        IntPoly cp = charpoly(m);
        auto [salem, cyc] = strip_cyclotomic(cp);
        if (!(salem * cyc == cp)) reassembly = false;
        if (salem.degree() > 0 && !salem.palindromic()) reciprocal = false;
    }
    rep.check("cyclotomic stripping reassembles exactly", reassembly);
    rep.check("nonconstant stripped parts are reciprocal", reciprocal);

    IntPoly lehmer = IntPoly::from_descending({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    rep.check("Lehmer polynomial recognized as Salem", is_salem(lehmer));
    RootEnclosure r = largest_real_root(lehmer);
    rep.check("Lehmer enclosure isolates exactly one root",
              sturm_count(lehmer, r.lower, r.upper) == 1 && r.decimal() == "1.17628");

    SalemPolynomial q = SalemPolynomial::make(lehmer);
    bool powers = true;
    for (int k = 2; k <= 4; ++k) {
        SalemPolynomial pk = minpoly_power(q, k);
        double want = std::pow(q.radius.to_double(), k);
        if (std::abs(pk.radius.to_double() - want) > 1e-9) powers = false;
    }
    SalemPolynomial six = minpoly_power(q, 6);
    SalemPolynomial towered = minpoly_power(minpoly_power(q, 2), 3);
    rep.check("power radii multiply", powers);
    rep.check("power towers compose", six.poly == towered.poly);
}

ConePoint random_interior_point(std::mt19937_64& rng) {
    while (true) {
        std::array<mpq_class, kDim> c;
        mpz_class norm = 0;
        for (int i = 1; i < kDim; ++i) {
            long v = static_cast<long>(rng() % 7);
            c[i] = v;
            norm += mpz_class(v) * v;
        }
        mpz_class root = sqrt(norm);
        long t = root.get_si() + 1 + static_cast<long>(rng() % 5);
        c[0] = t;
        ConePoint p{c};
        if (p.interior()) return p;
    }
}

void suite_hilbert(std::vector<CheckResult>& out) {
    Reporter rep{out, "hilbert"};
    std::mt19937_64 rng(404);

    bool triangle = true, symmetric = true;
    for (int i = 0; i < 1000; ++i) {
        ConePoint x = random_interior_point(rng);
        ConePoint y = random_interior_point(rng);
        ConePoint z = random_interior_point(rng);
        double dxy = hilbert_distance(x, y), dyx = hilbert_distance(y, x);
        double dyz = hilbert_distance(y, z), dxz = hilbert_distance(x, z);
        if (std::abs(dxy - dyx) > 1e-9) symmetric = false;
        if (dxz > dxy + dyz + 1e-9) triangle = false;
    }
    rep.check("triangle inequality on random triples", triangle);
    rep.check("symmetry on random pairs", symmetric);

    bool projective = true;
    for (int i = 0; i < 100; ++i) {
        ConePoint x = random_interior_point(rng);
        ConePoint y = random_interior_point(rng);
        std::array<mpq_class, kDim> sc;
        for (int j = 0; j < kDim; ++j) sc[j] = x.x[j] * 2;
        if (std::abs(hilbert_distance(ConePoint{sc}, y) - hilbert_distance(x, y)) >
            1e-9)
            projective = false;
    }
    rep.check("projective invariance under scaling", projective);

    ConePoint base = default_basepoint();
    rep.check("identity displacement is zero",
              displacement(Mat11::identity(), base) == 0);

    bool lower_bound = true, isometry = true;
    std::mt19937_64 rng2(405);
    for (int i = 0; i < 100; ++i) {
        Mat11 m = trans(random_stored_tuple(rng2)) *
                  permutation_matrix(random_perm(rng2));
        double rho = spectral_radius(m);
        ConePoint x = random_interior_point(rng2);
        if (std::log(rho) > displacement(m, x) + 1e-9) lower_bound = false;
        Perm10 p = random_perm(rng2);
        Mat11 pm = permutation_matrix(p);
        std::array<mpq_class, kDim> px = apply_q(pm, x.x);
        double a = displacement(pm * m * pm.form_inverse(), ConePoint{px});
        if (std::abs(a - displacement(m, x)) > 1e-9) isometry = false;
    }
    rep.check("log spectral radius bounds displacement", lower_bound);
    rep.check("displacement invariant under cone isometries", isometry);
}

// Random hyperbolic element (Salem radius > 1); elliptic and parabolic draws
// are rejected, matching the witnessed elements the catalog records.
Mat11 random_witnessed(std::mt19937_64& rng, double* radius) {
    while (true) {
        Mat11 m = trans(random_stored_tuple(rng)) * permutation_matrix(random_perm(rng));
        double r = spectral_radius(m);
        if (r > 1) {
            *radius = r;
            return m;
        }
    }
}

// Note: plain submultiplicativity rho(ab) <= rho(a) rho(b) is false for this
// group (random hyperbolic pairs violate it with ratios up to ~4).  What the
// triangle inequality actually yields is the fixed-basepoint displacement
// bound log rho(ab) <= delta_x(a) + delta_x(b), which is what we test.
void suite_submult(std::vector<CheckResult>& out) {
    Reporter rep{out, "submult"};
    std::mt19937_64 rng(1717);
    ConePoint base = default_basepoint();
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 500 && ok; ++i) {
        double ra, rb;
        Mat11 a = random_witnessed(rng, &ra);
        Mat11 b = random_witnessed(rng, &rb);
        double rab = spectral_radius(a * b);
        double bound = displacement(a, base) + displacement(b, base);
        if (std::log(rab) > bound + 1e-9) {
            ok = false;
            std::ostringstream os;
            os << "pair " << i << ": log " << rab << " > " << bound;
            detail = os.str();
        }
    }
    rep.check("product radius bounded by summed displacements", ok, detail);
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& suite_filter) {
    struct Suite {
        const char* name;
        void (*fn)(std::vector<CheckResult>&);
    };
    static const Suite suites[] = {
        {"kappa", suite_kappa},     {"trans", suite_trans},
        {"canonical", suite_canonical}, {"demazure", suite_demazure},
        {"salem", suite_salem},     {"hilbert", suite_hilbert},
        {"submult", suite_submult},
    };
    std::vector<CheckResult> out;
    bool matched = false;
    for (const auto& s : suites) {
        if (!suite_filter.empty() && suite_filter != s.name) continue;
        matched = true;
        s.fn(out);
    }
    if (!matched) throw std::invalid_argument("unknown verify suite: " + suite_filter);
    return out;
}

}  // namespace coxspec
