// Python bindings for the main operations: store building, transformation
// data, Salem recognition and root isolation, catalog enumeration, and the
// Hilbert metric.  Integer payloads cross the boundary as int64; everything
// at desk scale fits comfortably.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxspec/catalog.hpp"
#include "coxspec/hilbert.hpp"
#include "coxspec/store.hpp"
#include "coxspec/verify.hpp"

namespace py = pybind11;
using namespace coxspec;

namespace {

using PyTuple = std::vector<std::array<int, 3>>;

TripleTuple to_tuple(const PyTuple& t) {
    TripleTuple out;
    for (const auto& a : t) out.emplace_back(a[0], a[1], a[2]);
    return out;
}

PyTuple from_tuple(const TripleTuple& t) {
    PyTuple out;
    for (const auto& a : t) out.push_back({a.m[0], a.m[1], a.m[2]});
    return out;
}

std::int64_t to_i64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("entry exceeds int64");
    return v.get_si();
}

IntPoly poly_from_descending(const std::vector<std::int64_t>& desc) {
    std::vector<mpz_class> asc(desc.rbegin(), desc.rend());
    return IntPoly(std::move(asc));
}

std::vector<std::int64_t> poly_to_descending(const IntPoly& p) {
    std::vector<std::int64_t> out;
    for (int i = p.degree(); i >= 0; --i) out.push_back(to_i64(p[i]));
    return out;
}

Perm10 to_perm(const std::vector<int>& p) {
    if (p.size() != 10) throw std::invalid_argument("permutation needs 10 entries");
    Perm10 q;
    std::copy(p.begin(), p.end(), q.begin());
    return q;
}

ConePoint point_from(const std::vector<double>& c) {
    if (c.size() != kDim) throw std::invalid_argument("point needs 11 coordinates");
    std::array<mpq_class, kDim> q;
    for (int i = 0; i < kDim; ++i) {
        q[i] = mpq_class(c[i]);
        q[i].canonicalize();
    }
    return ConePoint::from_coords(q);
}

py::dict record_to_dict(const Catalog& cat, std::size_t i) {
    const SalemRecord& r = cat.record(i);
    py::dict d;
    d["coeffs"] = poly_to_descending(r.salem.poly);
    d["degree"] = r.salem.degree();
    d["radius"] = r.salem.radius.to_double();
    d["radius_str"] = r.salem.radius.decimal();
    d["first_level"] = r.first_level;
    d["primitive"] = r.primitive;
    d["exponent"] = r.exponent;
    d["witness_tuple"] = from_tuple(r.witness.tuple);
    d["witness_perm"] = std::vector<int>(r.witness.perm.begin(), r.witness.perm.end());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "s0-level filtration of W(E10): exact double-coset and Salem machinery";

    py::register_exception<incomplete_store_error>(m, "IncompleteStoreError");
    py::register_exception<out_of_depth_error>(m, "OutOfDepthError");
    py::register_exception<no_root_above_one_error>(m, "NoRootAboveOneError");
    py::register_exception<non_reciprocal_error>(m, "NonReciprocalError");
    py::register_exception<boundary_point_error>(m, "BoundaryPointError");

    py::class_<LevelStore>(m, "LevelStore")
        .def(py::init<>())
        .def("built_depth", &LevelStore::built_depth)
        .def("build_to", &LevelStore::build_to, py::arg("max_level"))
        .def("coset_count", &LevelStore::coset_count, py::arg("level"))
        .def("class_count", &LevelStore::class_count, py::arg("level"))
        .def("class_representatives",
             [](const LevelStore& s, int n) {
                 std::vector<PyTuple> out;
                 for (const auto* r : s.class_representatives(n))
                     out.push_back(from_tuple(r->tuple));
                 return out;
             },
             py::arg("level"))
        .def("s0_level",
             [](const LevelStore& s, const PyTuple& t) { return s.s0_level(to_tuple(t)); },
             py::arg("tuple"))
        .def("demazure_product",
             [](const LevelStore& s, const PyTuple& x, const PyTuple& y) {
                 return from_tuple(s.demazure_product(to_tuple(x), to_tuple(y)).tuple);
             },
             py::arg("x"), py::arg("y"))
        .def("save", &LevelStore::save, py::arg("dir"))
        .def_static("load", &LevelStore::load, py::arg("dir"))
        .def("fingerprint", &LevelStore::fingerprint);

    m.def("trans_matrix",
          [](const PyTuple& t) {
              Mat11 mat = trans(to_tuple(t));
              std::vector<std::vector<std::int64_t>> rows(kDim);
              for (int i = 0; i < kDim; ++i)
                  for (int j = 0; j < kDim; ++j) rows[i].push_back(to_i64(mat.at(i, j)));
              return rows;
          },
          py::arg("tuple"), "Matrix of kappa_{I1} ... kappa_{In}, row-major");

    m.def("charpoly",
          [](const PyTuple& t, const std::vector<int>& perm) {
              Mat11 mat = trans(to_tuple(t));
              if (!perm.empty()) mat = mat * permutation_matrix(to_perm(perm));
              return poly_to_descending(charpoly(mat));
          },
          py::arg("tuple"), py::arg("perm") = std::vector<int>{},
          "Descending charpoly coefficients of trans(tuple) * P_perm");

    m.def("strip_cyclotomic",
          [](const std::vector<std::int64_t>& desc) {
              auto [salem, cyc] = strip_cyclotomic(poly_from_descending(desc));
              return py::make_tuple(poly_to_descending(salem), poly_to_descending(cyc));
          },
          py::arg("coeffs"));

    m.def("is_salem",
          [](const std::vector<std::int64_t>& desc) {
              return is_salem(poly_from_descending(desc));
          },
          py::arg("coeffs"));

    m.def("largest_real_root",
          [](const std::vector<std::int64_t>& desc) {
              RootEnclosure r = largest_real_root(poly_from_descending(desc));
              return py::make_tuple(r.to_double(), r.decimal());
          },
          py::arg("coeffs"), "Returns (float midpoint, 5-decimal string)");

    m.def("minpoly_power",
          [](const std::vector<std::int64_t>& desc, int k) {
              auto q = SalemPolynomial::make(poly_from_descending(desc));
              return poly_to_descending(minpoly_power(q, k).poly);
          },
          py::arg("coeffs"), py::arg("k"));

    py::class_<Catalog>(m, "Catalog")
        .def(py::init<>())
        .def("__len__", &Catalog::size)
        .def("record", &record_to_dict, py::arg("index"))
        .def("records",
             [](const Catalog& c) {
                 std::vector<py::dict> out;
                 for (std::size_t i = 0; i < c.size(); ++i)
                     out.push_back(record_to_dict(c, i));
                 return out;
             })
        .def("max_enumerated_level", &Catalog::max_enumerated_level)
        .def("level_indices", &Catalog::level_indices, py::arg("level"))
        .def("enumerate_level",
             [](Catalog& c, const LevelStore& s, int n, int threads,
                bool symmetry_reduction, const std::string& checkpoint_dir) {
                 EnumerateOptions opts;
                 opts.threads = threads;
                 opts.symmetry_reduction = symmetry_reduction;
                 opts.checkpoint_dir = checkpoint_dir;
                 return c.enumerate_level(s, n, opts);
             },
             py::arg("store"), py::arg("level"), py::arg("threads") = 1,
             py::arg("symmetry_reduction") = true, py::arg("checkpoint_dir") = "",
             py::call_guard<py::gil_scoped_release>())
        .def("mark_primitive", &Catalog::mark_primitive)
        .def("gap_stats",
             [](const Catalog& c, int level) {
                 GapRow g = c.gap_stats(level);
                 return py::make_tuple(g.mean, g.stddev);
             },
             py::arg("level"))
        .def("envelopes",
             [](const Catalog& c) {
                 EnvelopeSummary e = c.envelopes();
                 py::dict d;
                 for (const auto& row : e.rows) {
                     py::dict r;
                     r["m_tilde"] = c.record(row.min_new_index).radius();
                     r["M"] = c.record(row.max_index).radius();
                     d[py::int_(row.level)] = r;
                 }
                 if (e.delta) d["delta"] = *e.delta;
                 return d;
             })
        .def("export_jsonl", &Catalog::export_jsonl, py::arg("path"))
        .def("export_csv", &Catalog::export_csv, py::arg("path"),
             py::arg("level") = -1, py::arg("primitive_only") = false)
        .def_static("load_jsonl", &Catalog::load_jsonl, py::arg("path"));

    m.def("hilbert_distance",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return hilbert_distance(point_from(x), point_from(y));
          },
          py::arg("x"), py::arg("y"));

    m.def("displacement",
          [](const PyTuple& t, const std::vector<int>& perm,
             const std::vector<double>& x) {
              Mat11 mat = trans(to_tuple(t));
              if (!perm.empty()) mat = mat * permutation_matrix(to_perm(perm));
              return displacement(mat, point_from(x));
          },
          py::arg("tuple"), py::arg("perm") = std::vector<int>{},
          py::arg("x") = std::vector<double>{4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0});

    m.def("default_basepoint", [] {
        std::vector<double> out;
        for (const auto& c : default_basepoint().x) out.push_back(c.get_d());
        return out;
    });

    m.def("run_verify",
          [](const std::string& suite) {
              std::vector<py::dict> out;
              for (const auto& r : run_verify(suite)) {
                  py::dict d;
                  d["suite"] = r.suite;
                  d["name"] = r.name;
                  d["pass"] = r.pass;
                  d["detail"] = r.detail;
                  out.push_back(d);
              }
              return out;
          },
          py::arg("suite") = "");
}
