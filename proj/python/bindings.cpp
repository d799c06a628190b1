#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qdiam/errors.hpp"
#include "qdiam/families.hpp"
#include "qdiam/grassmann.hpp"
#include "qdiam/oracle.hpp"
#include "qdiam/qcount.hpp"
#include "qdiam/selftest.hpp"
#include "qdiam/subspace.hpp"

namespace py = pybind11;
using namespace qdiam;

namespace {

py::int_ to_int(const BigCount& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict bound_dict(const BoundValue& b) {
  py::dict d;
  d["value"] = to_int(b.value);
  d["in_hypothesis_range"] = b.in_hypothesis_range;
  d["hypothesis"] = b.hypothesis;
  return d;
}

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

EnumerationBudget budget(std::uint64_t max_items) {
  EnumerationBudget b;
  b.max_items = max_items;
  return b;
}

SearchOptions options(bool enumerate_all, int threads, int timeout, std::uint64_t max_lattice, bool layer_cap) {
  SearchOptions o;
  o.enumerate_all = enumerate_all;
  o.threads = threads;
  o.timeout = std::chrono::seconds(timeout);
  o.max_lattice = max_lattice;
  o.layer_cap = layer_cap;
  return o;
}

Subspace from_rows(int q, int n, const std::vector<std::vector<int>>& rows) {
  std::vector<Vector> gens;
  for (const auto& r : rows) {
    Vector v;
    for (int x : r) {
      if (x < 0 || x >= q) throw Error(Errc::DimensionMismatch, "entry " + std::to_string(x) + " outside 0..q-1");
      v.push_back(static_cast<Elem>(x));
    }
    gens.push_back(std::move(v));
  }
  return Subspace::from_generators(field_new(q), n, gens);
}

std::vector<std::vector<int>> rows_of(const Subspace& s) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < s.dim(); ++i) {
    auto r = s.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

constexpr std::uint64_t kItems = EnumerationBudget::kDefaultMaxItems;

}  // namespace

PYBIND11_MODULE(_qdiam, m) {
  m.doc() = "Exact isodiametric computations in the subspace lattice of F_q^n";

  static py::exception<Error> error(m, "QdiamError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error.ptr())(e.what());
      inst.attr("code") = errc_name(e.code());
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  // ------------------------------------------------------------ subspaces
  py::class_<Subspace>(m, "Subspace")
      .def_static("from_rows", &from_rows, py::arg("q"), py::arg("n"), py::arg("rows"),
                  "Span of the given row vectors (entries 0..q-1).")
      .def_static("parse", [](const std::string& text) { return parse_subspace(text); })
      .def_static("zero", [](int q, int n) { return Subspace::zero(field_new(q), n); })
      .def_static("full", [](int q, int n) { return Subspace::full(field_new(q), n); })
      .def_property_readonly("q", &Subspace::q)
      .def_property_readonly("n", &Subspace::ambient_dim)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("pivots", &Subspace::pivots)
      .def("rows", &rows_of, "RREF rows")
      .def("__str__", [](const Subspace& s) { return to_string(s); })
      .def("__repr__", [](const Subspace& s) { return "Subspace('" + to_string(s) + "')"; })
      .def("__hash__", &Subspace::hash)
      .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; })
      .def("__lt__", [](const Subspace& a, const Subspace& b) { return a < b; });

  m.def("delta", &delta);
  m.def("intersect", &intersect);
  m.def("sum", &sum);
  m.def("perp", &perp);
  m.def("contains", &contains, "S contains T");
  m.def("intersection_dim", &intersection_dim);
  m.def(
      "enumerate_layer", [](int q, int n, int k, std::uint64_t max_items) {
        return enumerate_layer(field_new(q), n, k, budget(max_items));
      },
      py::arg("q"), py::arg("n"), py::arg("k"), py::arg("max_items") = kItems);

  // ------------------------------------------------------------ families
  py::class_<SubspaceFamily>(m, "Family")
      .def(py::init([](int q, int n, std::vector<Subspace> members) {
             return SubspaceFamily(field_new(q), n, std::move(members));
           }),
           py::arg("q"), py::arg("n"), py::arg("members"))
      .def_property_readonly("q", &SubspaceFamily::q)
      .def_property_readonly("n", &SubspaceFamily::ambient_dim)
      .def_property_readonly("support", &SubspaceFamily::support)
      .def("__len__", &SubspaceFamily::size)
      .def("__contains__", &SubspaceFamily::contains)
      .def("__eq__", [](const SubspaceFamily& a, const SubspaceFamily& b) { return a == b; })
      .def("members", [](const SubspaceFamily& f) { return std::vector<Subspace>(f.begin(), f.end()); })
      .def("layer", [](const SubspaceFamily& f, int k) {
        auto l = f.layer(k);
        return std::vector<Subspace>(l.begin(), l.end());
      })
      .def("diameter", [](const SubspaceFamily& f) { return diameter(f).diameter; })
      .def("dim_spread", &dim_spread)
      .def("min_supp_norm", &min_supp_norm)
      .def("perp", &perp_family)
      .def(
          "is_admissible",
          [](const SubspaceFamily& f, const std::string& cls, int t) {
            const auto r = is_admissible(f, parse_forbidden_class(cls), t);
            py::dict d;
            d["admissible"] = r.admissible;
            d["diameter"] = r.diameter;
            d["diameter_ok"] = r.diameter_ok;
            d["reason"] = r.reason;
            d["witness_kind"] = r.witness_kind;
            std::vector<std::string> centers;
            for (const auto& c : r.witness_centers) centers.push_back(to_string(c));
            d["witness_centers"] = centers;
            return d;
          },
          py::arg("cls"), py::arg("t"))
      .def("to_text",
           [](const SubspaceFamily& f) {
             std::ostringstream out;
             write_family(out, f);
             return out.str();
           })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream in(text);
        return read_family(in);
      });

  m.def(
      "ball", [](const Subspace& c, int r, std::uint64_t mi) { return ball(c, r, budget(mi)); }, py::arg("center"),
      py::arg("r"), py::arg("max_items") = kItems);
  m.def(
      "double_ball",
      [](const Subspace& a, const Subspace& b, int r, std::uint64_t mi) { return double_ball(a, b, r, budget(mi)); },
      py::arg("c1"), py::arg("c2"), py::arg("r"), py::arg("max_items") = kItems);
  m.def(
      "lower_family",
      [](int q, int n, int t, std::uint64_t mi) { return lower_family(field_new(q), n, t, budget(mi)); },
      py::arg("q"), py::arg("n"), py::arg("t"), py::arg("max_items") = kItems);
  m.def(
      "upper_family",
      [](int q, int n, int t, std::uint64_t mi) { return upper_family(field_new(q), n, t, budget(mi)); },
      py::arg("q"), py::arg("n"), py::arg("t"), py::arg("max_items") = kItems);
  m.def(
      "canonical_double_ball",
      [](const Subspace& x, int t, std::uint64_t mi) { return canonical_double_ball(x, t, budget(mi)); },
      py::arg("x"), py::arg("t"), py::arg("max_items") = kItems);
  m.def(
      "star", [](int k, const Subspace& x, std::uint64_t mi) { return star(k, x, budget(mi)); }, py::arg("k"),
      py::arg("x"), py::arg("max_items") = kItems);
  m.def(
      "hm_family",
      [](int k, const Subspace& x, const Subspace& y, std::uint64_t mi) { return hm_family(k, x, y, budget(mi)); },
      py::arg("k"), py::arg("x"), py::arg("y"), py::arg("max_items") = kItems);
  m.def(
      "k_family",
      [](int k, const Subspace& x, const Subspace& y, std::uint64_t mi) { return k_family(k, x, y, budget(mi)); },
      py::arg("k"), py::arg("x"), py::arg("y"), py::arg("max_items") = kItems);
  m.def(
      "hm_star3", [](const Subspace& y, std::uint64_t mi) { return hm_star3(y, budget(mi)); }, py::arg("y"),
      py::arg("max_items") = kItems);
  m.def(
      "k_star3", [](const Subspace& y, std::uint64_t mi) { return k_star3(y, budget(mi)); }, py::arg("y"),
      py::arg("max_items") = kItems);

  // ------------------------------------------------------------ counting
  m.def("gauss_binom", [](int n, int k, int q) { return to_int(gauss_binom(n, k, q)); });
  m.def("count_profile", [](int n, int k, int l, int j, int q) { return to_int(count_profile(n, k, l, j, q)); });
  m.def("hm_excess", [](int n, int t, int q) { return to_int(hm_excess(n, t, q)); });
  m.def("kleitman_bound", [](int n, int d, int q) { return bound_dict(kleitman_bound(n, d, q)); });
  m.def("typeA_even_bound", [](int n, int t, int q) { return bound_dict(typeA_even_bound(n, t, q)); });
  m.def("typeB_even_bound", [](int n, int t, int q) { return bound_dict(typeB_even_bound(n, t, q)); });
  m.def("odd_stability_bound", [](int n, int t, int q) { return bound_dict(odd_stability_bound(n, t, q)); });
  m.def("ekr_bound", [](int n, int k, int s, int q) { return bound_dict(ekr_bound(n, k, s, q)); });
  m.def("nontrivial_intersecting_bound",
        [](int n, int k, int s, int q) { return bound_dict(nontrivial_intersecting_bound(n, k, s, q)); });

  // ------------------------------------------------------------ oracle
  m.def(
      "max_diameter_family",
      [](int q, int n, int d, bool enumerate_all, int threads, int timeout, std::uint64_t max_lattice,
         bool layer_cap) {
        std::string text;
        {
          py::gil_scoped_release release;
          auto r = max_diameter_family(q, n, d, options(enumerate_all, threads, timeout, max_lattice, layer_cap));
          if (enumerate_all && r.proven_optimal && d >= 2 && n >= d + 1) {
            const auto ch = verify_characterization(r);
            r.characterization_match = ch.ok;
            for (const auto& diag : ch.diagnostics) r.notes.push_back(diag);
          }
          text = report_to_json(r);
        }
        return json_loads(text);
      },
      py::arg("q"), py::arg("n"), py::arg("d"), py::kw_only(), py::arg("enumerate_all") = false,
      py::arg("threads") = 1, py::arg("timeout") = 600, py::arg("max_lattice") = SearchOptions::kDefaultMaxLattice,
      py::arg("layer_cap") = true);
  m.def(
      "max_admissible_family",
      [](int q, int n, int d, const std::string& cls, int threads, int timeout, std::uint64_t max_lattice) {
        const auto c = parse_forbidden_class(cls);
        std::string text;
        {
          py::gil_scoped_release release;
          text = report_to_json(max_admissible_family(q, n, d, c, options(false, threads, timeout, max_lattice, true)));
        }
        return json_loads(text);
      },
      py::arg("q"), py::arg("n"), py::arg("d"), py::arg("cls"), py::kw_only(), py::arg("threads") = 1,
      py::arg("timeout") = 600, py::arg("max_lattice") = SearchOptions::kDefaultMaxLattice);
  m.def(
      "sweep",
      [](const std::string& kind, std::optional<std::vector<int>> qs, int n_min, int n_max, int k_max, int t_min,
         int t_max) {
        SweepSpec spec;
        switch (parse_sweep_kind(kind)) {
          case SweepKind::Nontrivial: spec = nontrivial_grid(); break;
          case SweepKind::HPositive: spec = hpositive_grid(); break;
          case SweepKind::TypeBBelowTypeA: spec = typeb_grid(); break;
          case SweepKind::ProfileTotal:
            spec.kind = SweepKind::ProfileTotal;
            spec.n_max = 10;
            break;
        }
        if (qs) spec.qs = *qs;
        if (n_min >= 0) spec.n_min = n_min;
        if (n_max >= 0) spec.n_max = n_max;
        if (k_max >= 0) spec.k_max = k_max;
        if (t_min >= 0) spec.t_min = t_min;
        if (t_max >= 0) spec.t_max = t_max;
        return json_loads(sweep_to_json(inequality_sweep(spec)));
      },
      py::arg("kind"), py::arg("qs") = std::nullopt, py::arg("n_min") = -1, py::arg("n_max") = -1,
      py::arg("k_max") = -1, py::arg("t_min") = -1, py::arg("t_max") = -1,
      "Exact sweep; negative values keep the kind's default grid.");
  m.def(
      "selftest",
      [](std::uint64_t seed, int samples) {
        py::list out;
        for (const auto& c : run_selftest(seed, samples)) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 1, py::arg("samples") = 2000);
}
