#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpalg/commutators.hpp"
#include "gpalg/complexes.hpp"
#include "gpalg/errors.hpp"
#include "gpalg/groupalg.hpp"
#include "gpalg/lie.hpp"
#include "gpalg/ncalg.hpp"
#include "gpalg/powerseries.hpp"
#include "gpalg/words.hpp"

namespace py = pybind11;
using namespace gpalg;

namespace {

AlgebraKind kind_from_string(const std::string& kind) {
  if (kind == "poly") return AlgebraKind::poly;
  if (kind == "ext") return AlgebraKind::ext;
  if (kind == "trunc") return AlgebraKind::trunc;
  throw input_error("unknown algebra kind '" + kind + "'");
}

std::vector<std::vector<int>> faces_as_lists(const std::vector<uint64_t>& faces) {
  std::vector<std::vector<int>> out;
  for (uint64_t f : faces) out.push_back(mask_vertices(f));
  return out;
}

std::shared_ptr<const GroupSpec> spec_for(const SimplicialComplex& K,
                                          const std::vector<int>& orders) {
  Graph g = one_skeleton(K);
  std::vector<int> ords = orders;
  if (ords.size() == 1) ords.assign(static_cast<size_t>(K.vertex_count()), orders[0]);
  return GroupSpec::create(K.vertex_count(), ords, g.edges());
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "graph products of groups and graded algebras";

  py::register_exception<input_error>(mod, "InputError", PyExc_ValueError);
  py::register_exception<budget_error>(mod, "BudgetError", PyExc_RuntimeError);
  py::register_exception<verification_error>(mod, "VerificationError", PyExc_RuntimeError);

  py::class_<SimplicialComplex>(mod, "Complex")
      .def(py::init([](int m, const std::vector<std::vector<int>>& facets) {
             return SimplicialComplex::from_facets(m, facets);
           }),
           py::arg("m"), py::arg("facets"))
      .def_property_readonly("m", &SimplicialComplex::vertex_count)
      .def("faces", [](const SimplicialComplex& K) { return faces_as_lists(K.faces()); })
      .def("facets", [](const SimplicialComplex& K) { return faces_as_lists(K.facets()); })
      .def("missing_faces",
           [](const SimplicialComplex& K) { return faces_as_lists(missing_faces(K)); })
      .def("is_flag", [](const SimplicialComplex& K) { return is_flag(K); })
      .def("is_chordal", [](const SimplicialComplex& K) { return is_chordal(one_skeleton(K)); })
      .def("edges", [](const SimplicialComplex& K) { return one_skeleton(K).edges(); })
      .def("homology_count", [](const SimplicialComplex& K) { return homology_count(K); })
      .def("flag_closure",
           [](const SimplicialComplex& K) { return clique_complex(one_skeleton(K)); })
      .def("full_subcomplex",
           [](const SimplicialComplex& K, const std::vector<int>& vertices) {
             return full_subcomplex(K, face_mask(vertices, K.vertex_count()));
           })
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; });

  mod.def("substitution", &substitution_complex, py::arg("k"), py::arg("parts"));

  mod.def(
      "hilbert_formula",
      [](const SimplicialComplex& K, const std::string& kind, int p, int degree) {
        AlgebraPresentation P = presentation_from_complex(K, kind_from_string(kind), p);
        return hilbert_series_formula(P, degree).coefficients();
      },
      py::arg("k"), py::arg("kind"), py::arg("p"), py::arg("degree"));

  mod.def(
      "hilbert_bruteforce",
      [](const SimplicialComplex& K, const std::string& kind, int p, int degree,
         size_t max_columns) {
        AlgebraPresentation P = presentation_from_complex(K, kind_from_string(kind), p);
        return graded_dim_bruteforce(P, degree, max_columns);
      },
      py::arg("k"), py::arg("kind"), py::arg("p"), py::arg("degree"),
      py::arg("max_columns") = 300'000);

  mod.def(
      "lie_dims",
      [](const SimplicialComplex& K, int degree) { return graph_lie_dims(K, degree).dims; },
      py::arg("k"), py::arg("degree"));
  mod.def(
      "restricted_lie_dims",
      [](const SimplicialComplex& K, int p, int degree) {
        return graph_restricted_lie_dims(K, p, degree).dims;
      },
      py::arg("k"), py::arg("p"), py::arg("degree"));

  mod.def("lyndon_words", &lyndon_words, py::arg("m"), py::arg("n"));
  mod.def("witt_dimension", &witt_dimension, py::arg("m"), py::arg("n"));
  mod.def("free_restricted_dim", &free_restricted_dim, py::arg("m"), py::arg("n"), py::arg("p"));
  mod.def("p_power_axiom_check", &p_power_axiom_check, py::arg("p"), py::arg("trials"),
          py::arg("seed"));

  mod.def(
      "gr_dim_oracle",
      [](const SimplicialComplex& K, int p, int n, int k_max, size_t max_elements) {
        OracleResult r = gr_dim_oracle(GroupSpec::from_complex(K, p), n, k_max, max_elements);
        py::dict d;
        d["dim"] = r.dim;
        d["stabilized"] = r.stabilized;
        d["truncation_used"] = r.truncation_used;
        d["history"] = r.history;
        return d;
      },
      py::arg("k"), py::arg("p"), py::arg("n"), py::arg("k_max") = 0,
      py::arg("max_elements") = 2'000'000);

  mod.def(
      "quillen_check",
      [](const SimplicialComplex& K, int p, int degree) {
        QuillenReport rep = quillen_check(K, p, degree);
        py::list rows;
        for (const QuillenRow& r : rep.rows) {
          py::dict d;
          d["degree"] = r.degree;
          d["group_oracle"] = r.oracle_dim;
          d["stabilized"] = r.stabilized;
          d["bruteforce"] = r.bruteforce_dim;
          d["formula"] = r.formula_coeff;
          d["agree"] = r.agree;
          rows.append(d);
        }
        py::dict out;
        out["p"] = rep.p;
        out["rows"] = rows;
        out["pass"] = rep.pass;
        return out;
      },
      py::arg("k"), py::arg("p"), py::arg("degree"));

  mod.def(
      "comm_generators",
      [](const SimplicialComplex& K) {
        GeneratorReport rep = freeness_report(K);
        auto spec = GroupSpec::from_complex(K, 2);
        py::list descs;
        for (const CommutatorDescriptor& d : rep.descriptors) {
          py::dict row;
          row["k_list"] = d.k_list;
          row["j"] = d.j;
          row["i"] = d.i;
          row["text"] = d.to_string();
          row["realized"] = realize_generator(spec, d).to_string();
          descs.append(row);
        }
        py::dict out;
        out["descriptors"] = descs;
        out["count"] = rep.count;
        out["homology_sum"] = rep.homology_sum;
        out["chordal"] = rep.chordal;
        out["free_verdict"] = rep.free_verdict;
        return out;
      },
      py::arg("k"));

  mod.def(
      "word_normal_form",
      [](const SimplicialComplex& K, const std::vector<int>& orders, const std::string& text) {
        auto spec = spec_for(K, orders);
        GroupElement w = parse_word(spec, text);
        py::dict out;
        out["normal_form"] = w.to_string();
        out["is_identity"] = w.is_identity();
        out["word_length"] = word_length(w);
        out["abelianization"] = abelianization(w);
        out["in_commutator_subgroup"] = is_in_commutator_subgroup(w);
        return out;
      },
      py::arg("k"), py::arg("orders"), py::arg("word"));

  mod.def(
      "ball_size",
      [](const SimplicialComplex& K, const std::vector<int>& orders, int radius,
         size_t max_elements) {
        return enumerate_ball(spec_for(K, orders), radius, max_elements).size();
      },
      py::arg("k"), py::arg("orders"), py::arg("radius"), py::arg("max_elements") = 2'000'000);
}
