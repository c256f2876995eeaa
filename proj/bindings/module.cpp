#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dessinator/dessin.hpp"
#include "dessinator/ends.hpp"
#include "dessinator/fpgroup.hpp"
#include "dessinator/homology.hpp"
#include "dessinator/modular.hpp"
#include "dessinator/superelliptic.hpp"
#include "dessinator/triangle.hpp"

namespace py = pybind11;
using namespace dessinator;

namespace {

Dessin make_dessin(const std::string& sigma, const std::string& tau, int edges) {
  return Dessin(parse_perm(sigma, edges), parse_perm(tau, edges));
}

py::dict analyze(const Dessin& d) {
  py::dict out;
  DessinType type = dessin_type(d);
  AutSizes aut = aut_full_size(d);
  Classification cls = classify(d);
  Passport pp = passport(d);
  out["edges"] = d.edge_count();
  out["sigma"] = to_cycle_string(d.sigma());
  out["tau"] = to_cycle_string(d.tau());
  out["passport"] = py::make_tuple(pp.black_degrees, pp.white_degrees, pp.face_degrees);
  out["genus"] = genus(d);
  out["type"] = py::make_tuple(type.a, type.b, type.c);
  out["geometry"] = geometry_name(type.geometry);
  out["uniform"] = is_uniform(d);
  out["clean"] = is_clean(d);
  out["monodromy_order"] = monodromy_order(d);
  out["aut_plus"] = aut.plus_size;
  out["aut_full"] = aut.full_size;
  out["regular"] = cls.regular;
  out["reflexive"] = cls.reflexive;
  out["chiral"] = cls.chiral;
  return out;
}

py::dict table_dict(const CosetTable& t, const std::vector<std::string>& names) {
  py::dict actions;
  for (size_t g = 0; g < names.size(); ++g)
    actions[py::str(names[g])] = to_cycle_string(t.action[g]);
  py::dict out;
  out["index"] = t.index;
  out["actions"] = actions;
  return out;
}

py::dict kn_invariants(int n, int max_cosets) {
  auto words = k_subgroup_words(n);
  OrbifoldInvariants inv = modular_orbifold_invariants(words, max_cosets);
  py::dict out;
  out["n"] = n;
  out["index"] = inv.index;
  out["genus"] = inv.genus;
  out["cusps"] = inv.cusps;
  out["e2"] = inv.e2;
  out["e3"] = inv.e3;
  out["free_rank"] = inv.free_rank ? py::cast(*inv.free_rank) : py::none();
  return out;
}

py::dict ends_profile(const std::string& group, int r_max) {
  OraclePtr oracle = parse_group_spec(group);
  EndsProfile profile = ends_estimate(*oracle, r_max);
  py::dict out;
  out["group"] = oracle->name();
  out["ball_sizes"] = profile.ball_sizes;
  out["component_counts"] = profile.component_counts;
  out["classification"] = ends_class_name(profile.classification);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "dessins d'enfants, coset enumeration, homology covers, ends, "
            "superelliptic curves";

  py::class_<Dessin>(m, "Dessin")
      .def(py::init(&make_dessin), py::arg("sigma"), py::arg("tau"), py::arg("edges"))
      .def_property_readonly("edges", &Dessin::edge_count)
      .def_property_readonly("sigma", [](const Dessin& d) { return to_cycle_string(d.sigma()); })
      .def_property_readonly("tau", [](const Dessin& d) { return to_cycle_string(d.tau()); })
      .def("__repr__", [](const Dessin& d) {
        return "Dessin(sigma=" + to_cycle_string(d.sigma()) +
               ", tau=" + to_cycle_string(d.tau()) +
               ", edges=" + std::to_string(d.edge_count()) + ")";
      });

  m.def("analyze", &analyze, py::arg("dessin"));
  m.def("genus", &genus, py::arg("dessin"));
  m.def("canonical_form", &canonical_form, py::arg("dessin"));
  m.def("mirror", &mirror, py::arg("dessin"));
  m.def("isomorphic",
        [](const Dessin& a, const Dessin& b) { return isomorphic(a, b).has_value(); },
        py::arg("a"), py::arg("b"));
  m.def("enumerate_dessins", &enumerate_dessins, py::arg("m"), py::arg("cap") = 8);

  m.def("homology_cover", &homology_cover, py::arg("base"), py::arg("modulus"),
        py::arg("edge_cap") = 1000000LL);
  m.def("cover_tower_genus",
        [](const Dessin& base, int modulus, int levels, long long edge_cap) {
          TowerResult r = cover_tower_genus(base, modulus, levels, edge_cap);
          return py::make_tuple(r.genera, r.truncated);
        },
        py::arg("base"), py::arg("modulus"), py::arg("levels"),
        py::arg("edge_cap") = 1000000LL);

  m.def("triangle_roundtrip_ok",
        [](const Dessin& d) {
          return isomorphic(d, table_to_dessin(dessin_to_table(d))).has_value();
        },
        py::arg("dessin"));

  m.def("coset_enumeration",
        [](const std::string& presentation, const std::vector<std::string>& subgroup,
           int max_cosets) {
          Presentation p = parse_presentation(presentation);
          std::vector<Word> words;
          for (const auto& w : subgroup) words.push_back(parse_word(w, p));
          return table_dict(coset_enumeration(p, words, max_cosets), p.generator_names);
        },
        py::arg("presentation"), py::arg("subgroup") = std::vector<std::string>{},
        py::arg("max_cosets") = 1000000);
  m.def("abelianization",
        [](const std::string& presentation) {
          Abelianization ab = abelianization(parse_presentation(presentation));
          std::vector<std::string> torsion;
          for (const auto& t : ab.torsion) torsion.push_back(t.get_str());
          return py::make_tuple(ab.free_rank, torsion);
        },
        py::arg("presentation"));

  m.def("kn_invariants", &kn_invariants, py::arg("n"), py::arg("max_cosets") = 1000000);
  m.def("mobius_eval",
        [](const std::string& word, std::int64_t num, std::int64_t den) {
          ProjectiveRational z =
              den == 0 ? ProjectiveRational::infinity() : ProjectiveRational::make(num, den);
          ProjectiveRational image = mobius_eval(parse_mobius_word(word), z);
          return py::make_tuple(image.num, image.den);
        },
        py::arg("word"), py::arg("num"), py::arg("den") = 1);

  m.def("ends_estimate", &ends_profile, py::arg("group"), py::arg("r_max"));

  m.def("genus_formula", &genus_formula, py::arg("n"), py::arg("d"));
  m.def("sine_eval",
        [](int n_zeros, std::complex<double> z) {
          return evaluate_truncated(sine_fixture(n_zeros), z);
        },
        py::arg("n_zeros"), py::arg("z"));
  m.def("affine_equivalent",
        [](const std::vector<std::complex<double>>& a,
           const std::vector<std::complex<double>>& b, double tol) -> py::object {
          auto map = affine_equivalent(a, b, tol);
          if (!map) return py::none();
          return py::make_tuple(map->first, map->second);
        },
        py::arg("zeros_a"), py::arg("zeros_b"), py::arg("tol") = 1e-9);
}
