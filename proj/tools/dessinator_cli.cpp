#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dessinator/dessin.hpp"
#include "dessinator/ends.hpp"
#include "dessinator/fpgroup.hpp"
#include "dessinator/homology.hpp"
#include "dessinator/json_io.hpp"
#include "dessinator/modular.hpp"
#include "dessinator/superelliptic.hpp"
#include "dessinator/triangle.hpp"

namespace {

using dessinator::Json;

constexpr int kSchemaVersion = 1;

int default_max_cosets() {
  if (const char* env = std::getenv("DESSINATOR_MAX_COSETS")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 1000000;
}

void emit(const Json& payload) { std::cout << payload.dump(2) << "\n"; }

Json payload_head() {
  Json j;
  j["schema_version"] = kSchemaVersion;
  return j;
}

Json passport_json(const dessinator::Passport& p) {
  Json j;
  j["black"] = p.black_degrees;
  j["white"] = p.white_degrees;
  j["faces"] = p.face_degrees;
  return j;
}

Json type_json(int a, int b, int c, dessinator::Geometry geometry) {
  Json j;
  j["a"] = a;
  j["b"] = b;
  j["c"] = c;
  j["geometry"] = dessinator::geometry_name(geometry);
  return j;
}

Json complex_json(std::complex<double> z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

std::string projective_text(const dessinator::ProjectiveRational& z) {
  if (z.is_infinity()) return "inf";
  if (z.den == 1) return std::to_string(z.num);
  return std::to_string(z.num) + "/" + std::to_string(z.den);
}

dessinator::ProjectiveRational parse_projective(const std::string& text) {
  if (text == "inf" || text == "infinity") return dessinator::ProjectiveRational::infinity();
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return dessinator::ProjectiveRational::make(std::stoll(text), 1);
  return dessinator::ProjectiveRational::make(std::stoll(text.substr(0, slash)),
                                              std::stoll(text.substr(slash + 1)));
}

std::vector<std::complex<double>> load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  std::vector<std::complex<double>> out;
  for (const auto& entry : j) {
    if (entry.is_array())
      out.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
    else if (entry.is_object())
      out.emplace_back(entry.at("re").get<double>(), entry.value("im", 0.0));
    else
      out.emplace_back(entry.get<double>(), 0.0);
  }
  return out;
}

void run_dessin_analyze(const std::string& in_path) {
  dessinator::Dessin d = dessinator::load_dessin(in_path);
  dessinator::DessinType type = dessinator::dessin_type(d);
  dessinator::AutSizes aut = dessinator::aut_full_size(d);
  dessinator::Classification cls = dessinator::classify(d);
  Json j = payload_head();
  j["edges"] = d.edge_count();
  j["sigma"] = dessinator::to_cycle_string(d.sigma());
  j["tau"] = dessinator::to_cycle_string(d.tau());
  j["passport"] = passport_json(dessinator::passport(d));
  j["genus"] = dessinator::genus(d);
  j["type"] = type_json(type.a, type.b, type.c, type.geometry);
  j["uniform"] = dessinator::is_uniform(d);
  j["clean"] = dessinator::is_clean(d);
  j["bounded_by"] = dessinator::bounded_by(d);
  j["monodromy_order"] = dessinator::monodromy_order(d);
  j["aut_plus"] = aut.plus_size;
  j["aut_full"] = aut.full_size;
  j["regular"] = cls.regular;
  j["reflexive"] = cls.reflexive;
  j["chiral"] = cls.chiral;
  emit(j);
}

void run_dessin_enumerate(int m, int cap) {
  std::vector<dessinator::Dessin> all = dessinator::enumerate_dessins(m, cap);
  Json list = Json::array();
  for (const auto& d : all) list.push_back(dessinator::dessin_to_json(d));
  Json j = payload_head();
  j["edges"] = m;
  j["count"] = all.size();
  j["dessins"] = std::move(list);
  emit(j);
}

void run_dessin_cover(const std::string& in_path, int modulus, const std::string& out_path) {
  dessinator::Dessin base = dessinator::load_dessin(in_path);
  dessinator::HomologyCover cover = dessinator::homology_cover_full(base, modulus);
  Json j = payload_head();
  j["base_edges"] = cover.base_edges;
  j["base_genus"] = dessinator::genus(base);
  j["modulus"] = cover.modulus;
  j["homology_rank"] = cover.homology_rank;
  j["deck_order"] = cover.deck_order();
  j["cover_edges"] = cover.dessin.edge_count();
  j["cover_genus"] = dessinator::genus(cover.dessin);
  j["regular"] = dessinator::classify(cover.dessin).regular;
  if (!out_path.empty()) {
    dessinator::save_dessin(cover.dessin, out_path);
    j["out"] = out_path;
  } else {
    j["cover"] = dessinator::dessin_to_json(cover.dessin);
  }
  emit(j);
}

void run_triangle_check(const std::string& in_path, int crosscheck_cap) {
  dessinator::Dessin d = dessinator::load_dessin(in_path);
  dessinator::TriangleType t = dessinator::triangle_type_of(d);
  Json j = payload_head();
  j["type"] = type_json(t.a, t.b, t.c, t.geometry);
  j["presentation"] = dessinator::format_presentation(dessinator::triangle_presentation(t));
  j["torsion_free_uniform"] = dessinator::is_torsion_free_uniform(d);
  j["normal_regular"] = dessinator::is_normal_regular(d);
  if (d.edge_count() <= crosscheck_cap) {
    dessinator::NormalizerCrosscheck cc = dessinator::aut_normalizer_crosscheck(d, crosscheck_cap);
    Json c;
    c["aut_plus"] = cc.aut_plus_size;
    c["normalizer_quotient"] = cc.normalizer_quotient_size;
    c["agree"] = cc.aut_plus_size == cc.normalizer_quotient_size;
    j["crosscheck"] = std::move(c);
  }
  emit(j);
}

void run_triangle_roundtrip(const std::string& in_path) {
  dessinator::Dessin d = dessinator::load_dessin(in_path);
  dessinator::CosetTable table = dessinator::dessin_to_table(d);
  dessinator::Dessin back = dessinator::table_to_dessin(table);
  Json j = payload_head();
  j["table"] = dessinator::coset_table_to_json(table, {"x", "y"});
  j["roundtrip_isomorphic"] = dessinator::isomorphic(d, back).has_value();
  emit(j);
}

void run_modular_kn(int n, int max_cosets) {
  std::vector<dessinator::MobiusWord> words = dessinator::k_subgroup_words(n);
  dessinator::OrbifoldInvariants inv = dessinator::modular_orbifold_invariants(words, max_cosets);
  Json gens = Json::array();
  for (const auto& w : words) gens.push_back(w.text());
  Json j = payload_head();
  j["n"] = n;
  j["generators"] = std::move(gens);
  j["index"] = inv.index;
  j["genus"] = inv.genus;
  j["cusps"] = inv.cusps;
  j["e2"] = inv.e2;
  j["e3"] = inv.e3;
  if (inv.free_rank)
    j["free_rank"] = *inv.free_rank;
  else
    j["free_rank"] = nullptr;
  emit(j);
}

void run_modular_eval(const std::string& word_text, const std::vector<std::string>& points) {
  dessinator::MobiusWord w = dessinator::parse_mobius_word(word_text);
  Json images = Json::array();
  for (const auto& p : points) {
    dessinator::ProjectiveRational z = parse_projective(p);
    Json entry;
    entry["z"] = projective_text(z);
    entry["image"] = projective_text(dessinator::mobius_eval(w, z));
    images.push_back(std::move(entry));
  }
  Json j = payload_head();
  j["word"] = w.text();
  j["matrix"] = Json::array({Json::array({w.matrix.a, w.matrix.b}),
                             Json::array({w.matrix.c, w.matrix.d})});
  j["images"] = std::move(images);
  emit(j);
}

void run_ends(const std::string& group_spec, int r_max) {
  dessinator::OraclePtr oracle = dessinator::parse_group_spec(group_spec);
  dessinator::EndsProfile profile = dessinator::ends_estimate(*oracle, r_max);
  Json j = payload_head();
  j["group"] = oracle->name();
  j["r_max"] = r_max;
  j["ball_sizes"] = profile.ball_sizes;
  j["component_counts"] = profile.component_counts;
  j["classification"] = dessinator::ends_class_name(profile.classification);
  emit(j);
}

void run_superelliptic_genus(int n, int d) {
  Json j = payload_head();
  j["n"] = n;
  j["d"] = d;
  j["genus"] = dessinator::genus_formula(n, d);
  emit(j);
}

void run_superelliptic_eval(const std::string& fixture, int n_zeros, double zr, double zi) {
  if (fixture != "sine") throw std::invalid_argument("unknown fixture '" + fixture + "'");
  dessinator::TruncatedProduct p = dessinator::sine_fixture(n_zeros);
  std::complex<double> z(zr, zi);
  std::complex<double> value = dessinator::evaluate_truncated(p, z);
  std::complex<double> reference = std::sin(std::numbers::pi * z);
  Json j = payload_head();
  j["fixture"] = fixture;
  j["N"] = n_zeros;
  j["z"] = complex_json(z);
  j["value"] = complex_json(value);
  j["reference"] = complex_json(reference);
  double scale = std::abs(reference);
  j["relative_error"] = scale > 0 ? std::abs(value - reference) / scale : std::abs(value);
  emit(j);
}

void run_superelliptic_moduli(const std::string& a_path, const std::string& b_path, double tol) {
  auto zeros_a = load_zeros(a_path);
  auto zeros_b = load_zeros(b_path);
  auto map = dessinator::affine_equivalent(zeros_a, zeros_b, tol);
  Json j = payload_head();
  j["tol"] = tol;
  j["equivalent"] = map.has_value();
  if (map) {
    j["a"] = complex_json(map->first);
    j["b"] = complex_json(map->second);
  } else {
    j["a"] = nullptr;
    j["b"] = nullptr;
  }
  emit(j);
}

void run_fpgroup_enumerate(const std::string& presentation_text,
                           const std::vector<std::string>& subgroup_words, int max_cosets) {
  dessinator::Presentation p = dessinator::parse_presentation(presentation_text);
  std::vector<dessinator::Word> subgroup;
  for (const auto& text : subgroup_words) subgroup.push_back(dessinator::parse_word(text, p));
  dessinator::CosetTable table = dessinator::coset_enumeration(p, subgroup, max_cosets);
  Json j = payload_head();
  j["presentation"] = dessinator::format_presentation(p);
  j["index"] = table.index;
  j["table"] = dessinator::coset_table_to_json(table, p.generator_names);
  emit(j);
}

void run_fpgroup_abelianize(const std::string& presentation_text) {
  dessinator::Presentation p = dessinator::parse_presentation(presentation_text);
  dessinator::Abelianization ab = dessinator::abelianization(p);
  Json torsion = Json::array();
  for (const auto& t : ab.torsion) torsion.push_back(t.get_str());
  Json j = payload_head();
  j["presentation"] = dessinator::format_presentation(p);
  j["free_rank"] = ab.free_rank;
  j["torsion"] = std::move(torsion);
  emit(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dessins d'enfants, coset enumeration, homology covers, ends and "
               "superelliptic curves"};
  app.require_subcommand(1);

  int seed = 0;
  int threads = 1;
  app.add_option("--seed", seed, "search-order seed (results are seed-independent)");
  app.add_option("--threads", threads, "worker threads for modules that support them");

  int max_cosets = default_max_cosets();

  // dessin
  auto* dessin = app.add_subcommand("dessin", "dessin analysis and enumeration");
  dessin->require_subcommand(1);

  std::string analyze_in;
  auto* analyze = dessin->add_subcommand("analyze", "invariants of one dessin");
  analyze->add_option("--in", analyze_in, "dessin json file")->required();

  int enum_m = 1, enum_cap = 8;
  auto* enumerate = dessin->add_subcommand("enumerate", "all dessins with m edges");
  enumerate->add_option("--m", enum_m, "edge count")->required();
  enumerate->add_option("--cap", enum_cap, "refuse edge counts above this");

  std::string cover_in, cover_out;
  int cover_mod = 2;
  auto* cover = dessin->add_subcommand("cover", "mod-m homology cover");
  cover->add_option("--in", cover_in, "base dessin json file")->required();
  cover->add_option("--mod", cover_mod, "modulus m >= 2")->required();
  cover->add_option("--out", cover_out, "write the covering dessin here");

  // top-level alias for the cover pipeline
  std::string hc_in, hc_out;
  int hc_mod = 2;
  auto* homology_cover = app.add_subcommand("homology-cover", "mod-m homology cover");
  homology_cover->add_option("--in", hc_in, "base dessin json file")->required();
  homology_cover->add_option("--mod", hc_mod, "modulus m >= 2")->required();
  homology_cover->add_option("--out", hc_out, "write the covering dessin here");

  // triangle
  auto* triangle = app.add_subcommand("triangle", "triangle-group correspondence");
  triangle->require_subcommand(1);

  std::string check_in;
  int check_cap = 12;
  auto* check = triangle->add_subcommand("check", "type, presentation, subgroup tests");
  check->add_option("--in", check_in, "dessin json file")->required();
  check->add_option("--crosscheck-cap", check_cap, "normalizer crosscheck up to this many edges");

  std::string roundtrip_in;
  auto* roundtrip = triangle->add_subcommand("roundtrip", "dessin -> coset table -> dessin");
  roundtrip->add_option("--in", roundtrip_in, "dessin json file")->required();

  // modular
  auto* modular = app.add_subcommand("modular", "subgroups of the modular group");
  modular->require_subcommand(1);

  int kn_n = 1;
  auto* kn = modular->add_subcommand("kn", "invariants of K_n");
  kn->add_option("--n", kn_n, "subgroup parameter n >= 0")->required();

  std::string eval_word;
  std::vector<std::string> eval_points;
  auto* modular_eval = modular->add_subcommand("eval", "apply an {A, E} word to points");
  modular_eval->add_option("--word", eval_word, "word like A^2*E")->required();
  modular_eval->add_option("--z", eval_points, "points: integers, fractions p/q, or inf")
      ->required();

  // ends
  std::string ends_group;
  int ends_rmax = 6;
  auto* ends = app.add_subcommand("ends", "empirical ends classification");
  ends->add_option("--group", ends_group, "group spec: Z, Z^2, Z6, F2, Z2*Z3, ...")->required();
  ends->add_option("--rmax", ends_rmax, "ball radius, at least 4");

  // superelliptic
  auto* super = app.add_subcommand("superelliptic", "truncated superelliptic curves");
  super->require_subcommand(1);

  int sg_n = 2, sg_d = 1;
  auto* sgenus = super->add_subcommand("genus", "genus of w^n = f(z) with d*n simple roots");
  sgenus->add_option("--n", sg_n, "cover degree")->required();
  sgenus->add_option("--d", sg_d, "root blocks")->required();

  std::string se_fixture = "sine";
  int se_n = 1000;
  double se_zr = 0.5, se_zi = 0.0;
  auto* seval = super->add_subcommand("eval", "evaluate a truncated product fixture");
  seval->add_option("--fixture", se_fixture, "fixture name (sine)");
  seval->add_option("--N", se_n, "zero pairs")->required();
  seval->add_option("--z", se_zr, "evaluation point, real part")->required();
  seval->add_option("--zi", se_zi, "evaluation point, imaginary part");

  std::string sm_a, sm_b;
  double sm_tol = 1e-9;
  auto* smoduli = super->add_subcommand("moduli", "affine equivalence of zero sets");
  smoduli->add_option("--a", sm_a, "json array of zeros")->required();
  smoduli->add_option("--b", sm_b, "json array of zeros")->required();
  smoduli->add_option("--tol", sm_tol, "matching tolerance");

  // fpgroup
  auto* fpgroup = app.add_subcommand("fpgroup", "finitely presented groups");
  fpgroup->require_subcommand(1);

  std::string fe_presentation;
  std::vector<std::string> fe_subgroup;
  auto* fenumerate = fpgroup->add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  fenumerate->add_option("--presentation", fe_presentation, "like \"< x y | x^2 y^3 (y*x)^7 >\"")
      ->required();
  fenumerate->add_option("--subgroup", fe_subgroup, "subgroup generator words");
  fenumerate->add_option("--max-cosets", max_cosets, "enumeration cap");

  std::string fa_presentation;
  auto* fabelianize = fpgroup->add_subcommand("abelianize", "Smith-form abelianization");
  fabelianize->add_option("--presentation", fa_presentation, "presentation text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  (void)seed;
  (void)threads;

  try {
    if (*analyze) run_dessin_analyze(analyze_in);
    else if (*enumerate) run_dessin_enumerate(enum_m, enum_cap);
    else if (*cover) run_dessin_cover(cover_in, cover_mod, cover_out);
    else if (*homology_cover) run_dessin_cover(hc_in, hc_mod, hc_out);
    else if (*check) run_triangle_check(check_in, check_cap);
    else if (*roundtrip) run_triangle_roundtrip(roundtrip_in);
    else if (*kn) run_modular_kn(kn_n, max_cosets);
    else if (*modular_eval) run_modular_eval(eval_word, eval_points);
    else if (*ends) run_ends(ends_group, ends_rmax);
    else if (*sgenus) run_superelliptic_genus(sg_n, sg_d);
    else if (*seval) run_superelliptic_eval(se_fixture, se_n, se_zr, se_zi);
    else if (*smoduli) run_superelliptic_moduli(sm_a, sm_b, sm_tol);
    else if (*fenumerate) run_fpgroup_enumerate(fe_presentation, fe_subgroup, max_cosets);
    else if (*fabelianize) run_fpgroup_abelianize(fa_presentation);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
