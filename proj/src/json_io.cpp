#include "dessinator/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace dessinator {

Json dessin_to_json(const Dessin& d) {
  Json j;
  j["edges"] = d.edge_count();
  j["sigma"] = to_cycle_string(d.sigma());
  j["tau"] = to_cycle_string(d.tau());
  return j;
}

Dessin dessin_from_json(const Json& j) {
  if (!j.contains("edges") || !j.contains("sigma") || !j.contains("tau"))
    throw std::invalid_argument("dessin json needs edges, sigma and tau");
  int m = j.at("edges").get<int>();
  Perm sigma = parse_perm(j.at("sigma").get<std::string>(), m);
  Perm tau = parse_perm(j.at("tau").get<std::string>(), m);
  return Dessin(std::move(sigma), std::move(tau));
}

Dessin load_dessin(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return dessin_from_json(j);
}

void save_dessin(const Dessin& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << dessin_to_json(d).dump(2) << "\n";
}

Json coset_table_to_json(const CosetTable& t, const std::vector<std::string>& names) {
  if (names.size() != t.action.size())
    throw std::invalid_argument("one generator name per action column required");
  Json actions = Json::object();
  for (size_t g = 0; g < names.size(); ++g)
    actions[names[g]] = to_cycle_string(t.action[g]);
  Json j;
  j["index"] = t.index;
  j["actions"] = std::move(actions);
  return j;
}

CosetTable coset_table_from_json(const Json& j, std::vector<std::string>* names) {
  CosetTable t;
  t.index = j.at("index").get<int>();
  if (names) names->clear();
  for (const auto& [name, value] : j.at("actions").items()) {
    t.action.push_back(parse_perm(value.get<std::string>(), t.index));
    if (names) names->push_back(name);
  }
  return t;
}

}  // namespace dessinator
