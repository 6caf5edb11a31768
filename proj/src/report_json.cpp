#include "rainbow/report_json.hpp"

namespace rainbow {

using nlohmann::json;

json certificate_to_json(const MaximalityCertificate& c) {
  return json{{"start", c.start_condition}, {"end", c.end_condition}};
}

json report_to_json(const SolveReport& r) {
  json trace = json::array();
  for (const Move& m : r.trace) {
    switch (m.kind) {
      case Move::Kind::extend_start:
        trace.push_back({{"op", "extend_start"}, {"v", m.value}});
        break;
      case Move::Kind::extend_end:
        trace.push_back({{"op", "extend_end"}, {"v", m.value}});
        break;
      case Move::Kind::rotate:
        trace.push_back({{"op", "rotate"}, {"i", m.value}});
        break;
    }
  }
  json j{{"method", method_name(r.method)},
         {"k", r.k},
         {"vertices", r.path.vertices()},
         {"length", r.path.size()},
         {"c_k_size", r.c_k_size},
         {"certificate", certificate_to_json(r.certificate)},
         {"bound", {{"num", r.guaranteed_bound.num()}, {"den", r.guaranteed_bound.den()}}},
         {"trace", std::move(trace)}};
  if (r.method == Method::exact) j["exhaustive"] = r.exhaustive;
  return j;
}

json path_to_json(const Path& p, int k) {
  json colors = json::array();
  const auto& v = p.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    colors.push_back(p.graph().color(v[i], v[i + 1]));
  return json{{"vertices", p.vertices()}, {"k", k}, {"colors", std::move(colors)}};
}

std::pair<std::vector<int>, int> path_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("path JSON must be an object with a \"vertices\" array");
  std::vector<int> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("path vertices must be integers");
    vertices.push_back(v.get<int>());
  }
  int k = 1;
  if (j.contains("k")) {
    if (!j["k"].is_number_integer()) throw std::invalid_argument("path k must be an integer");
    k = j["k"].get<int>();
  }
  return {std::move(vertices), k};
}

json transversal_to_json(const LatinSquare& sq, const Transversal& t) {
  json cells = json::array();
  json values = json::array();
  for (auto [r, c] : t.cells) {
    cells.push_back({r, c});
    values.push_back(sq.at(r, c));
  }
  return json{{"cells", std::move(cells)}, {"values", std::move(values)}};
}

Transversal transversal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    throw std::invalid_argument("transversal JSON must be an object with a \"cells\" array");
  Transversal t;
  for (const auto& cell : j["cells"]) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
        !cell[1].is_number_integer())
      throw std::invalid_argument("transversal cells must be [row, column] pairs");
    t.cells.emplace_back(cell[0].get<int>(), cell[1].get<int>());
  }
  return t;
}

}  // namespace rainbow
