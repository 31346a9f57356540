#include "vactab/serialize.hpp"

#include <stdexcept>

namespace vactab {

namespace {

json int_to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

json to_json(const IntegerPartition& p) {
  json j = json::array();
  for (int part : p.parts()) j.push_back(part);
  return j;
}

IntegerPartition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition: expected array");
  std::vector<int> parts;
  for (const auto& e : j) parts.push_back(e.get<int>());
  return IntegerPartition(std::move(parts));
}

json to_json(const Cell& c) { return json::array({c.row, c.col}); }

Cell cell_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("cell: expected [row, col]");
  return {j[0].get<int>(), j[1].get<int>()};
}

json to_json(const Tableau& t) {
  json j = json::array();
  for (const auto& row : t.rows()) j.push_back(row);
  return j;
}

Tableau tableau_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau: expected array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) rows.push_back(r.get<std::vector<int>>());
  return Tableau(std::move(rows));
}

json to_json(const TwoLineArray& a) {
  json j = json::array();
  for (const auto& [u, v] : a.pairs()) j.push_back(json::array({u, v}));
  return j;
}

TwoLineArray two_line_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("two-line array: expected array");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("two-line array: expected [u, v] pairs");
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return TwoLineArray(std::move(pairs));
}

json to_json(const VacillatingTableau& w) {
  json j;
  j["variant"] = variant_tag(w.variant());
  if (w.variant() == WalkVariant::NVac) j["n"] = w.n();
  j["shapes"] = json::array();
  for (const auto& s : w.shapes()) j["shapes"].push_back(to_json(s));
  return j;
}

VacillatingTableau walk_from_json(const json& j) {
  const auto variant = variant_from_tag(j.at("variant").get<std::string>());
  std::vector<IntegerPartition> shapes;
  for (const auto& s : j.at("shapes")) shapes.push_back(partition_from_json(s));
  const int n = variant == WalkVariant::NVac ? j.at("n").get<int>() : 0;
  return VacillatingTableau(variant, std::move(shapes), n);
}

json to_json(const SetPartition& p) {
  json j;
  j["ground"] = p.ground();
  j["blocks"] = json::array();
  for (const auto& b : p.blocks()) j["blocks"].push_back(b);
  return j;
}

SetPartition set_partition_from_json(const json& j) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j.at("blocks")) blocks.push_back(b.get<std::vector<int>>());
  return SetPartition(j.at("ground").get<std::vector<int>>(), std::move(blocks));
}

json to_json(const MarkedSetPartition& p) {
  json j = to_json(p.partition());
  j["marked"] = p.marked();
  return j;
}

MarkedSetPartition marked_partition_from_json(const json& j) {
  return MarkedSetPartition(set_partition_from_json(j),
                            j.value("marked", std::vector<int>{}));
}

json to_json(const PsiImage& img) {
  return {{"partition", to_json(img.marked)}, {"tableau", to_json(img.tableau)}};
}

PsiImage psi_image_from_json(const json& j) {
  return {marked_partition_from_json(j.at("partition")), tableau_from_json(j.at("tableau"))};
}

json to_json(const DiImage& img) {
  return {{"tableau", to_json(img.tableau)}, {"walk", to_json(img.walk)}};
}

DiImage di_image_from_json(const json& j) {
  return {tableau_from_json(j.at("tableau")), walk_from_json(j.at("walk"))};
}

json to_json(const PsiTrace& trace) {
  json j = json::array();
  for (const auto& step : trace) {
    json edges = json::array();
    for (const auto& [a, b] : step.edges) edges.push_back(json::array({a, b}));
    j.push_back({{"step", step.step}, {"E", edges}, {"T", to_json(step.tableau)}});
  }
  return j;
}

json to_json(const QPoly& p) {
  json j = json::array();
  for (const Int& c : p.coeffs()) j.push_back(int_to_json(c));
  return j;
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("qpoly: expected coefficient array");
  std::vector<Int> coeffs;
  for (const auto& c : j) coeffs.push_back(int_from_json(c));
  return QPoly(std::move(coeffs));
}

json to_json(const EvalPoint& pt) {
  json j = json::array();
  for (const Rat& v : pt.values) j.push_back(to_string(v));
  return j;
}

EvalPoint eval_point_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("eval point: expected array");
  EvalPoint pt;
  for (const auto& v : j) pt.values.push_back(parse_rat(v.get<std::string>()));
  return pt;
}

json to_json(const SequenceTable& t) {
  json j;
  j["name"] = seq_tag(t.name);
  j["oeis"] = seq_oeis_label(t.name);
  j["terms"] = json::array();
  for (const Int& v : t.terms) j["terms"].push_back(int_to_json(v));
  return j;
}

json to_json(const VerificationReport& r) {
  return {{"id", r.id},   {"params", r.params}, {"status", r.status},
          {"lhs", r.lhs}, {"rhs", r.rhs},       {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace vactab
