#include "clusterforge/schedule_json.hpp"

#include <fstream>

#include <json.hpp>

namespace clusterforge {

using ordered_json = nlohmann::ordered_json;

std::string schedule_to_json(const Schedule& s) {
  ordered_json doc;
  doc["version"] = 1;
  doc["name"] = s.name;
  ordered_json graph;
  graph["vertex_count"] = s.target.vertex_count;
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : s.target.edges) edges.push_back({a, b});
  graph["edges"] = std::move(edges);
  doc["target_graph"] = std::move(graph);
  ordered_json ops = ordered_json::array();
  for (const PrimOp& op : s.ops) {
    ordered_json o;
    o["kind"] = op_kind_name(op.kind);
    if (is_two_qubit(op.kind))
      o["operands"] = {op.a, op.b};
    else
      o["operands"] = {op.a};
    ops.push_back(std::move(o));
  }
  doc["ops"] = std::move(ops);
  const ResourceCount rc = count_resources(s);
  ordered_json res;
  res["entanglers"] = rc.entanglers;
  res["cz_gates"] = rc.cz_gates;
  res["entangler_equiv"] = rc.entangler_equiv;
  res["ancilla_photons"] = rc.ancilla_photons;
  res["photons"] = rc.photons;
  doc["resources"] = std::move(res);
  return doc.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text) {
  const ordered_json doc = ordered_json::parse(text);
  if (!doc.contains("version") || doc["version"].get<int>() != 1)
    throw std::invalid_argument("unsupported schedule version");
  Schedule s;
  s.name = doc.value("name", std::string{});
  const auto& graph = doc.at("target_graph");
  s.target.vertex_count = graph.at("vertex_count").get<std::size_t>();
  for (const auto& e : graph.at("edges")) {
    if (e.size() != 2) throw std::invalid_argument("edge must have two endpoints");
    s.target.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  for (const auto& o : doc.at("ops")) {
    const OpKind kind = op_kind_from_name(o.at("kind").get<std::string>());
    const auto& operands = o.at("operands");
    if (is_two_qubit(kind)) {
      if (operands.size() != 2)
        throw std::invalid_argument("two-qubit op needs two operands");
      s.ops.push_back({kind, operands[0].get<std::size_t>(), operands[1].get<std::size_t>()});
    } else {
      if (operands.size() != 1)
        throw std::invalid_argument("single-qubit op needs one operand");
      s.ops.push_back({kind, operands[0].get<std::size_t>()});
    }
  }
  validate(s);
  return s;
}

void save_schedule(const Schedule& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << schedule_to_json(s);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Schedule load_schedule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return schedule_from_json(text);
}

}  // namespace clusterforge
