#include "feynman/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace feynman {
namespace {

using nlohmann::json;

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw GraphFormatError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw GraphFormatError(path + "." + key, "missing required key");
  return *it;
}

Rational rational_value(const json& v, const std::string& path) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw GraphFormatError(path, e.what());
  }
  throw GraphFormatError(path, "expected a rational string such as \"3/4\"");
}

std::size_t vertex_ref(const json& v, const std::map<std::string, std::size_t>& index, const std::string& path) {
  if (!v.is_string()) throw GraphFormatError(path, "expected a vertex name");
  auto it = index.find(v.get<std::string>());
  if (it == index.end()) throw GraphFormatError(path, "undeclared vertex '" + v.get<std::string>() + "'");
  return it->second;
}

}  // namespace

FeynmanGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphFormatError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw GraphFormatError("$", "expected an object");

  const json& verts = member(doc, "vertices", "$");
  if (!verts.is_array()) throw GraphFormatError("$.vertices", "expected an array");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string path = "$.vertices[" + std::to_string(i) + "]";
    if (!verts[i].is_string()) throw GraphFormatError(path, "expected a string");
    const auto name = verts[i].get<std::string>();
    if (!index.emplace(name, names.size()).second) throw GraphFormatError(path, "duplicate vertex '" + name + "'");
    names.push_back(name);
  }

  const json& edges_json = member(doc, "edges", "$");
  if (!edges_json.is_array()) throw GraphFormatError("$.edges", "expected an array");
  std::vector<Edge> edges;
  std::map<EdgeId, std::size_t> seen_ids;
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    const json& e = edges_json[i];
    const json& id = member(e, "id", path);
    if (!id.is_number_integer() || id.get<long long>() <= 0) throw GraphFormatError(path + ".id", "expected a positive integer");
    const auto edge_id = static_cast<EdgeId>(id.get<long long>());
    if (!seen_ids.emplace(edge_id, i).second) throw GraphFormatError(path + ".id", "duplicate edge id " + std::to_string(edge_id));
    const json& ends = member(e, "ends", path);
    if (!ends.is_array() || ends.size() != 2) throw GraphFormatError(path + ".ends", "expected two vertex names");
    Edge edge;
    edge.id = edge_id;
    edge.ends = {vertex_ref(ends[0], index, path + ".ends[0]"), vertex_ref(ends[1], index, path + ".ends[1]")};
    if (e.contains("mass_sq")) {
      edge.mass_sq = rational_value(e["mass_sq"], path + ".mass_sq");
      if (edge.mass_sq < 0) throw GraphFormatError(path + ".mass_sq", "squared mass must be nonnegative");
    }
    edges.push_back(std::move(edge));
  }

  std::vector<ExternalLeg> legs;
  if (doc.contains("legs")) {
    const json& legs_json = doc["legs"];
    if (!legs_json.is_array()) throw GraphFormatError("$.legs", "expected an array");
    for (std::size_t i = 0; i < legs_json.size(); ++i) {
      const std::string path = "$.legs[" + std::to_string(i) + "]";
      const json& l = legs_json[i];
      ExternalLeg leg;
      leg.vertex = vertex_ref(member(l, "vertex", path), index, path + ".vertex");
      const json& mom = member(l, "momentum", path);
      if (!mom.is_array() || mom.size() != 4) throw GraphFormatError(path + ".momentum", "expected four components");
      for (std::size_t k = 0; k < 4; ++k) {
        leg.momentum[k] = rational_value(mom[k], path + ".momentum[" + std::to_string(k) + "]");
      }
      legs.push_back(std::move(leg));
    }
  }
  return FeynmanGraph(std::move(names), std::move(edges), std::move(legs));
}

FeynmanGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

std::string graph_to_json(const FeynmanGraph& g) {
  json doc;
  doc["vertices"] = g.vertices();
  doc["edges"] = json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"id", e.id},
                            {"ends", {g.vertices()[e.ends[0]], g.vertices()[e.ends[1]]}},
                            {"mass_sq", to_string(e.mass_sq)}});
  }
  doc["legs"] = json::array();
  for (const auto& leg : g.legs()) {
    json mom = json::array();
    for (const auto& c : leg.momentum) mom.push_back(to_string(c));
    doc["legs"].push_back({{"vertex", g.vertices()[leg.vertex]}, {"momentum", mom}});
  }
  return doc.dump(2);
}

}  // namespace feynman
