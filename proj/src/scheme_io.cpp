#include "schemeconn/scheme_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schemeconn/error.hpp"

namespace schemeconn {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemeError(ErrorKind::ParseError, e.what());
  }
}

int get_int(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer()) {
    throw SchemeError(ErrorKind::ParseError, std::string("missing integer field '") + key + "'");
  }
  return obj[key].get<int>();
}

std::vector<std::vector<int>> get_square(const json& obj, const char* key, int size) {
  if (!obj.contains(key) || !obj[key].is_array() ||
      obj[key].size() != static_cast<std::size_t>(size)) {
    throw SchemeError(ErrorKind::ParseError,
                      std::string("field '") + key + "' must be an array of " +
                          std::to_string(size) + " rows");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(size));
  for (const auto& row : obj[key]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(size)) {
      throw SchemeError(ErrorKind::ParseError, std::string("ragged row in '") + key + "'");
    }
    std::vector<int> r;
    r.reserve(static_cast<std::size_t>(size));
    for (const auto& x : row) {
      if (!x.is_number_integer()) {
        throw SchemeError(ErrorKind::ParseError, std::string("non-integer entry in '") + key + "'");
      }
      r.push_back(x.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

SchemeDescriptor parse_scheme_json(const std::string& text) {
  const json doc = parse_or_throw(text);
  if (!doc.is_object()) throw SchemeError(ErrorKind::ParseError, "scheme file must be an object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SchemeError(ErrorKind::ParseError, "'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  const int v = get_int(doc, "v");
  const int d = get_int(doc, "d");
  if (v < 1 || v > kMaxSchemeVertices) {
    throw SchemeError(ErrorKind::ParseError, "v out of range", std::to_string(v));
  }
  if (d < 0) throw SchemeError(ErrorKind::ParseError, "d must be non-negative");
  const auto rows = get_square(doc, "classes", v);
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(v) * static_cast<std::size_t>(v));
  for (const auto& r : rows)
    for (int c : r) {
      if (c < 0 || c > d) {
        throw SchemeError(ErrorKind::ParseError, "class index outside 0..d", std::to_string(c));
      }
      flat.push_back(c);
    }
  return validate_scheme(RelationTable(v, d, std::move(flat)), std::move(name));
}

std::string scheme_to_json(const SchemeDescriptor& scheme) {
  nlohmann::ordered_json doc;
  doc["name"] = scheme.name();
  doc["v"] = scheme.v();
  doc["d"] = scheme.d();
  doc["classes"] = scheme.table().rows();
  return doc.dump() + "\n";
}

SchemeDescriptor load_scheme(const std::string& path) {
  return parse_scheme_json(read_text_file(path));
}

void save_scheme(const SchemeDescriptor& scheme, const std::string& path) {
  write_text_file(path, scheme_to_json(scheme));
}

GroupTable parse_group_json(const std::string& text) {
  const json doc = parse_or_throw(text);
  const int v = get_int(doc, "v");
  if (v < 1 || v > kMaxGroupOrder) {
    throw SchemeError(ErrorKind::ParseError, "group order out of range", std::to_string(v));
  }
  GroupTable g;
  g.v = v;
  for (const auto& r : get_square(doc, "mul", v)) g.mul.insert(g.mul.end(), r.begin(), r.end());
  return g;
}

GroupTable load_group(const std::string& path) { return parse_group_json(read_text_file(path)); }

Graph parse_graph_json(const std::string& text) {
  const json doc = parse_or_throw(text);
  const int n = get_int(doc, "n");
  if (n < 1 || n > kMaxSchemeVertices) throw SchemeError(ErrorKind::ParseError, "n out of range");
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw SchemeError(ErrorKind::ParseError, "missing 'edges' array");
  }
  Graph g(n);
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw SchemeError(ErrorKind::ParseError, "edge must be a pair of integers");
    }
    const int u = e[0].get<int>(), w = e[1].get<int>();
    if (u < 0 || w < 0 || u >= n || w >= n || u == w) {
      throw SchemeError(ErrorKind::ParseError, "bad edge endpoints");
    }
    g.add_edge(u, w);
  }
  return g;
}

Graph load_graph(const std::string& path) { return parse_graph_json(read_text_file(path)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemeError(ErrorKind::ParseError, "cannot open file", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SchemeError(ErrorKind::InvalidArgument, "cannot write file", path);
  out << text;
}

}  // namespace schemeconn
