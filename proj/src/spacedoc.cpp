#include "convkit/spacedoc.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace convkit {

using nlohmann::json;

const DocMap& SpaceDoc::map(const std::string& name) const {
  for (const DocMap& m : maps)
    if (m.name == name) return m;
  throw doc_error("", "no map named '" + name + "'");
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw doc_error(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw doc_error("byte " + std::to_string(e.byte), "invalid JSON");
  }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw doc_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw doc_error(where, "missing field \"" + key + "\"");
  return *it;
}

std::string as_name(const json& v, const std::string& where) {
  if (!v.is_string()) throw doc_error(where, "expected a point name");
  return v.get<std::string>();
}

int point_index(const GroundSet& g, const json& v, const std::string& where) {
  std::string name = as_name(v, where);
  int i = g.index_of(name);
  if (i < 0) throw doc_error(where, "unknown point '" + name + "'");
  return i;
}

GroundSet ground_from(const json& doc) {
  const json& pts = field(doc, "points", "");
  if (!pts.is_array() || pts.empty()) throw doc_error("/points", "expected a nonempty list of names");
  if (pts.size() > static_cast<std::size_t>(max_ground_size))
    throw doc_error("/points", "at most 16 points are supported");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::string where = "/points/" + std::to_string(i);
    std::string n = as_name(pts[i], where);
    if (n.empty()) throw doc_error(where, "empty point name");
    if (!seen.insert(n).second) throw doc_error(where, "duplicate point '" + n + "'");
    names.push_back(n);
  }
  return GroundSet(std::move(names));
}

SpaceDoc space_doc_from(const json& doc, const std::filesystem::path& base_dir, int depth) {
  if (depth > 8) throw doc_error("", "map targets nested too deeply");
  GroundSet g = ground_from(doc);
  std::vector<Subset> l(static_cast<std::size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x) l[static_cast<std::size_t>(x)] = Subset::singleton(x);
  if (doc.contains("pointlim")) {
    const json& pl = doc["pointlim"];
    if (!pl.is_object()) throw doc_error("/pointlim", "expected an object");
    for (auto it = pl.begin(); it != pl.end(); ++it) {
      std::string where = "/pointlim/" + it.key();
      int x = g.index_of(it.key());
      if (x < 0) throw doc_error(where, "unknown point '" + it.key() + "'");
      if (!it->is_array()) throw doc_error(where, "expected a list of names");
      Subset s;
      for (std::size_t i = 0; i < it->size(); ++i) s |= Subset::singleton(point_index(g, (*it)[i], where + "/" + std::to_string(i)));
      if (!s.contains(x)) throw doc_error(where, "not centered: '" + it.key() + "' is missing from its own limit set");
      l[static_cast<std::size_t>(x)] = s;
    }
  }
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "points" && it.key() != "pointlim" && it.key() != "maps")
      throw doc_error("/" + it.key(), "unknown field");

  SpaceDoc out{FiniteSpace(g, std::move(l)), {}};
  if (!doc.contains("maps")) return out;
  const json& maps = doc["maps"];
  if (!maps.is_array()) throw doc_error("/maps", "expected a list");
  std::set<std::string> names;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::string where = "/maps/" + std::to_string(i);
    const json& m = maps[i];
    std::string name = as_name(field(m, "name", where), where + "/name");
    if (!names.insert(name).second) throw doc_error(where + "/name", "duplicate map '" + name + "'");
    const json& to = field(m, "to", where);
    std::shared_ptr<const SpaceDoc> target;
    if (to.is_string()) {
      std::filesystem::path p = base_dir / to.get<std::string>();
      std::string text = read_file(p);
      try {
        target = std::make_shared<const SpaceDoc>(space_doc_from(parse_json(text), p.parent_path(), depth + 1));
      } catch (const doc_error& e) {
        throw doc_error(where + "/to", p.string() + ": " + e.what());
      }
    } else if (to.is_object()) {
      try {
        target = std::make_shared<const SpaceDoc>(space_doc_from(to, base_dir, depth + 1));
      } catch (const doc_error& e) {
        throw doc_error(where + "/to" + e.where(), std::string(e.what()).substr(e.where().empty() ? 0 : e.where().size() + 2));
      }
    } else {
      throw doc_error(where + "/to", "expected a file name or an inline document");
    }
    const GroundSet& cod = target->space.ground();
    const json& graph = field(m, "graph", where);
    if (!graph.is_object()) throw doc_error(where + "/graph", "expected an object");
    std::vector<Subset> rows(static_cast<std::size_t>(g.size()));
    for (auto it = graph.begin(); it != graph.end(); ++it) {
      std::string gw = where + "/graph/" + it.key();
      int x = g.index_of(it.key());
      if (x < 0) throw doc_error(gw, "unknown point '" + it.key() + "'");
      if (it->is_array()) {
        for (std::size_t k = 0; k < it->size(); ++k)
          rows[static_cast<std::size_t>(x)] |= Subset::singleton(point_index(cod, (*it)[k], gw + "/" + std::to_string(k)));
      } else {
        rows[static_cast<std::size_t>(x)] = Subset::singleton(point_index(cod, *it, gw));
      }
    }
    out.maps.push_back({name, Relation(g, cod, std::move(rows)), std::move(target)});
  }
  return out;
}

json names_of(const GroundSet& g, Subset s) {
  json arr = json::array();
  for_each_element(s, [&](int i) { arr.push_back(g.name(i)); });
  return arr;
}

json space_json(const FiniteSpace& s) {
  json doc;
  doc["points"] = s.ground().names();
  json pl = json::object();
  for (int x = 0; x < s.size(); ++x) pl[s.ground().name(x)] = names_of(s.ground(), s.pointlim(x));
  doc["pointlim"] = pl;
  return doc;
}

json relation_graph(const Relation& r) {
  json graph = json::object();
  for (int x = 0; x < r.domain().size(); ++x) {
    Subset row = r.row(x);
    if (row.size() == 1 && r.is_map())
      graph[r.domain().name(x)] = r.codomain().name(row.first());
    else
      graph[r.domain().name(x)] = names_of(r.codomain(), row);
  }
  return graph;
}

json doc_json(const SpaceDoc& doc) {
  json j = space_json(doc.space);
  if (doc.maps.empty()) return j;
  json maps = json::array();
  for (const DocMap& m : doc.maps)
    maps.push_back({{"name", m.name}, {"to", doc_json(*m.target)}, {"graph", relation_graph(m.graph)}});
  j["maps"] = maps;
  return j;
}

struct CascadeBuilder {
  const GroundSet& ground;
  std::vector<CascadeNode> nodes;
  std::vector<int> labels;

  int add(const json& node, const std::string& where, bool root) {
    if (!node.is_object()) throw doc_error(where, "expected a cascade node");
    int self = static_cast<int>(nodes.size());
    if (self >= max_cascade_nodes) throw doc_error(where, "cascade has more than 31 nodes");
    nodes.emplace_back();
    labels.push_back(0);
    if (node.contains("label")) {
      if (root) throw doc_error(where + "/label", "the estuary carries no label");
      labels[static_cast<std::size_t>(self)] = point_index(ground, node["label"], where + "/label");
    } else if (!root && !node.contains("children")) {
      throw doc_error(where, "maximal node without a label");
    }
    if (!node.contains("children")) return self;
    const json& ch = node["children"];
    if (!ch.is_array() || ch.empty()) throw doc_error(where + "/children", "expected a nonempty list");
    if (ch.size() > 31) throw doc_error(where + "/children", "too many children");
    for (std::size_t i = 0; i < ch.size(); ++i) {
      int c = add(ch[i], where + "/children/" + std::to_string(i), false);
      nodes[static_cast<std::size_t>(self)].children.push_back(c);
    }
    const json& f = field(node, "filter", where);
    if (!f.is_array()) throw doc_error(where + "/filter", "expected a list of child positions");
    Subset k;
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::string fw = where + "/filter/" + std::to_string(i);
      if (!f[i].is_number_integer()) throw doc_error(fw, "expected a child position");
      int pos = f[i].get<int>();
      if (pos < 0 || pos >= static_cast<int>(ch.size())) throw doc_error(fw, "no child at position " + std::to_string(pos));
      k |= Subset::singleton(pos);
    }
    nodes[static_cast<std::size_t>(self)].filter = k;
    return self;
  }
};

json cascade_node_json(const Multifilter& phi, int v) {
  json node = json::object();
  if (v != 0) node["label"] = phi.ground().name(phi.label(v));
  const CascadeNode& nd = phi.cascade().node(v);
  if (nd.children.empty()) return node;
  json f = json::array();
  for_each_element(nd.filter, [&](int i) { f.push_back(i); });
  node["filter"] = f;
  json ch = json::array();
  for (int c : nd.children) ch.push_back(cascade_node_json(phi, c));
  node["children"] = ch;
  return node;
}

}  // namespace

SpaceDoc parse_space_doc(const std::string& text, const std::filesystem::path& base_dir) {
  return space_doc_from(parse_json(text), base_dir, 0);
}

SpaceDoc load_space_doc(const std::filesystem::path& path) {
  return parse_space_doc(read_file(path), path.parent_path());
}

std::string dump_space_doc(const SpaceDoc& doc, int indent) { return doc_json(doc).dump(indent); }

std::string dump_space(const FiniteSpace& s) { return space_json(s).dump(); }

std::string dump_map_doc(const FiniteSpace& xi, const FiniteSpace& tau, const Relation& f, const std::string& name) {
  json j = space_json(xi);
  j["maps"] = json::array({{{"name", name}, {"to", space_json(tau)}, {"graph", relation_graph(f)}}});
  return j.dump();
}

Multifilter parse_cascade_doc(const std::string& text) {
  json doc = parse_json(text);
  GroundSet g = ground_from(doc);
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "points" && it.key() != "cascade") throw doc_error("/" + it.key(), "unknown field");
  CascadeBuilder b{g, {}, {}};
  b.add(field(doc, "cascade", ""), "/cascade", true);
  try {
    return Multifilter(Cascade(std::move(b.nodes)), g, std::move(b.labels));
  } catch (const doc_error&) {
    throw;
  } catch (const error& e) {
    throw doc_error("/cascade", e.what());
  }
}

Multifilter load_cascade_doc(const std::filesystem::path& path) { return parse_cascade_doc(read_file(path)); }

std::string dump_cascade_doc(const Multifilter& phi) {
  json j;
  j["points"] = phi.ground().names();
  j["cascade"] = cascade_node_json(phi, 0);
  return j.dump(2);
}

}  // namespace convkit
