#pragma once

// JSON documents for spaces, maps between them and cascades.
//
//   {"points": ["a","b"], "pointlim": {"a": ["a","b"], "b": ["b"]},
//    "maps": [{"name": "f", "to": <document or file name>,
//              "graph": {"a": "0", "b": ["0","1"]}}]}
//
// "pointlim" may omit points whose limit set is just themselves, and every
// listed set must contain its own point. A graph value is a single name for
// a map or a list of names for a relation.
//
//   {"points": [...], "cascade": {"filter": [0,1], "children": [
//       {"label": "a"}, {"label": "b", "filter": [0], "children": [...]}]}}

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "convkit/cascade.hpp"
#include "convkit/space.hpp"

namespace convkit {

/// Malformed input; `where` is a byte offset or a JSON pointer.
class doc_error : public error {
 public:
  doc_error(const std::string& where, const std::string& what)
      : error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct DocMap {
  std::string name;
  Relation graph;
  std::shared_ptr<const struct SpaceDoc> target;
};

struct SpaceDoc {
  FiniteSpace space;
  std::vector<DocMap> maps;

  const DocMap& map(const std::string& name) const;
};

SpaceDoc parse_space_doc(const std::string& text, const std::filesystem::path& base_dir = ".");
SpaceDoc load_space_doc(const std::filesystem::path& path);

/// Serializes with every map target written inline.
std::string dump_space_doc(const SpaceDoc& doc, int indent = 2);
std::string dump_space(const FiniteSpace& s);
/// A two-space document with one map named `name`, for reproducing a
/// harness instance.
std::string dump_map_doc(const FiniteSpace& xi, const FiniteSpace& tau, const Relation& f,
                         const std::string& name = "f");

Multifilter parse_cascade_doc(const std::string& text);
Multifilter load_cascade_doc(const std::filesystem::path& path);
std::string dump_cascade_doc(const Multifilter& phi);

}  // namespace convkit
