#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "feynman/graph.hpp"

namespace feynman {

/// Malformed graph document. what() starts with the JSON path of the
/// offending value, e.g. "$.edges[2].mass_sq: invalid rational 'x'".
class GraphFormatError : public GraphError {
 public:
  GraphFormatError(std::string path, const std::string& message)
      : GraphError(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Document layout:
//   {"vertices": ["a", "b"],
//    "edges": [{"id": 1, "ends": ["a", "b"], "mass_sq": "1/2"}],
//    "legs":  [{"vertex": "a", "momentum": ["1", "0", "0", "0"]}]}
// "mass_sq" and "legs" are optional. Rationals are "num/den" or integer
// strings; plain JSON integers are accepted as well.
FeynmanGraph parse_graph_json(std::string_view text);
FeynmanGraph load_graph_file(const std::filesystem::path& path);
std::string graph_to_json(const FeynmanGraph& g);

}  // namespace feynman
