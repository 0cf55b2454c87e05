#pragma once

#include <string>
#include <vector>

#include "monolab/system_dims.hpp"

namespace monolab {

// A bipartite cut of a full system: side_a | side_b must partition all
// subsystem indices. Text form "0|1,2".
struct Bipartition {
  std::vector<int> side_a;
  std::vector<int> side_b;

  void validate(const SystemDims& dims) const;
  std::string to_string() const;
  static Bipartition parse(const std::string& text);
};

// Focus party against an ordered list of disjoint partner groups.
// Text form "0|1|2" (singleton partners) or "0|1,2|3".
struct SplitSpec {
  int focus = 0;
  std::vector<std::vector<int>> partners;

  void validate(const SystemDims& dims) const;
  // All partner indices, in partner order.
  std::vector<int> partner_union() const;
  std::string to_string() const;
  static SplitSpec parse(const std::string& text);
  // focus 0, each remaining subsystem its own partner group.
  static SplitSpec one_vs_each(const SystemDims& dims, int focus = 0);
};

}  // namespace monolab
