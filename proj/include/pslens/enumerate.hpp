#pragma once

// Enumeration of small finite i-posets for exhaustive sweeps.

#include <string>
#include <vector>

#include "pslens/iposet.hpp"

namespace pslens {

// All partial orders on n labelled points up to isomorphism (1, 1, 2, 5, 16,
// 63 for n = 0..5). Tables carry le only, with id = le and no merge.
std::vector<FiniteTable<int>> enumerate_posets(int n);

enum class IdentityChoice {
  // I = (<=)
  Full,
  // I = (=), plus (Omega, s) for every s when a least element exists
  Minimal,
};

struct GeneratedIPoset {
  std::string name;
  FiniteTable<int> table;  // merge = join wherever the join exists
  bool lower_bounded = false;
  bool duplicable = false;
};

// Every poset with 1..max_n elements, once per identity choice.
std::vector<GeneratedIPoset> generate_iposets(int max_n);

}  // namespace pslens
