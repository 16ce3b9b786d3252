#include "pslens/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace pslens {

namespace {

using Rel = std::vector<std::vector<bool>>;

std::uint32_t encode(const Rel& r, const std::vector<int>& perm) {
  const std::size_t n = r.size();
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && r[perm[i]][perm[j]]) code |= 1u << (i * n + j);
  return code;
}

std::uint32_t canonical(const Rel& r) {
  std::vector<int> perm(r.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = UINT32_MAX;
  do best = std::min(best, encode(r, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteTable<int>> enumerate_posets(int n) {
  if (n < 0 || n > 5) throw InvalidArgs("enumerate_posets supports 0..5 elements");
  std::vector<FiniteTable<int>> out;
  std::vector<std::pair<int, int>> slots;
  // Every finite poset has a linear extension, so relations below the
  // diagonal are never needed.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint32_t> seen;
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 0);
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    Rel r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask & (1u << k)) r[slots[k].first][slots[k].second] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        if (r[i][j])
          for (int k = 0; k < n; ++k)
            if (r[j][k] && !r[i][k]) {
              transitive = false;
              break;
            }
    if (!transitive || !seen.insert(canonical(r)).second) continue;
    FiniteTable<int> t(elems);
    t.le = r;
    t.id = r;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<GeneratedIPoset> generate_iposets(int max_n) {
  std::vector<GeneratedIPoset> out;
  for (int n = 1; n <= max_n; ++n) {
    auto posets = enumerate_posets(n);
    for (std::size_t k = 0; k < posets.size(); ++k) {
      for (auto choice : {IdentityChoice::Full, IdentityChoice::Minimal}) {
        FiniteTable<int> t = posets[k];
        for (int a = 0; a < n; ++a) {
          bool below_all = true;
          for (int b = 0; b < n; ++b) below_all = below_all && t.le[a][b];
          if (below_all) t.least = a;
        }
        if (choice == IdentityChoice::Minimal) {
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t.id[a][b] = a == b || (t.least && *t.least == static_cast<std::size_t>(a));
        }
        t.enable_merge();
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) (*t.merge)[a][b] = detail::join_index(t, a, b);
        GeneratedIPoset g;
        g.name = "P" + std::to_string(n) + "." + std::to_string(k) +
                 (choice == IdentityChoice::Full ? "/I=le" : "/I=min");
        g.lower_bounded = t.least.has_value();
        g.duplicable = check_duplicable(t).ok();
        g.table = std::move(t);
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace pslens
