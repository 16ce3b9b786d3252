#include "pslens/laws.hpp"

namespace pslens {

namespace {

struct LawName {
  LawId id;
  const char* name;
};

constexpr LawName kNames[] = {
    {LawId::ClassicalConsistency, "classical-consistency"},
    {LawId::ClassicalAcceptability, "classical-acceptability"},
    {LawId::Stability, "stability"},
    {LawId::PsConsistency, "ps-consistency"},
    {LawId::PsAcceptability, "ps-acceptability"},
    {LawId::PsStability, "ps-stability"},
    {LawId::WeakWb, "weak-wb"},
    {LawId::Wb, "wb"},
    {LawId::GetMonotone, "get-monotone"},
    {LawId::ViewStability, "view-stability"},
    {LawId::PutDeterminesGet, "put-determines-get"},
    {LawId::WPutGet, "wputget"},
    {LawId::UAcceptability, "u-acceptability"},
    {LawId::UConsistency, "u-consistency"},
    {LawId::PutPut, "putput"},
};

}  // namespace

std::string to_string(LawId law) {
  for (const auto& n : kNames)
    if (n.id == law) return n.name;
  return "?";
}

std::optional<LawId> parse_law(const std::string& name) {
  for (const auto& n : kNames)
    if (name == n.name) return n.id;
  return std::nullopt;
}

const std::vector<LawId>& core_laws() {
  static const std::vector<LawId> laws = {
      LawId::ClassicalConsistency, LawId::ClassicalAcceptability, LawId::Stability,     LawId::PsConsistency,
      LawId::PsAcceptability,      LawId::PsStability,            LawId::WeakWb,        LawId::Wb,
      LawId::GetMonotone,          LawId::ViewStability,          LawId::PutDeterminesGet, LawId::WPutGet,
  };
  return laws;
}

const std::vector<LawId>& all_laws() {
  static const std::vector<LawId> laws = [] {
    std::vector<LawId> out;
    for (const auto& n : kNames) out.push_back(n.id);
    return out;
  }();
  return laws;
}

}  // namespace pslens
