#pragma once

#include <string>
#include <vector>

namespace pslens {

struct Violation {
  std::string axiom;
  std::string witness;
};

// Result of a structural check. Violations are data, not failures: an empty
// report means the checked object is valid.
class ValidationReport {
 public:
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string axiom, std::string witness) {
    violations_.push_back({std::move(axiom), std::move(witness)});
  }

  void append(const ValidationReport& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations_) add(prefix + v.axiom, v.witness);
  }

  bool mentions(const std::string& axiom) const {
    for (const auto& v : violations_)
      if (v.axiom == axiom) return true;
    return false;
  }

  std::string to_string() const {
    if (ok()) return "ok\n";
    std::string out;
    for (const auto& v : violations_) out += v.axiom + ": " + v.witness + "\n";
    return out;
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace pslens
