#include "pslens/constructions.hpp"

namespace pslens {

namespace {

void expect_inputs(const std::string& kind, const StandardArgs& args, std::size_t n) {
  if (args.inputs.size() != n)
    throw InvalidArgs(kind + " takes " + std::to_string(n) + " i-poset(s), got " +
                      std::to_string(args.inputs.size()));
}

std::string or_default(const std::string& name, const std::string& fallback) {
  return name.empty() ? fallback : name;
}

}  // namespace

FiniteIPoset<std::string> build_standard(const std::string& kind, const StandardArgs& args) {
  if (kind == "discrete") {
    expect_inputs(kind, args, 0);
    if (args.base.empty()) throw InvalidArgs("discrete needs a nonempty base");
    return stringify(discrete(args.base, or_default(args.name, "discrete")));
  }
  if (kind == "powerset") {
    expect_inputs(kind, args, 0);
    return stringify(powerset(args.base, args.include_empty, or_default(args.name, "powerset")));
  }
  if (kind == "lift_omega") {
    expect_inputs(kind, args, 1);
    return stringify(lift_omega(args.inputs[0].iposet()));
  }
  if (kind == "product") {
    expect_inputs(kind, args, 2);
    return stringify(product(args.inputs[0].iposet(), args.inputs[1].iposet()));
  }
  if (kind == "sum") {
    expect_inputs(kind, args, 2);
    return stringify(sum(args.inputs[0].iposet(), args.inputs[1].iposet()));
  }
  if (kind == "restrict") {
    expect_inputs(kind, args, 1);
    return stringify(restrict(args.inputs[0].iposet(), args.predicate, args.name));
  }
  throw InvalidArgs("unknown construction '" + kind + "'");
}

}  // namespace pslens
