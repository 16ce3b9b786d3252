#pragma once

// Partial-state lenses: a total get and a partial put between two i-posets.

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pslens/errors.hpp"
#include "pslens/iposet.hpp"

namespace pslens {

enum class FailureReason { MergeConflict, OutOfDomain, GuardFailed };

inline std::string to_string(FailureReason r) {
  switch (r) {
    case FailureReason::MergeConflict: return "MergeConflict";
    case FailureReason::OutOfDomain: return "OutOfDomain";
    case FailureReason::GuardFailed: return "GuardFailed";
  }
  return "?";
}

struct PutFailure {
  FailureReason reason;
  std::string witness;
  // Outermost combinator first, e.g. {"compose[2]", "product.left"}.
  std::vector<std::string> stages;

  std::string describe() const {
    std::string out = to_string(reason);
    if (!stages.empty()) {
      out += " at ";
      for (std::size_t i = 0; i < stages.size(); ++i) out += (i ? "/" : "") + stages[i];
    }
    return out + ": " + witness;
  }
};

// Either the updated source or a structured failure.
template <class T>
class PutResult {
 public:
  PutResult(T value) : data_(std::move(value)) {}
  PutResult(PutFailure failure) : data_(std::move(failure)) {}

  static PutResult fail(FailureReason reason, std::string witness) {
    return PutResult(PutFailure{reason, std::move(witness), {}});
  }

  bool defined() const { return data_.index() == 0; }
  explicit operator bool() const { return defined(); }

  const T& value() const {
    if (!defined()) throw Error("put is undefined: " + failure().describe());
    return std::get<0>(data_);
  }
  const PutFailure& failure() const { return std::get<1>(data_); }

  // Re-wraps a failure with an outer stage tag.
  template <class U>
  PutResult<U> propagate(const std::string& stage) const {
    PutFailure f = failure();
    f.stages.insert(f.stages.begin(), stage);
    return PutResult<U>(std::move(f));
  }

 private:
  std::variant<T, PutFailure> data_;
};

template <class S, class V>
class PSLens {
 public:
  using Get = std::function<V(const S&)>;
  using Put = std::function<PutResult<S>(const S&, const V&)>;

  PSLens(std::string name, IPoset<S> source, IPoset<V> view, Get get, Put put)
      : impl_(std::make_shared<const Impl>(
            Impl{std::move(name), std::move(source), std::move(view), std::move(get), std::move(put)})) {}

  const std::string& name() const { return impl_->name; }
  const IPoset<S>& source() const { return impl_->source; }
  const IPoset<V>& view() const { return impl_->view; }

  V get(const S& s) const { return impl_->get(s); }
  PutResult<S> put(const S& s, const V& v) const { return impl_->put(s, v); }

 private:
  struct Impl {
    std::string name;
    IPoset<S> source;
    IPoset<V> view;
    Get get;
    Put put;
  };
  std::shared_ptr<const Impl> impl_;
};

template <class S, class V>
std::string put_text(const S& s, const V& v) {
  return "put(" + show(s) + ", " + show(v) + ")";
}

}  // namespace pslens
