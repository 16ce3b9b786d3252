#pragma once

// Exhaustive law checking over finite carriers or supplied finite samples.
//
// A LawChecker tabulates get, put and both domains' relations once, then
// evaluates each law's quantified formula over element indices. Every
// failing report carries a witness that recheck() can re-substitute into the
// formula using the lens and i-posets directly, independent of the tables.

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pslens/combinators.hpp"
#include "pslens/errors.hpp"
#include "pslens/lens.hpp"

namespace pslens {

enum class LawId {
  ClassicalConsistency,
  ClassicalAcceptability,
  Stability,
  PsConsistency,
  PsAcceptability,
  PsStability,
  WeakWb,
  Wb,
  GetMonotone,
  ViewStability,
  PutDeterminesGet,
  WPutGet,
  // Initiator laws, stated on the lens: get plays the embedding, put the apply.
  UAcceptability,
  UConsistency,
  // Informational only; never part of well-behavedness.
  PutPut,
};

std::string to_string(LawId law);
std::optional<LawId> parse_law(const std::string& name);
// The twelve laws of the LawId contract, in declaration order.
const std::vector<LawId>& core_laws();
const std::vector<LawId>& all_laws();

template <class S, class V>
struct Universe {
  std::vector<S> sources;
  std::vector<V> views;
  bool exhaustive = false;
  std::string description;

  static Universe of_carriers(const PSLens<S, V>& lens) {
    Universe u{lens.source().elements(), lens.view().elements(), true, {}};
    u.description = "exhaustive: " + std::to_string(u.sources.size()) + " sources x " +
                    std::to_string(u.views.size()) + " views";
    return u;
  }

  static Universe sampled(std::vector<S> sources, std::vector<V> views) {
    Universe u{std::move(sources), std::move(views), false, {}};
    u.description = "sampled: " + std::to_string(u.sources.size()) + " sources x " +
                    std::to_string(u.views.size()) + " views";
    return u;
  }
};

template <class S, class V>
struct Witness {
  std::vector<S> sources;
  std::vector<V> views;

  std::string to_string() const {
    std::string out = "sources=[";
    for (std::size_t i = 0; i < sources.size(); ++i) out += (i ? ", " : "") + show(sources[i]);
    out += "] views=[";
    for (std::size_t i = 0; i < views.size(); ++i) out += (i ? ", " : "") + show(views[i]);
    return out + "]";
  }
};

template <class S, class V>
struct LawReport {
  LawId law;
  bool holds = true;
  // For weak-wb / wb: which conjunct failed. Equal to law otherwise.
  LawId failed_law;
  std::optional<Witness<S, V>> counterexample;
  std::string universe;

  std::string to_string() const {
    std::string out = pslens::to_string(law) + ": ";
    if (holds) return out + "holds (" + universe + ")";
    out += "fails";
    if (failed_law != law) out += " via " + pslens::to_string(failed_law);
    if (counterexample) out += " with " + counterexample->to_string();
    return out + " (" + universe + ")";
  }
};

namespace detail {

// Element -> index lookup; ordered types get a map, others a linear scan.
template <class T>
class Indexer {
 public:
  std::optional<std::size_t> find(const T& x) const {
    if constexpr (std::totally_ordered<T>) {
      auto it = map_.find(x);
      if (it == map_.end()) return std::nullopt;
      return it->second;
    } else {
      for (std::size_t i = 0; i < items_.size(); ++i)
        if (items_[i] == x) return i;
      return std::nullopt;
    }
  }

  std::size_t intern(const T& x) {
    if (auto i = find(x)) return *i;
    items_.push_back(x);
    if constexpr (std::totally_ordered<T>) map_.emplace(x, items_.size() - 1);
    return items_.size() - 1;
  }

  const T& at(std::size_t i) const { return items_[i]; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<T> items_;
  std::conditional_t<std::totally_ordered<T>, std::map<T, std::size_t>, int> map_{};
};

class BitMatrix {
 public:
  void resize(std::size_t n) {
    n_ = n;
    bits_.assign(n * n, 0);
  }
  bool operator()(std::size_t a, std::size_t b) const { return bits_[a * n_ + b]; }
  void set(std::size_t a, std::size_t b, bool v) { bits_[a * n_ + b] = v; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace detail

template <class S, class V>
class LawChecker {
 public:
  static constexpr int kUndefined = -1;

  LawChecker(PSLens<S, V> lens, Universe<S, V> universe) : lens_(std::move(lens)), universe_(std::move(universe)) {
    for (const auto& s : universe_.sources) {
      if (!lens_.source().contains(s))
        throw UniverseMismatch(show(s) + " is not in the source domain of " + lens_.name());
      src_.intern(s);
    }
    for (const auto& v : universe_.views) {
      if (!lens_.view().contains(v))
        throw UniverseMismatch(show(v) + " is not in the view domain of " + lens_.name());
      view_.intern(v);
    }
    ns_ = src_.size();
    nv_ = view_.size();
    if (universe_.sources.size() != ns_ || universe_.views.size() != nv_)
      throw UniverseMismatch("universe contains duplicate elements");

    for (std::size_t s = 0; s < ns_; ++s) get_.push_back(static_cast<int>(view_.intern(lens_.get(src_.at(s)))));
    nv_put_ = view_.size();
    put_.assign(ns_ * nv_put_, kUndefined);
    for (std::size_t s = 0; s < ns_; ++s)
      for (std::size_t v = 0; v < nv_put_; ++v) {
        auto r = lens_.put(src_.at(s), view_.at(v));
        if (r) put_[s * nv_put_ + v] = static_cast<int>(src_.intern(r.value()));
      }
    for (std::size_t s = ns_; s < src_.size(); ++s)
      get_.push_back(static_cast<int>(view_.intern(lens_.get(src_.at(s)))));
    build_relations();
  }

  const PSLens<S, V>& lens() const { return lens_; }
  const Universe<S, V>& universe() const { return universe_; }

  LawReport<S, V> check(LawId law) {
    switch (law) {
      case LawId::WeakWb: {
        auto r = check(LawId::PsAcceptability);
        if (r.holds) r = check(LawId::PsConsistency);
        return relabel(std::move(r), law);
      }
      case LawId::Wb: {
        auto r = check(LawId::WeakWb);
        if (r.holds) r = check(LawId::PsStability);
        return relabel(std::move(r), law);
      }
      default:
        break;
    }
    LawReport<S, V> rep{law, true, law, std::nullopt, universe_.description};
    std::optional<Witness<S, V>> w;
    switch (law) {
      case LawId::ClassicalConsistency: w = classical_consistency(); break;
      case LawId::ClassicalAcceptability: w = classical_acceptability(); break;
      case LawId::Stability: w = stability(); break;
      case LawId::PsConsistency: w = ps_consistency(); break;
      case LawId::PsAcceptability: w = ps_acceptability(); break;
      case LawId::PsStability: w = ps_stability(); break;
      case LawId::GetMonotone: w = get_monotone(); break;
      case LawId::ViewStability: w = view_stability(); break;
      case LawId::PutDeterminesGet: w = put_determines_get(); break;
      case LawId::WPutGet: w = wputget(); break;
      case LawId::UAcceptability: w = u_acceptability(); break;
      case LawId::UConsistency: w = u_consistency(); break;
      case LawId::PutPut: w = put_put(); break;
      default: break;
    }
    if (w) {
      rep.holds = false;
      rep.counterexample = std::move(w);
    }
    return rep;
  }

 private:
  using W = std::optional<Witness<S, V>>;

  static LawReport<S, V> relabel(LawReport<S, V> r, LawId law) {
    r.law = law;
    if (r.holds) r.failed_law = law;
    return r;
  }

  void build_relations() {
    const std::size_t n = src_.size(), m = view_.size();
    le_s_.resize(n);
    id_s_.resize(n);
    le_v_.resize(m);
    id_v_.resize(m);
    const auto& P = lens_.source();
    const auto& Q = lens_.view();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        le_s_.set(a, b, P.le(src_.at(a), src_.at(b)));
        id_s_.set(a, b, P.identical(src_.at(a), src_.at(b)));
      }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        le_v_.set(a, b, Q.le(view_.at(a), view_.at(b)));
        id_v_.set(a, b, Q.identical(view_.at(a), view_.at(b)));
      }
  }

  // put on indices. Entries outside the dense table are computed lazily;
  // their results may lie beyond the relation tables and are only ever
  // compared for equality.
  int put(std::size_t s, std::size_t v) {
    if (s < ns_ && v < nv_put_) return put_[s * nv_put_ + v];
    const auto key = (static_cast<std::uint64_t>(s) << 32) | v;
    auto it = lazy_put_.find(key);
    if (it != lazy_put_.end()) return it->second;
    auto r = lens_.put(src_.at(s), view_.at(v));
    int out = kUndefined;
    if (r) {
      auto existing = src_.find(r.value());
      out = existing ? static_cast<int>(*existing) : static_cast<int>(src_.intern(r.value()));
    }
    lazy_put_.emplace(key, out);
    return out;
  }

  // get for any interned source (including lazily added ones).
  std::size_t get(std::size_t s) {
    while (get_.size() < src_.size()) get_.push_back(static_cast<int>(view_.intern(lens_.get(src_.at(get_.size())))));
    return static_cast<std::size_t>(get_[s]);
  }

  Witness<S, V> wit(std::initializer_list<std::size_t> ss, std::initializer_list<std::size_t> vs) const {
    Witness<S, V> w;
    for (auto s : ss) w.sources.push_back(src_.at(s));
    for (auto v : vs) w.views.push_back(view_.at(v));
    return w;
  }

  W classical_consistency() {
    for (std::size_t s = 0; s < ns_; ++s)
      for (std::size_t v = 0; v < nv_; ++v) {
        int p = put(s, v);
        if (p != kUndefined && get(p) != v) return wit({s, std::size_t(p)}, {v});
      }
    return std::nullopt;
  }

  W classical_acceptability() {
    for (std::size_t s = 0; s < ns_; ++s) {
      const auto g = get(s);
      if (put(s, g) != static_cast<int>(s)) return wit({s}, {g});
    }
    return std::nullopt;
  }

  W stability() {
    for (std::size_t s0 = 0; s0 < ns_; ++s0)
      for (std::size_t v = 0; v < nv_; ++v) {
        int s = put(s0, v);
        if (s == kUndefined) continue;
        if (put(s, get(s)) != s) return wit({s0, std::size_t(s)}, {v});
      }
    return std::nullopt;
  }

  W ps_consistency() {
    for (std::size_t s = 0; s < ns_; ++s)
      for (std::size_t v = 0; v < nv_; ++v) {
        int p = put(s, v);
        if (p == kUndefined) continue;
        for (std::size_t s1 = 0; s1 < ns_; ++s1)
          if (le_s_(p, s1) && !le_v_(v, get(s1))) return wit({s, s1}, {v});
      }
    return std::nullopt;
  }

  W ps_acceptability() {
    for (std::size_t s = 0; s < ns_; ++s) {
      const auto g = get(s);
      for (std::size_t v = 0; v < nv_; ++v) {
        if (!id_v_(v, g)) continue;
        int p = put(s, v);
        if (p == kUndefined || !id_s_(p, s)) return wit({s}, {v});
      }
    }
    return std::nullopt;
  }

  // put(s0, v) = s <= s', v <= v'' ∈ I_{get s'}, put(s', v'') = s''  ==>  s <= s''.
  W ps_stability() {
    // For each put result s: the views v reaching it, with one origin s0 each.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> reach;  // s -> [(v, s0)]
    for (std::size_t s0 = 0; s0 < ns_; ++s0)
      for (std::size_t v = 0; v < nv_; ++v) {
        int s = put(s0, v);
        if (s == kUndefined) continue;
        if (reach.size() <= std::size_t(s)) reach.resize(s + 1);
        auto& lst = reach[s];
        bool seen = false;
        for (auto& e : lst) seen = seen || e.first == v;
        if (!seen) lst.emplace_back(v, s0);
      }
    // For each s': the identical views v'' that put defines, with s''.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> idput(ns_);
    for (std::size_t s1 = 0; s1 < ns_; ++s1) {
      const auto g = get(s1);
      for (std::size_t v2 = 0; v2 < nv_; ++v2) {
        if (!id_v_(v2, g)) continue;
        int s2 = put(s1, v2);
        if (s2 != kUndefined) idput[s1].emplace_back(v2, std::size_t(s2));
      }
    }
    for (std::size_t s = 0; s < reach.size(); ++s) {
      if (reach[s].empty()) continue;
      for (std::size_t s1 = 0; s1 < ns_; ++s1) {
        if (!le_s_(s, s1)) continue;
        for (auto [v2, s2] : idput[s1]) {
          if (le_s_(s, s2)) continue;
          for (auto [v, s0] : reach[s])
            if (le_v_(v, v2)) return wit({s0, s, s1, s2}, {v, v2});
        }
      }
    }
    return std::nullopt;
  }

  W get_monotone() {
    for (std::size_t a = 0; a < ns_; ++a)
      for (std::size_t b = 0; b < ns_; ++b)
        if (le_s_(a, b) && !le_v_(get(a), get(b))) return wit({a, b}, {});
    return std::nullopt;
  }

  W view_stability() {
    for (std::size_t s = 0; s < ns_; ++s) {
      const auto g = get(s);
      int p = put(s, g);
      if (p == kUndefined || get(p) != g) return wit({s}, {g});
    }
    return std::nullopt;
  }

  W put_determines_get() {
    for (std::size_t s = 0; s < ns_; ++s) {
      std::vector<std::size_t> vs;
      for (std::size_t v = 0; v < nv_; ++v)
        for (std::size_t s0 = 0; s0 < ns_; ++s0) {
          int p = put(s0, v);
          if (p != kUndefined && le_s_(p, s)) {
            vs.push_back(v);
            break;
          }
        }
      std::optional<std::size_t> max;
      for (auto m : vs) {
        bool top = true;
        for (auto x : vs) top = top && le_v_(x, m);
        if (top) max = m;
      }
      if (!max || *max != get(s)) return wit({s}, {get(s)});
    }
    return std::nullopt;
  }

  W wputget() {
    for (std::size_t s0 = 0; s0 < ns_; ++s0)
      for (std::size_t v = 0; v < nv_; ++v) {
        int s = put(s0, v);
        if (s == kUndefined) continue;
        if (put(s0, get(s)) != s) return wit({s0, std::size_t(s)}, {v});
      }
    return std::nullopt;
  }

  W u_acceptability() {
    for (std::size_t s = 0; s < ns_; ++s) {
      const auto g = get(s);
      for (std::size_t v = 0; v < nv_; ++v)
        if (id_v_(v, g) && put(s, v) != static_cast<int>(s)) return wit({s}, {v});
    }
    return std::nullopt;
  }

  W u_consistency() {
    for (std::size_t s = 0; s < ns_; ++s)
      for (std::size_t v = 0; v < nv_; ++v) {
        int p = put(s, v);
        if (p != kUndefined && !le_v_(v, get(p))) return wit({s, std::size_t(p)}, {v});
      }
    return std::nullopt;
  }

  W put_put() {
    for (std::size_t s0 = 0; s0 < ns_; ++s0)
      for (std::size_t v1 = 0; v1 < nv_; ++v1) {
        int s1 = put(s0, v1);
        if (s1 == kUndefined) continue;
        for (std::size_t v2 = 0; v2 < nv_; ++v2) {
          int s2 = put(s1, v2);
          if (s2 == kUndefined) continue;
          if (put(s0, v2) != s2) return wit({s0, std::size_t(s1), std::size_t(s2)}, {v1, v2});
        }
      }
    return std::nullopt;
  }

  PSLens<S, V> lens_;
  Universe<S, V> universe_;
  detail::Indexer<S> src_;
  detail::Indexer<V> view_;
  std::size_t ns_ = 0, nv_ = 0, nv_put_ = 0;
  std::vector<int> get_;
  std::vector<int> put_;
  std::unordered_map<std::uint64_t, int> lazy_put_;
  detail::BitMatrix le_s_, id_s_, le_v_, id_v_;
};

template <class S, class V>
LawReport<S, V> check_law(const PSLens<S, V>& lens, LawId law, const Universe<S, V>& universe) {
  LawChecker<S, V> checker(lens, universe);
  return checker.check(law);
}

template <class S, class V>
LawReport<S, V> check_law(const PSLens<S, V>& lens, LawId law) {
  return check_law(lens, law, Universe<S, V>::of_carriers(lens));
}

template <class A, class B, class C>
LawReport<A, C> check_composition_closure(const PSLens<A, B>& first, const PSLens<B, C>& second,
                                          const Universe<A, C>& universe) {
  return check_law(compose(first, second), LawId::Wb, universe);
}

template <class A, class B, class C>
LawReport<A, C> check_composition_closure(const PSLens<A, B>& first, const PSLens<B, C>& second) {
  auto l = compose(first, second);
  return check_law(l, LawId::Wb, Universe<A, C>::of_carriers(l));
}

// Re-substitutes a report's witness into the failed law's formula, using the
// lens and domains directly. True iff the formula is false at the witness.
// put-determines-get quantifies over the universe again, hence the argument.
template <class S, class V>
bool recheck(const PSLens<S, V>& lens, const LawReport<S, V>& report, const Universe<S, V>& universe) {
  if (report.holds || !report.counterexample) return false;
  const auto& w = *report.counterexample;
  const auto& P = lens.source();
  const auto& Q = lens.view();
  auto src = [&](std::size_t i) -> const S& {
    if (i >= w.sources.size()) throw InvalidArgs("witness has too few sources");
    return w.sources[i];
  };
  auto view = [&](std::size_t i) -> const V& {
    if (i >= w.views.size()) throw InvalidArgs("witness has too few views");
    return w.views[i];
  };
  auto put_is = [&](const S& s, const V& v, const S& expected) {
    auto r = lens.put(s, v);
    return r.defined() && r.value() == expected;
  };
  switch (report.failed_law) {
    case LawId::ClassicalConsistency:
      return put_is(src(0), view(0), src(1)) && !(lens.get(src(1)) == view(0));
    case LawId::ClassicalAcceptability:
      return view(0) == lens.get(src(0)) && !put_is(src(0), view(0), src(0));
    case LawId::Stability:
      return put_is(src(0), view(0), src(1)) && !put_is(src(1), lens.get(src(1)), src(1));
    case LawId::PsConsistency: {
      auto r = lens.put(src(0), view(0));
      return r.defined() && P.le(r.value(), src(1)) && !Q.le(view(0), lens.get(src(1)));
    }
    case LawId::PsAcceptability: {
      if (!Q.identical(view(0), lens.get(src(0)))) return false;
      auto r = lens.put(src(0), view(0));
      return !r.defined() || !P.identical(r.value(), src(0));
    }
    case LawId::PsStability:
      return put_is(src(0), view(0), src(1)) && P.le(src(1), src(2)) && Q.le(view(0), view(1)) &&
             Q.identical(view(1), lens.get(src(2))) && put_is(src(2), view(1), src(3)) && !P.le(src(1), src(3));
    case LawId::GetMonotone:
      return P.le(src(0), src(1)) && !Q.le(lens.get(src(0)), lens.get(src(1)));
    case LawId::ViewStability: {
      auto r = lens.put(src(0), lens.get(src(0)));
      return !r.defined() || !(lens.get(r.value()) == lens.get(src(0)));
    }
    case LawId::PutDeterminesGet: {
      std::vector<V> vs;
      for (const auto& v : universe.views)
        for (const auto& s0 : universe.sources) {
          auto r = lens.put(s0, v);
          if (r.defined() && P.le(r.value(), src(0))) {
            vs.push_back(v);
            break;
          }
        }
      for (const auto& m : vs) {
        bool top = true;
        for (const auto& x : vs) top = top && Q.le(x, m);
        if (top) return !(m == lens.get(src(0)));
      }
      return true;
    }
    case LawId::WPutGet:
      return put_is(src(0), view(0), src(1)) && !put_is(src(0), lens.get(src(1)), src(1));
    case LawId::UAcceptability:
      return Q.identical(view(0), lens.get(src(0))) && !put_is(src(0), view(0), src(0));
    case LawId::UConsistency:
      return put_is(src(0), view(0), src(1)) && !Q.le(view(0), lens.get(src(1)));
    case LawId::PutPut:
      return put_is(src(0), view(0), src(1)) && put_is(src(1), view(1), src(2)) &&
             !put_is(src(0), view(1), src(2));
    case LawId::WeakWb:
    case LawId::Wb:
      break;
  }
  return false;
}

}  // namespace pslens
