#pragma once

// Small value types shared by the i-poset constructions, plus the Show
// trait used to render elements in reports and witnesses.

#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pslens {

template <class T>
struct Show;

template <class T>
std::string show(const T& x) {
  return Show<T>::apply(x);
}

struct Unit {
  auto operator<=>(const Unit&) const = default;
};

// P_Omega: an element of P or the fresh least element Omega.
template <class T>
class Lifted {
 public:
  Lifted() = default;

  static Lifted omega() { return Lifted(); }
  static Lifted of(T value) { return Lifted(std::move(value)); }

  bool is_omega() const { return !value_.has_value(); }
  const T& value() const { return *value_; }

  auto operator<=>(const Lifted&) const = default;

 private:
  explicit Lifted(T value) : value_(std::move(value)) {}
  std::optional<T> value_;
};

// P + Q with explicit InL / InR tags. A and B may coincide.
template <class A, class B>
class Sum {
 public:
  static Sum inl(A a) { return Sum(std::in_place_index<0>, std::move(a)); }
  static Sum inr(B b) { return Sum(std::in_place_index<1>, std::move(b)); }

  bool is_left() const { return data_.index() == 0; }
  bool is_right() const { return data_.index() == 1; }
  const A& left() const { return std::get<0>(data_); }
  const B& right() const { return std::get<1>(data_); }

  bool operator==(const Sum&) const = default;
  auto operator<=>(const Sum&) const = default;

 private:
  template <std::size_t I, class V>
  Sum(std::in_place_index_t<I> tag, V&& v) : data_(tag, std::forward<V>(v)) {}
  std::variant<A, B> data_;
};

template <>
struct Show<std::string> {
  static std::string apply(const std::string& s) { return s; }
};

template <>
struct Show<int> {
  static std::string apply(int x) { return std::to_string(x); }
};

template <>
struct Show<bool> {
  static std::string apply(bool b) { return b ? "True" : "False"; }
};

template <>
struct Show<Unit> {
  static std::string apply(const Unit&) { return "()"; }
};

template <class T>
struct Show<Lifted<T>> {
  static std::string apply(const Lifted<T>& x) {
    return x.is_omega() ? std::string("Ω") : show(x.value());
  }
};

template <class A, class B>
struct Show<std::pair<A, B>> {
  static std::string apply(const std::pair<A, B>& p) {
    return "(" + show(p.first) + ", " + show(p.second) + ")";
  }
};

template <class A, class B>
struct Show<Sum<A, B>> {
  static std::string apply(const Sum<A, B>& s) {
    return s.is_left() ? "InL " + show(s.left()) : "InR " + show(s.right());
  }
};

template <class T>
struct Show<std::vector<T>> {
  static std::string apply(const std::vector<T>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ",";
      out += show(xs[i]);
    }
    return out + "}";
  }
};

}  // namespace pslens
