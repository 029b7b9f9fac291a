#pragma once

#include <map>
#include <string>

#include "hallpath/field.hpp"
#include "hallpath/state.hpp"

namespace hallpath {

// Finite linear combination of basis states.
template <class S>
class Vect {
 public:
  Vect() = default;
  explicit Vect(const State& s, S c = S(1)) { add(s, std::move(c)); }

  const std::map<State, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  S coeff(const State& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add(const State& s, const S& c) {
    if (scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  // this += c * v
  void add_scaled(const Vect& v, const S& c) {
    if (scalar_is_zero(c)) return;
    for (const auto& [s, x] : v.terms_) add(s, x * c);
  }

  Vect& operator+=(const Vect& o) {
    for (const auto& [s, x] : o.terms_) add(s, x);
    return *this;
  }
  Vect& operator-=(const Vect& o) {
    for (const auto& [s, x] : o.terms_) add(s, -x);
    return *this;
  }
  Vect& operator*=(const S& c) {
    if (scalar_is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, x] : terms_) x *= c;
    return *this;
  }
  friend Vect operator+(Vect a, const Vect& b) { return a += b; }
  friend Vect operator-(Vect a, const Vect& b) { return a -= b; }
  friend Vect operator*(Vect a, const S& c) { return a *= c; }
  friend bool operator==(const Vect& a, const Vect& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string r;
    for (const auto& [s, x] : terms_) {
      if (!r.empty()) r += " + ";
      r += "(" + scalar_string(x) + ")*" + s.to_string();
    }
    return r;
  }

 private:
  std::map<State, S> terms_;
};

}  // namespace hallpath
