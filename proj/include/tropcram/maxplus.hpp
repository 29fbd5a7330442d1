#pragma once

#include <string>

#include "tropcram/rational.hpp"

namespace tropcram {

// Max-plus scalar: a rational magnitude or bottom (-inf).
// Addition is max, multiplication is rational addition.
struct MaxPlus {
  bool bot = true;
  Rat v;

  MaxPlus() = default;
  explicit MaxPlus(Rat r) : bot(false), v(std::move(r)) {}
  static MaxPlus bottom() { return MaxPlus(); }
  static MaxPlus unit() { return MaxPlus(Rat(0)); }

  bool is_bottom() const { return bot; }

  friend MaxPlus operator+(const MaxPlus& a, const MaxPlus& b) {  // max
    if (a.bot) return b;
    if (b.bot) return a;
    return a.v >= b.v ? a : b;
  }
  friend MaxPlus operator*(const MaxPlus& a, const MaxPlus& b) {  // plus
    if (a.bot || b.bot) return MaxPlus();
    return MaxPlus(a.v + b.v);
  }
  MaxPlus inverse() const;

  friend bool operator==(const MaxPlus& a, const MaxPlus& b) {
    if (a.bot || b.bot) return a.bot == b.bot;
    return a.v == b.v;
  }
  friend bool operator!=(const MaxPlus& a, const MaxPlus& b) { return !(a == b); }
  friend bool operator<(const MaxPlus& a, const MaxPlus& b) {
    if (a.bot) return !b.bot;
    if (b.bot) return false;
    return a.v < b.v;
  }
  friend bool operator<=(const MaxPlus& a, const MaxPlus& b) { return a < b || a == b; }

  std::string to_string() const { return bot ? "-inf" : v.to_string(); }
  static MaxPlus parse(const std::string& s);
};

inline MaxPlus MaxPlus::inverse() const {
  if (bot) throw std::domain_error("max-plus: bottom has no inverse");
  return MaxPlus(-v);
}

inline MaxPlus MaxPlus::parse(const std::string& s) {
  if (s == "-inf") return MaxPlus();
  return MaxPlus(Rat::parse(s));
}

}  // namespace tropcram
