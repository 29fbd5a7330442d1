#pragma once

#include "tropcram/semiring.hpp"

// Compile-time generic instantiation of the lexicographic extension, sharing
// no code with the runtime descriptor; the two are cross-checked in tests.

namespace tropcram::static_ext {

struct SBoolBase {
  using C = BoolC;
  static constexpr C one = BoolC::P;
  static C add(C a, C b) { return a == b ? a : BoolC::B; }
  static C mul(C a, C b) {
    if (a == BoolC::B || b == BoolC::B) return BoolC::B;
    return a == b ? BoolC::P : BoolC::N;
  }
  static C neg(C a) {
    if (a == BoolC::P) return BoolC::N;
    if (a == BoolC::N) return BoolC::P;
    return BoolC::B;
  }
  static bool balanced(C a) { return a == BoolC::B; }
};

struct N2Base {
  using C = N2C;
  static constexpr C one = N2C::One;
  static C add(C, C) { return N2C::Two; }
  static C mul(C a, C b) {
    return (a == N2C::Two || b == N2C::Two) ? N2C::Two : N2C::One;
  }
  static C neg(C a) { return a; }
  static bool balanced(C a) { return a == N2C::Two; }
};

template <class B>
struct Ext {
  struct E {
    bool zero = true;
    typename B::C c = B::one;
    MaxPlus m;
  };
  static E make_zero() { return E{}; }
  static E make(typename B::C c, MaxPlus m) { return E{false, c, std::move(m)}; }
  static E add(const E& a, const E& b) {
    if (a.zero) return b;
    if (b.zero) return a;
    if (a.m == b.m) return E{false, B::add(a.c, b.c), a.m};
    return a.m < b.m ? b : a;
  }
  static E mul(const E& a, const E& b) {
    if (a.zero || b.zero) return E{};
    return E{false, B::mul(a.c, b.c), a.m * b.m};
  }
  static E neg(const E& a) {
    if (a.zero) return a;
    return E{false, B::neg(a.c), a.m};
  }
  static bool balanced(const E& a) { return a.zero || B::balanced(a.c); }
};

}  // namespace tropcram::static_ext
