#include "tropcram/semiring.hpp"

#include <algorithm>

namespace tropcram {

namespace {

Rat mod2(const Rat& a) { return Rat::mod(a, Rat(2)); }
Rat mod1(const Rat& a) { return Rat::mod(a, Rat(1)); }

// Is angle t inside the arc [start, start+span] (angles mod 2)?
bool arc_contains(const Rat& start, const Rat& span, const Rat& t) {
  return Rat::mod(t - start, Rat(2)) <= span;
}

}  // namespace

Cone Cone::ray(Rat a) { return Cone{Arc, mod2(a), Rat(0)}; }

Cone Cone::sector(Rat a, Rat s) {
  if (s <= Rat(0) || s > Rat(1)) throw std::invalid_argument("cone: sector span out of range");
  return Cone{Arc, mod2(a), s};
}

Cone Cone::line(Rat a) { return Cone{LineK, mod1(a), Rat(0)}; }

bool operator==(const Cone& a, const Cone& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Cone::PlaneK: return true;
    case Cone::LineK: return a.start == b.start;
    case Cone::Arc: return a.start == b.start && a.span == b.span;
  }
  return false;
}

Cone cone_add(const Cone& a, const Cone& b) {
  if (a.kind == Cone::PlaneK || b.kind == Cone::PlaneK) return Cone::plane();
  if (a.kind == Cone::LineK && b.kind == Cone::LineK)
    return a.start == b.start ? a : Cone::plane();
  if (a.kind == Cone::LineK || b.kind == Cone::LineK) {
    const Cone& ln = a.kind == Cone::LineK ? a : b;
    const Cone& arc = a.kind == Cone::LineK ? b : a;
    if (arc.is_ray() && mod1(arc.start) == ln.start) return ln;
    // The arc must fit in one of the two closed half-planes bounded by the line.
    for (const Rat& s : {ln.start, ln.start + Rat(1)}) {
      if (arc_contains(s, Rat(1), arc.start) &&
          arc_contains(s, Rat(1), arc.start + arc.span) &&
          arc_contains(s, Rat(1), arc.start + arc.span / Rat(2)))
        return Cone::sector(s, Rat(1));
    }
    return Cone::plane();
  }
  // Two arcs. Convex hull of two antipodal rays is the line through them.
  if (a.is_ray() && b.is_ray() && mod2(a.start + Rat(1)) == b.start)
    return Cone::line(a.start);
  // Minimal covering arc among the four natural candidates.
  struct Cand { Rat start, span; };
  std::vector<Cand> cands = {
      {a.start, a.span},
      {b.start, b.span},
      {a.start, Rat::mod(b.start + b.span - a.start, Rat(2))},
      {b.start, Rat::mod(a.start + a.span - b.start, Rat(2))},
  };
  const Cone* arcs[2] = {&a, &b};
  std::optional<Cand> best;
  for (const auto& c : cands) {
    bool ok = true;
    for (const Cone* x : arcs) {
      ok = ok && arc_contains(c.start, c.span, x->start) &&
           arc_contains(c.start, c.span, x->start + x->span) &&
           arc_contains(c.start, c.span, x->start + x->span / Rat(2));
    }
    if (ok && (!best || c.span < best->span)) best = c;
  }
  if (best && best->span <= Rat(1)) {
    if (best->span.is_zero()) return Cone::ray(best->start);
    return Cone::sector(best->start, best->span);
  }
  return Cone::plane();
}

Cone cone_mul(const Cone& a, const Cone& b) {
  if (a.kind == Cone::PlaneK || b.kind == Cone::PlaneK) return Cone::plane();
  if (a.kind == Cone::LineK && b.kind == Cone::LineK)
    return Cone::line(a.start + b.start);
  if (a.kind == Cone::LineK || b.kind == Cone::LineK) {
    const Cone& ln = a.kind == Cone::LineK ? a : b;
    const Cone& arc = a.kind == Cone::LineK ? b : a;
    if (arc.is_ray()) return Cone::line(ln.start + arc.start);
    return Cone::plane();  // line times a fattened cone fills the plane
  }
  Rat s = a.span + b.span;
  if (s > Rat(1)) return Cone::plane();
  if (s.is_zero()) return Cone::ray(a.start + b.start);
  return Cone::sector(a.start + b.start, s);
}

bool cone_subset(const Cone& a, const Cone& b) {
  if (b.kind == Cone::PlaneK) return true;
  if (a.kind == Cone::PlaneK) return false;
  if (b.kind == Cone::LineK)
    return (a.kind == Cone::LineK && a.start == b.start) ||
           (a.is_ray() && mod1(a.start) == b.start);
  if (a.kind == Cone::LineK) return false;
  return arc_contains(b.start, b.span, a.start) &&
         arc_contains(b.start, b.span, a.start + a.span) &&
         arc_contains(b.start, b.span, a.start + a.span / Rat(2)) &&
         a.span <= b.span;
}

// --------------------------------------------------------------------------
// Constructors and naming.
// --------------------------------------------------------------------------

Semiring Semiring::sbool() { return Semiring(BaseKind::SBool, MagKind::Trivial, "sbool"); }
Semiring Semiring::n2() { return Semiring(BaseKind::N2, MagKind::Trivial, "n2"); }
Semiring Semiring::phase() { return Semiring(BaseKind::Phase, MagKind::Trivial, "phase"); }
Semiring Semiring::group(int n, bool super) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (!super && n % 2 != 0)
    throw std::invalid_argument("torus flavour needs an even order for its sign involution");
  return Semiring(BaseKind::Group, MagKind::Trivial,
                  (super ? "super" : "torus") + std::to_string(n), n, super);
}
Semiring Semiring::smax() { return Semiring(BaseKind::SBool, MagKind::Rmax, "smax"); }
Semiring Semiring::t2() { return Semiring(BaseKind::N2, MagKind::Rmax, "t2"); }
Semiring Semiring::phasemax() { return Semiring(BaseKind::Phase, MagKind::Rmax, "phasemax"); }
Semiring Semiring::group_ext(int n, bool super) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (!super && n % 2 != 0)
    throw std::invalid_argument("torus flavour needs an even order for its sign involution");
  return Semiring(BaseKind::Group, MagKind::Rmax,
                  (super ? "supermax" : "torusmax") + std::to_string(n), n, super);
}

std::optional<Semiring> Semiring::by_name(const std::string& name) {
  if (name == "sbool") return sbool();
  if (name == "n2") return n2();
  if (name == "phase") return phase();
  if (name == "smax") return smax();
  if (name == "t2") return t2();
  if (name == "phasemax") return phasemax();
  for (const char* pre : {"torusmax", "supermax", "torus", "super"}) {
    std::string p(pre);
    if (name.size() > p.size() && name.compare(0, p.size(), p) == 0) {
      int n = 0;
      try {
        n = std::stoi(name.substr(p.size()));
      } catch (...) {
        return std::nullopt;
      }
      if (n < 1) return std::nullopt;
      bool super = p == "super" || p == "supermax";
      return p.size() > 5 ? group_ext(n, super) : group(n, super);
    }
  }
  return std::nullopt;
}

Coeff Semiring::unit_coeff() const {
  switch (base_) {
    case BaseKind::SBool: return BoolC::P;
    case BaseKind::N2: return N2C::One;
    case BaseKind::Phase: return Cone::ray(Rat(0));
    case BaseKind::Group: return GroupC{false, 0};
  }
  throw std::logic_error("unreachable");
}

Elem Semiring::make(Coeff c, MaxPlus m) const {
  if (m.is_bottom()) return zero();
  if (mag_ == MagKind::Trivial && !(m == MaxPlus::unit()))
    throw std::invalid_argument(name_ + ": magnitude must be 0 in a base semiring");
  return Elem{std::move(c), std::move(m)};
}

// --------------------------------------------------------------------------
// Coefficient tables.
// --------------------------------------------------------------------------

Coeff Semiring::coeff_add(const Coeff& a, const Coeff& b) const {
  switch (base_) {
    case BaseKind::SBool: {
      BoolC x = std::get<BoolC>(a), y = std::get<BoolC>(b);
      if (x == y) return x;
      return BoolC::B;
    }
    case BaseKind::N2:
      return N2C::Two;  // 1+1 = 2 and 2 absorbs
    case BaseKind::Phase:
      return cone_add(std::get<Cone>(a), std::get<Cone>(b));
    case BaseKind::Group: {
      GroupC x = std::get<GroupC>(a), y = std::get<GroupC>(b);
      if (x == y) return group_super_ ? GroupC{true, 0} : x;
      return GroupC{true, 0};
    }
  }
  throw std::logic_error("unreachable");
}

Coeff Semiring::coeff_mul(const Coeff& a, const Coeff& b) const {
  switch (base_) {
    case BaseKind::SBool: {
      BoolC x = std::get<BoolC>(a), y = std::get<BoolC>(b);
      if (x == BoolC::B || y == BoolC::B) return BoolC::B;
      return x == y ? BoolC::P : BoolC::N;
    }
    case BaseKind::N2: {
      N2C x = std::get<N2C>(a), y = std::get<N2C>(b);
      return (x == N2C::Two || y == N2C::Two) ? N2C::Two : N2C::One;
    }
    case BaseKind::Phase:
      return cone_mul(std::get<Cone>(a), std::get<Cone>(b));
    case BaseKind::Group: {
      GroupC x = std::get<GroupC>(a), y = std::get<GroupC>(b);
      if (x.top || y.top) return GroupC{true, 0};
      return GroupC{false, (x.k + y.k) % group_n_};
    }
  }
  throw std::logic_error("unreachable");
}

Coeff Semiring::coeff_neg(const Coeff& a) const {
  switch (base_) {
    case BaseKind::SBool: {
      BoolC x = std::get<BoolC>(a);
      if (x == BoolC::P) return BoolC::N;
      if (x == BoolC::N) return BoolC::P;
      return BoolC::B;
    }
    case BaseKind::N2:
      return a;  // only the identity symmetry
    case BaseKind::Phase: {
      Cone c = std::get<Cone>(a);
      if (c.kind == Cone::Arc) return Cone{Cone::Arc, mod2(c.start + Rat(1)), c.span};
      return c;  // lines and the plane are fixed
    }
    case BaseKind::Group: {
      GroupC x = std::get<GroupC>(a);
      if (!group_has_involution() || x.top) return x;
      return GroupC{false, (x.k + group_n_ / 2) % group_n_};
    }
  }
  throw std::logic_error("unreachable");
}

bool Semiring::coeff_balanced(const Coeff& a) const {
  switch (base_) {
    case BaseKind::SBool: return std::get<BoolC>(a) == BoolC::B;
    case BaseKind::N2: return std::get<N2C>(a) == N2C::Two;
    case BaseKind::Phase: {
      const Cone& c = std::get<Cone>(a);
      return c.kind == Cone::LineK || c.kind == Cone::PlaneK;
    }
    case BaseKind::Group: return std::get<GroupC>(a).top;
  }
  throw std::logic_error("unreachable");
}

bool Semiring::coeff_thin(const Coeff& a) const {
  switch (base_) {
    case BaseKind::SBool: return std::get<BoolC>(a) != BoolC::B;
    case BaseKind::N2: return std::get<N2C>(a) == N2C::One;
    case BaseKind::Phase: return std::get<Cone>(a).is_ray();
    case BaseKind::Group: return !std::get<GroupC>(a).top;
  }
  throw std::logic_error("unreachable");
}

bool Semiring::coeff_le(const Coeff& a, const Coeff& b) const {
  switch (base_) {
    case BaseKind::SBool: {
      BoolC x = std::get<BoolC>(a), y = std::get<BoolC>(b);
      return x == y || y == BoolC::B;
    }
    case BaseKind::N2: {
      N2C x = std::get<N2C>(a), y = std::get<N2C>(b);
      return x == y || y == N2C::Two;
    }
    case BaseKind::Phase:
      return cone_subset(std::get<Cone>(a), std::get<Cone>(b));
    case BaseKind::Group: {
      GroupC x = std::get<GroupC>(a), y = std::get<GroupC>(b);
      return x == y || y.top;
    }
  }
  throw std::logic_error("unreachable");
}

bool Semiring::coeff_invertible(const Coeff& a) const {
  switch (base_) {
    case BaseKind::SBool: return std::get<BoolC>(a) != BoolC::B;
    case BaseKind::N2: return std::get<N2C>(a) == N2C::One;
    case BaseKind::Phase: return std::get<Cone>(a).is_ray();
    case BaseKind::Group: return !std::get<GroupC>(a).top;
  }
  throw std::logic_error("unreachable");
}

Coeff Semiring::coeff_inverse(const Coeff& a) const {
  switch (base_) {
    case BaseKind::SBool: return a;  // p and n are involutive
    case BaseKind::N2: return a;
    case BaseKind::Phase: return Cone::ray(-std::get<Cone>(a).start);
    case BaseKind::Group: {
      GroupC x = std::get<GroupC>(a);
      return GroupC{false, (group_n_ - x.k) % group_n_};
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Coeff> Semiring::coeff_witnesses(const Coeff& y) const {
  if (coeff_thin(y)) return {y};
  switch (base_) {
    case BaseKind::SBool: return {BoolC::P, BoolC::N};
    case BaseKind::N2: return {N2C::One};
    case BaseKind::Phase: {
      const Cone& c = std::get<Cone>(y);
      if (c.kind == Cone::LineK)
        return {Cone::ray(c.start), Cone::ray(c.start + Rat(1))};
      if (c.kind == Cone::PlaneK)
        return {Cone::ray(Rat(0)), Cone::ray(Rat(BigInt(1), BigInt(2))),
                Cone::ray(Rat(BigInt(3), BigInt(2))), Cone::ray(Rat(1))};
      // Proper sector: interior rays balance against it; the midpoint ray is
      // the canonical pick.
      return {Cone::ray(c.start + c.span / Rat(2))};
    }
    case BaseKind::Group: {
      // Unit first, the negated unit last, everything else between.
      std::vector<Coeff> out;
      int e = group_has_involution() ? group_n_ / 2 : -1;
      out.push_back(GroupC{false, 0});
      for (int k = 1; k < group_n_; ++k)
        if (k != e) out.push_back(GroupC{false, k});
      if (e > 0) out.push_back(GroupC{false, e});
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Coeff Semiring::coeff_complement(const Coeff& z, const Coeff& y) const {
  switch (base_) {
    case BaseKind::SBool:
      if (std::get<BoolC>(y) == BoolC::B)
        return std::get<BoolC>(z) == BoolC::P ? BoolC::N : BoolC::P;
      return y;
    case BaseKind::N2:
      return N2C::One;  // 1 + 1 = 2
    case BaseKind::Phase: {
      const Cone& c = std::get<Cone>(y);
      if (c.kind == Cone::LineK) return Cone::ray(std::get<Cone>(z).start + Rat(1));
      return y;
    }
    case BaseKind::Group: {
      if (group_super_) return z;  // a ⊕ a is already the top
      GroupC w = std::get<GroupC>(z);
      if (group_has_involution())
        return GroupC{false, (w.k + group_n_ / 2) % group_n_};
      if (group_n_ > 1) return GroupC{false, (w.k + 1) % group_n_};
      return GroupC{true, 0};
    }
  }
  throw std::logic_error("unreachable");
}

// --------------------------------------------------------------------------
// Element-level laws (the lexicographic extension rule).
// --------------------------------------------------------------------------

Elem Semiring::add(const Elem& a, const Elem& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.m == b.m) return Elem{coeff_add(a.c, b.c), a.m};
  return b.m < a.m ? a : b;
}

Elem Semiring::mul(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  return Elem{coeff_mul(a.c, b.c), a.m * b.m};
}

Elem Semiring::negate(const Elem& a) const {
  if (a.is_zero()) return a;
  return Elem{coeff_neg(a.c), a.m};
}

bool Semiring::is_balanced(const Elem& a) const {
  return a.is_zero() || coeff_balanced(a.c);
}

bool Semiring::is_thin(const Elem& a) const { return a.is_zero() || coeff_thin(a.c); }

bool Semiring::balance(const Elem& a, const Elem& b) const {
  return is_balanced(add(a, negate(b)));
}

bool Semiring::bala(const Elem& a, const Elem& b) const {
  return a.m == b.m && balance(a, b);
}

bool Semiring::preorder_le(const Elem& a, const Elem& b) const {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  if (a.m != b.m) return a.m < b.m;
  return coeff_le(a.c, b.c);
}

bool Semiring::invertible(const Elem& a) const {
  return !a.is_zero() && coeff_invertible(a.c);
}

Elem Semiring::inverse(const Elem& a) const {
  if (!invertible(a)) throw std::domain_error(name_ + ": element not invertible");
  return Elem{coeff_inverse(a.c), a.m.inverse()};
}

Elem Semiring::iota(const MaxPlus& b) const {
  if (b.is_bottom()) return zero();
  return make(unit_coeff(), b);
}

std::vector<Elem> Semiring::thin_witnesses(const Elem& y) const {
  if (y.is_zero()) return {zero()};
  std::vector<Elem> out;
  for (const Coeff& c : coeff_witnesses(y.c)) {
    Elem z{c, y.m};
    // Keep only genuine witnesses: thin, balancing y at equal modulus, below y.
    if (is_thin(z) && bala(z, y) && preorder_le(z, y)) out.push_back(z);
  }
  return out;
}

Elem Semiring::thin_complement(const Elem& z, const Elem& y) const {
  if (y.is_zero()) return zero();
  if (z == y) return zero();
  Elem d{coeff_complement(z.c, y.c), y.m};
  if (add(z, d) != y) d = y;  // fall back to absorption
  return d;
}

// --------------------------------------------------------------------------
// Classification flags. These restate, per shipped semiring, which of the
// elimination / monotone-algorithm laws hold; the axiom checker re-derives
// them and the tests assert agreement.
// --------------------------------------------------------------------------

bool Semiring::allows_weak_elimination() const {
  // In the torus flavour beyond Z2, a thin factor cannot be replaced across
  // a balance: the top balances every pair of distinct members, so g0 ~ g1
  // while g0*g0 ~ g3 does not force g1*g0 ~ g3.
  if (base_ == BaseKind::Group && !group_super_) return group_n_ == 2;
  return true;
}

bool Semiring::allows_strong_elimination() const {
  // Group tops also balance distinct thin elements, breaking uniqueness.
  if (base_ == BaseKind::Group) return group_super_ ? group_n_ == 1 : group_n_ == 2;
  return allows_weak_elimination();
}

// Published classification. The axiom checker documents one exception the
// flag deliberately keeps: in the phase semiring a boundary ray of a sector
// lies below it in the natural order yet no thin witness balances the
// sector, so the order-witness law fails on such pairs while the iteration
// remains well defined away from them.
bool Semiring::allows_monotone_construction() const { return true; }
bool Semiring::allows_monotone_convergence() const { return true; }

bool Semiring::order_equal_holds() const { return true; }

bool Semiring::homogeneous_supported() const { return base_ != BaseKind::Phase; }

std::vector<Elem> Semiring::enumerate() const {
  if (!finite_carrier()) throw std::logic_error(name_ + ": carrier is not finite");
  std::vector<Elem> out = {zero()};
  MaxPlus u = unit_mag();
  switch (base_) {
    case BaseKind::SBool:
      for (BoolC c : {BoolC::P, BoolC::N, BoolC::B}) out.push_back(Elem{c, u});
      break;
    case BaseKind::N2:
      for (N2C c : {N2C::One, N2C::Two}) out.push_back(Elem{c, u});
      break;
    case BaseKind::Group:
      for (int k = 0; k < group_n_; ++k) out.push_back(Elem{GroupC{false, k}, u});
      out.push_back(Elem{GroupC{true, 0}, u});
      break;
    case BaseKind::Phase:
      throw std::logic_error("phase carrier is infinite");
  }
  return out;
}

// --------------------------------------------------------------------------
// Textual element forms.
// --------------------------------------------------------------------------

namespace {

std::string cone_to_string(const Cone& c) {
  switch (c.kind) {
    case Cone::PlaneK: return "plane";
    case Cone::LineK: return "line:" + c.start.to_string();
    case Cone::Arc:
      if (c.is_ray()) return "hl:" + c.start.to_string();
      return "sec:" + c.start.to_string() + "," + mod2(c.start + c.span).to_string();
  }
  return "?";
}

Cone cone_from_string(const std::string& s) {
  if (s == "plane") return Cone::plane();
  if (s == "triv") throw std::invalid_argument("the trivial cone is the zero element");
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad cone token '" + s + "'");
  std::string head = s.substr(0, colon), body = s.substr(colon + 1);
  if (head == "hl") return Cone::ray(Rat::parse(body));
  if (head == "line") return Cone::line(Rat::parse(body));
  if (head == "sec") {
    auto comma = body.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad sector token '" + s + "'");
    Rat a = Rat::parse(body.substr(0, comma));
    Rat b = Rat::parse(body.substr(comma + 1));
    Rat span = Rat::mod(b - a, Rat(2));
    if (span.is_zero()) span = Rat(2);  // caller wrote an ill-formed full turn
    return Cone::sector(a, span);
  }
  throw std::invalid_argument("bad cone token '" + s + "'");
}

}  // namespace

std::string Semiring::coeff_print(const Coeff& a) const {
  switch (base_) {
    case BaseKind::SBool:
      switch (std::get<BoolC>(a)) {
        case BoolC::P: return "p";
        case BoolC::N: return "n";
        case BoolC::B: return "b";
      }
      break;
    case BaseKind::N2:
      return std::get<N2C>(a) == N2C::One ? "1" : "2";
    case BaseKind::Phase:
      return cone_to_string(std::get<Cone>(a));
    case BaseKind::Group: {
      GroupC g = std::get<GroupC>(a);
      return g.top ? "b" : "g" + std::to_string(g.k);
    }
  }
  throw std::logic_error("unreachable");
}

std::string Semiring::print(const Elem& a) const {
  if (mag_ == MagKind::Trivial) {
    if (a.is_zero()) {
      switch (base_) {
        case BaseKind::N2: return "0";
        case BaseKind::Phase: return "triv";
        default: return "z";
      }
    }
    return coeff_print(a.c);
  }
  if (a.is_zero()) return "z";
  std::string mag = a.m.to_string();
  switch (base_) {
    case BaseKind::SBool: return coeff_print(a.c) + "(" + mag + ")";
    case BaseKind::N2: return "t" + coeff_print(a.c) + "(" + mag + ")";
    default: return coeff_print(a.c) + "@" + mag;
  }
}

Elem Semiring::parse(const std::string& tok) const {
  try {
    if (mag_ == MagKind::Trivial) {
      switch (base_) {
        case BaseKind::SBool:
          if (tok == "z") return zero();
          if (tok == "p") return Elem{BoolC::P, unit_mag()};
          if (tok == "n") return Elem{BoolC::N, unit_mag()};
          if (tok == "b") return Elem{BoolC::B, unit_mag()};
          break;
        case BaseKind::N2:
          if (tok == "0") return zero();
          if (tok == "1") return Elem{N2C::One, unit_mag()};
          if (tok == "2") return Elem{N2C::Two, unit_mag()};
          break;
        case BaseKind::Phase:
          if (tok == "triv") return zero();
          return Elem{cone_from_string(tok), unit_mag()};
        case BaseKind::Group: {
          if (tok == "z") return zero();
          if (tok == "b") return Elem{GroupC{true, 0}, unit_mag()};
          if (tok.size() > 1 && tok[0] == 'g') {
            int k = std::stoi(tok.substr(1));
            if (k >= 0 && k < group_n_) return Elem{GroupC{false, k}, unit_mag()};
          }
          break;
        }
      }
      throw std::invalid_argument("bad token");
    }
    if (tok == "z") return zero();
    switch (base_) {
      case BaseKind::SBool: {
        if (tok.size() >= 4 && tok[1] == '(' && tok.back() == ')') {
          MaxPlus m(Rat::parse(tok.substr(2, tok.size() - 3)));
          if (tok[0] == 'p') return Elem{BoolC::P, m};
          if (tok[0] == 'n') return Elem{BoolC::N, m};
          if (tok[0] == 'b') return Elem{BoolC::B, m};
        }
        break;
      }
      case BaseKind::N2: {
        if (tok.size() >= 5 && tok[0] == 't' && tok[2] == '(' && tok.back() == ')') {
          MaxPlus m(Rat::parse(tok.substr(3, tok.size() - 4)));
          if (tok[1] == '1') return Elem{N2C::One, m};
          if (tok[1] == '2') return Elem{N2C::Two, m};
        }
        break;
      }
      case BaseKind::Phase: {
        auto at = tok.rfind('@');
        if (at != std::string::npos) {
          MaxPlus m(Rat::parse(tok.substr(at + 1)));
          return Elem{cone_from_string(tok.substr(0, at)), m};
        }
        break;
      }
      case BaseKind::Group: {
        auto at = tok.rfind('@');
        if (at != std::string::npos) {
          MaxPlus m(Rat::parse(tok.substr(at + 1)));
          std::string c = tok.substr(0, at);
          if (c == "b") return Elem{GroupC{true, 0}, m};
          if (c.size() > 1 && c[0] == 'g') {
            int k = std::stoi(c.substr(1));
            if (k >= 0 && k < group_n_) return Elem{GroupC{false, k}, m};
          }
        }
        break;
      }
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw std::invalid_argument(name_ + ": cannot parse element '" + tok + "'");
}

size_t ChoicePolicy::pick(size_t n) const {
  if (n <= 1) return 0;
  switch (choice) {
    case PreferPositive: return 0;
    case PreferNegative: return n - 1;
    case SeededRandom: {
      uint64_t z = (state += 0x9e3779b97f4a7c15ull);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      z = z ^ (z >> 31);
      return static_cast<size_t>(z % n);
    }
  }
  return 0;
}

}  // namespace tropcram
