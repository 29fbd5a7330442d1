#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tropcram/maxplus.hpp"

namespace tropcram {

// ---------------------------------------------------------------------------
// Base coefficient semirings.
//
// Every supported semiring is (a sub-semiring of) a lexicographic extension
// pairing a nonzero base coefficient with a max-plus magnitude; the zero
// element is the pair with bottom magnitude.  The six shipped bases:
//
//   SBool  {1, -1, 1*}            sign with a balanced top (tokens p / n / b)
//   N2     {1, 2}                 multiplicity, 2 = "attained at least twice"
//   Phase  nonzero closed convex cones of the plane
//   Group  Z_n plus balanced top, either sup-addition ("torus" flavour) or
//          ghost-addition ("super" flavour)
// ---------------------------------------------------------------------------

enum class BoolC : uint8_t { P, N, B };
enum class N2C : uint8_t { One, Two };

// A nonzero closed convex cone of the plane. Angles are exact rationals in
// units of pi, kept in [0,2) (lines in [0,1)); Arc covers both rays
// (span == 0) and sectors (span in (0,1], span 1 being a half-plane).
struct Cone {
  enum Kind : uint8_t { Arc, LineK, PlaneK } kind = Arc;
  Rat start;  // Arc: start angle; LineK: axis angle
  Rat span;   // Arc only, in [0,1]

  static Cone ray(Rat a);
  static Cone sector(Rat a, Rat s);
  static Cone line(Rat a);
  static Cone plane() { return Cone{PlaneK, Rat(0), Rat(0)}; }

  bool is_ray() const { return kind == Arc && span.is_zero(); }
  friend bool operator==(const Cone& a, const Cone& b);
};

struct GroupC {
  bool top = false;  // the balanced absorbing element
  int k = 0;         // member of Z_n otherwise
  friend bool operator==(const GroupC& a, const GroupC& b) {
    return a.top == b.top && (a.top || a.k == b.k);
  }
};

using Coeff = std::variant<BoolC, N2C, Cone, GroupC>;

// Element of a semiring: nonzero elements pair a base coefficient with a
// magnitude; the distinguished zero is the bottom magnitude (coefficient
// canonicalized to the base unit so equality stays structural).
struct Elem {
  Coeff c;
  MaxPlus m;
  bool is_zero() const { return m.is_bottom(); }
  friend bool operator==(const Elem& a, const Elem& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.m == b.m && a.c == b.c;
  }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
};

enum class BaseKind : uint8_t { SBool, N2, Phase, Group };
// Trivial magnitudes restrict to {bottom, 0}: the base semiring itself.
enum class MagKind : uint8_t { Trivial, Rmax };

struct ChoicePolicy;

// Runtime bundle of one semiring's laws; value type, freely copyable and
// shareable across threads (all operations are pure).
class Semiring {
 public:
  static Semiring sbool();
  static Semiring n2();
  static Semiring phase();
  static Semiring group(int n, bool super);  // torus-style or supertropical
  static Semiring smax();
  static Semiring t2();
  static Semiring phasemax();
  static Semiring group_ext(int n, bool super);
  static std::optional<Semiring> by_name(const std::string& name);

  const std::string& name() const { return name_; }
  BaseKind base() const { return base_; }
  MagKind mag_kind() const { return mag_; }

  Elem zero() const { return Elem{unit_coeff(), MaxPlus::bottom()}; }
  Elem one() const { return Elem{unit_coeff(), unit_mag()}; }
  Elem make(Coeff c, MaxPlus m) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem negate(const Elem& a) const;
  MaxPlus modulus(const Elem& a) const { return a.m; }

  bool is_balanced(const Elem& a) const;  // a in S°
  bool is_thin(const Elem& a) const;      // a in S∨
  bool balance(const Elem& a, const Elem& b) const;  // a ∇ b
  bool bala(const Elem& a, const Elem& b) const;     // a ∇ b and |a| = |b|
  bool preorder_le(const Elem& a, const Elem& b) const;

  bool invertible(const Elem& a) const;
  Elem inverse(const Elem& a) const;

  // Lifts and projections between the magnitude semiring and this one.
  Elem iota(const MaxPlus& b) const;
  Coeff gamma(const Elem& a) const { return a.c; }
  Elem jmath(const Coeff& c) const { return Elem{c, unit_mag()}; }

  // Thin z with z ∇ y, |z| = |y| and z ⪯ y, in canonical order (the
  // "positive" witness first). Empty only for y where none exists.
  std::vector<Elem> thin_witnesses(const Elem& y) const;
  // Canonical d with z ⊕ d = y, for a witness z of y (z thin, z ⪯ y).
  Elem thin_complement(const Elem& z, const Elem& y) const;

  bool finite_carrier() const { return mag_ == MagKind::Trivial && base_ != BaseKind::Phase; }
  std::vector<Elem> enumerate() const;  // finite carriers only

  // Classification flags (verified against the axiom checker in tests).
  bool allows_weak_elimination() const;
  bool allows_strong_elimination() const;
  bool allows_monotone_construction() const;
  bool allows_monotone_convergence() const;
  bool order_equal_holds() const;       // thin x ⪯ y with |x| = |y| forces x = y
  bool homogeneous_supported() const;   // invertible-thin / pair / absorb laws

  std::string print(const Elem& a) const;
  Elem parse(const std::string& token) const;

  int group_order() const { return group_n_; }
  bool group_super() const { return group_super_; }
  // Torus flavour negates through the order-2 element; supertropical
  // semirings carry only the identity symmetry.
  bool group_has_involution() const { return base_ == BaseKind::Group && !group_super_; }

  friend bool operator==(const Semiring& a, const Semiring& b) {
    return a.name_ == b.name_;
  }

 private:
  Semiring(BaseKind b, MagKind m, std::string name, int gn = 0, bool gs = false)
      : base_(b), mag_(m), name_(std::move(name)), group_n_(gn), group_super_(gs) {}

  Coeff unit_coeff() const;
  MaxPlus unit_mag() const { return MaxPlus::unit(); }
  Coeff coeff_add(const Coeff& a, const Coeff& b) const;
  Coeff coeff_mul(const Coeff& a, const Coeff& b) const;
  Coeff coeff_neg(const Coeff& a) const;
  bool coeff_balanced(const Coeff& a) const;
  bool coeff_thin(const Coeff& a) const;
  bool coeff_le(const Coeff& a, const Coeff& b) const;
  bool coeff_invertible(const Coeff& a) const;
  Coeff coeff_inverse(const Coeff& a) const;
  std::vector<Coeff> coeff_witnesses(const Coeff& y) const;
  Coeff coeff_complement(const Coeff& z, const Coeff& y) const;
  std::string coeff_print(const Coeff& a) const;

  BaseKind base_;
  MagKind mag_;
  std::string name_;
  int group_n_;
  bool group_super_;
};

// How a solver picks among admissible thin witnesses, and which sign the
// diagonal splitting takes on balanced diagonal entries.
struct ChoicePolicy {
  enum Kind : uint8_t { PreferPositive, PreferNegative, SeededRandom };
  Kind choice = PreferPositive;
  Kind diag = PreferPositive;  // SeededRandom not meaningful here
  uint64_t seed = 0;

  // Deterministic splitmix64 stream for SeededRandom.
  mutable uint64_t state = 0;
  void reset() const { state = seed; }
  size_t pick(size_t n_candidates) const;
};

// Pure cone algebra, exposed for tests.
Cone cone_add(const Cone& a, const Cone& b);
Cone cone_mul(const Cone& a, const Cone& b);
bool cone_subset(const Cone& a, const Cone& b);

}  // namespace tropcram
