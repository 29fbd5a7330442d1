#include "tropcram/axioms.hpp"

#include <functional>
#include <sstream>

namespace tropcram {

namespace {

struct Rng {
  uint64_t s;
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
};

Rat small_rat(Rng& rng) {
  long num = rng.below(9) - 4;
  long den = 1 + rng.below(2);  // halves keep tie cases honest
  return Rat(BigInt(num), BigInt(den));
}

Coeff sample_coeff(const Semiring& S, Rng& rng) {
  switch (S.base()) {
    case BaseKind::SBool: {
      BoolC opts[3] = {BoolC::P, BoolC::N, BoolC::B};
      return opts[rng.below(3)];
    }
    case BaseKind::N2:
      return rng.below(2) ? N2C::Two : N2C::One;
    case BaseKind::Phase: {
      // Rational multiples of pi with small denominators.
      auto angle = [&] {
        long den = 1 + rng.below(6);
        long num = rng.below(2 * den);
        return Rat(BigInt(num), BigInt(den));
      };
      switch (rng.below(4)) {
        case 0: return Cone::ray(angle());
        case 1: return Cone::line(angle());
        case 2: return Cone::plane();
        default: {
          long den = 2 + rng.below(5);
          Rat span(BigInt(1 + rng.below(den)), BigInt(den));
          return Cone::sector(angle(), span);
        }
      }
    }
    case BaseKind::Group: {
      if (rng.below(4) == 0) return GroupC{true, 0};
      return GroupC{false, static_cast<int>(rng.below(S.group_order()))};
    }
  }
  throw std::logic_error("unreachable");
}

// Per-base decomposition of an element into a short sum of thin elements;
// used to check that the thin set generates the semiring additively.
std::vector<Elem> thin_parts(const Semiring& S, const Elem& a) {
  if (S.is_thin(a)) return {a};
  switch (S.base()) {
    case BaseKind::SBool:
      return {S.make(BoolC::P, a.m), S.make(BoolC::N, a.m)};
    case BaseKind::N2:
      return {S.iota(a.m), S.iota(a.m)};
    case BaseKind::Phase: {
      const Cone& c = std::get<Cone>(a.c);
      if (c.kind == Cone::LineK)
        return {S.make(Cone::ray(c.start), a.m), S.make(Cone::ray(c.start + Rat(1)), a.m)};
      if (c.kind == Cone::PlaneK)
        return {S.make(Cone::ray(Rat(0)), a.m),
                S.make(Cone::ray(Rat(BigInt(2), BigInt(3))), a.m),
                S.make(Cone::ray(Rat(BigInt(4), BigInt(3))), a.m)};
      if (c.span == Rat(1))
        return {S.make(Cone::ray(c.start), a.m),
                S.make(Cone::ray(c.start + c.span / Rat(2)), a.m),
                S.make(Cone::ray(c.start + c.span), a.m)};
      return {S.make(Cone::ray(c.start), a.m), S.make(Cone::ray(c.start + c.span), a.m)};
    }
    case BaseKind::Group: {
      if (S.group_super()) return {S.make(std::get<GroupC>(a.c).top ? Coeff(GroupC{false, 0})
                                                                    : a.c, a.m),
                                   S.make(GroupC{false, 0}, a.m)};
      return {S.make(GroupC{false, 0}, a.m),
              S.make(GroupC{false, S.group_order() > 1 ? 1 : 0}, a.m)};
    }
  }
  throw std::logic_error("unreachable");
}

class Checker {
 public:
  Checker(const Semiring& S, CheckMode mode, long budget, uint64_t seed)
      : S_(S), mode_(mode), budget_(budget), rng_{seed * 2 + 1} {
    if (mode == CheckMode::Exhaustive) {
      if (!S.finite_carrier())
        throw std::invalid_argument(S.name() + ": exhaustive mode needs a finite carrier");
      pool_ = S.enumerate();
    } else {
      pool_ = sample_elements(S, 48, seed);
    }
    report_.semiring = S.name();
    report_.mode = mode;
  }

  AxiomReport run();

 private:
  bool spend(long& cases) {
    if (budget_ <= 0) {
      report_.complete = false;
      return false;
    }
    --budget_;
    ++cases;
    return true;
  }

  // Visit k-tuples from the pool: all of them in exhaustive mode, `samples`
  // random draws otherwise. The visitor returns a witness string or "".
  std::string tuples(int k, long samples, long& cases,
                     const std::function<std::string(const std::vector<const Elem*>&)>& f) {
    std::vector<const Elem*> t(k);
    if (mode_ == CheckMode::Exhaustive) {
      std::vector<size_t> idx(k, 0);
      while (true) {
        for (int i = 0; i < k; ++i) t[i] = &pool_[idx[i]];
        if (!spend(cases)) return "";
        std::string w = f(t);
        if (!w.empty()) return w;
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] == pool_.size()) idx[pos--] = 0;
        if (pos < 0) return "";
      }
    }
    std::vector<Elem> scratch(k);
    for (long s = 0; s < samples; ++s) {
      if (!spend(cases)) return "";
      for (int i = 0; i < k; ++i)
        scratch[i] = pool_[rng_.below(static_cast<long>(pool_.size()))];
      // Half the draws share one magnitude: ties are where these laws bite.
      if (rng_.below(2) == 0) {
        MaxPlus m;
        for (const Elem& e : scratch)
          if (!e.is_zero()) {
            m = e.m;
            break;
          }
        if (!m.is_bottom())
          for (Elem& e : scratch)
            if (!e.is_zero()) e = S_.make(e.c, m);
      }
      for (int i = 0; i < k; ++i) t[i] = &scratch[i];
      std::string w = f(t);
      if (!w.empty()) return w;
    }
    return "";
  }

  void property(const std::string& id, const std::string& label, int k, long samples,
                const std::function<std::string(const std::vector<const Elem*>&)>& f) {
    PropertyResult r;
    r.id = id;
    r.label = label;
    r.witness = tuples(k, samples, r.cases, f);
    r.pass = r.witness.empty();
    report_.results.push_back(std::move(r));
  }

  std::string show(const Elem& a) const { return S_.print(a); }

  const Semiring& S_;
  CheckMode mode_;
  long budget_;
  Rng rng_;
  std::vector<Elem> pool_;
  AxiomReport report_;
};

AxiomReport Checker::run() {
  const Semiring& S = S_;

  property("semiring", "commutative semiring laws with absorbing zero", 3, 8000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &a = *t[0], &b = *t[1], &c = *t[2];
             if (S.add(a, b) != S.add(b, a)) return "add not commutative: " + show(a) + "," + show(b);
             if (S.mul(a, b) != S.mul(b, a)) return "mul not commutative: " + show(a) + "," + show(b);
             if (S.add(a, S.zero()) != a) return "zero not neutral: " + show(a);
             if (S.mul(a, S.one()) != a) return "one not neutral: " + show(a);
             if (!S.mul(a, S.zero()).is_zero()) return "zero not absorbing: " + show(a);
             if (S.add(S.add(a, b), c) != S.add(a, S.add(b, c)))
               return "add not associative: " + show(a) + "," + show(b) + "," + show(c);
             if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c)))
               return "mul not associative: " + show(a) + "," + show(b) + "," + show(c);
             if (S.mul(a, S.add(b, c)) != S.add(S.mul(a, b), S.mul(a, c)))
               return "not distributive: " + show(a) + "," + show(b) + "," + show(c);
             return "";
           });

  property("symmetry", "negation is an involutive additive/multiplicative symmetry", 2, 4000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &a = *t[0], &b = *t[1];
             Elem e = S.negate(S.one());
             if (S.mul(e, e) != S.one()) return "negate(one)^2 != one";
             if (!S.negate(S.zero()).is_zero()) return "negate(zero) != zero";
             if (S.negate(S.negate(a)) != a) return "not involutive: " + show(a);
             if (S.negate(a) != S.mul(e, a)) return "negate != e*a: " + show(a);
             if (S.negate(S.add(a, b)) != S.add(S.negate(a), S.negate(b)))
               return "not additive: " + show(a) + "," + show(b);
             if (S.negate(S.mul(a, b)) != S.mul(a, S.negate(b)))
               return "not multiplicative: " + show(a) + "," + show(b);
             return "";
           });

  property("balanced-ideal", "balanced elements form the ideal generated by a - a", 2, 4000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &a = *t[0], &b = *t[1];
             if (!S.is_balanced(S.add(a, S.negate(a)))) return "a - a not balanced: " + show(a);
             if (S.is_balanced(a) && S.is_balanced(b) && !S.is_balanced(S.add(a, b)))
               return "sum leaves the ideal: " + show(a) + "," + show(b);
             if (S.is_balanced(a) && !S.is_balanced(S.mul(a, b)))
               return "product leaves the ideal: " + show(a) + "," + show(b);
             return "";
           });

  property("thin-set", "thin set meets the balanced set only at zero and holds invertibles", 1,
           2000, [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem& a = *t[0];
             if (!S.is_thin(S.zero())) return "zero not thin";
             if (S.is_thin(a) && S.is_balanced(a) && !a.is_zero())
               return "nonzero thin balanced: " + show(a);
             if (S.invertible(a) && !S.is_thin(a)) return "invertible not thin: " + show(a);
             if (S.invertible(a) && S.mul(a, S.inverse(a)) != S.one())
               return "bad inverse: " + show(a);
             return "";
           });

  property("thin-unique", "thin x balanced with thin y forces x = y", 2, 4000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &a = *t[0], &b = *t[1];
             if (S.is_thin(a) && S.is_thin(b) && S.balance(a, b) && a != b)
               return show(a) + " ~ " + show(b);
             return "";
           });

  property("thin-mult", "nonzero thin elements are closed under multiplication", 2, 4000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &a = *t[0], &b = *t[1];
             if (S.is_thin(a) && S.is_thin(b) && !a.is_zero() && !b.is_zero()) {
               Elem p = S.mul(a, b);
               if (p.is_zero() || !S.is_thin(p))
                 return show(a) + " * " + show(b) + " = " + show(p);
             }
             return "";
           });

  property("weak-trans-balances", "thin middle terms cancel from chained balances", 3, 8000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &x = *t[0], &b = *t[1], &d = *t[2];
             if (S.is_thin(x) && S.balance(b, x) && S.balance(x, d) && !S.balance(b, d))
               return show(b) + " ~ " + show(x) + " ~ " + show(d);
             return "";
           });

  property("weak-trans-scalar", "a thin factor may be replaced across a balance", 4, 10000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &x = *t[0], &b = *t[1], &c = *t[2], &d = *t[3];
             if (S.is_thin(x) && S.balance(x, b) && S.balance(S.mul(c, x), d) &&
                 !S.balance(S.mul(c, b), d))
               return show(x) + "," + show(b) + "," + show(c) + "," + show(d);
             return "";
           });

  property("weak-trans-systems", "thin solution vectors substitute into linear balances", 6,
           10000, [&](const std::vector<const Elem*>& t) -> std::string {
             // A 1 x 2 system: a x ~ b entrywise and C x ~ d.
             const Elem &a = *t[0], &x1 = *t[1], &x2 = *t[2];
             const Elem &c1 = *t[3], &c2 = *t[4], &d = *t[5];
             if (!S.is_thin(a) || !S.is_thin(x1) || !S.is_thin(x2)) return "";
             Elem b1 = S.mul(a, x1), b2 = S.mul(a, x2);
             Elem cx = S.add(S.mul(c1, x1), S.mul(c2, x2));
             if (!S.balance(cx, d)) return "";
             Elem cb = S.add(S.mul(c1, b1), S.mul(c2, b2));
             if (!S.balance(cb, S.mul(a, d)))
               return "Cb !~ ad with a=" + show(a) + " x=(" + show(x1) + "," + show(x2) + ")";
             return "";
           });

  property("thin-exact", "every unbalanced element is thin", 1, 2000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem& a = *t[0];
             if (!S.is_balanced(a) && !S.is_thin(a)) return show(a);
             return "";
           });

  property("thin-generates", "every element is a finite sum of thin elements", 1, 2000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem& a = *t[0];
             std::vector<Elem> parts = thin_parts(S, a);
             Elem sum = S.zero();
             for (const Elem& p : parts) {
               if (!S.is_thin(p)) return "part not thin for " + show(a);
               sum = S.add(sum, p);
             }
             if (sum != a) return "parts sum to " + show(sum) + " not " + show(a);
             return "";
           });

  property("order-witness", "a thin witness exists between any thin lower bound and its bound",
           2, 6000, [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &x = *t[0], &y = *t[1];
             if (!S.is_thin(x) || !S.preorder_le(x, y)) return "";
             std::vector<Elem> cand = S.thin_witnesses(y);
             cand.push_back(x);
             for (const Elem& z : cand)
               if (S.is_thin(z) && S.preorder_le(x, z) && S.preorder_le(z, y) && S.bala(z, y))
                 return "";
             return "no witness for x=" + show(x) + " y=" + show(y);
           });

  property("chain-finite", "distinct thin elements of one modulus are incomparable", 2, 4000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &a = *t[0], &b = *t[1];
             if (S.is_thin(a) && S.is_thin(b) && !a.is_zero() && a != b &&
                 S.modulus(a) == S.modulus(b) && S.preorder_le(a, b))
               return show(a) + " < " + show(b);
             return "";
           });

  property("order-equal", "a thin upper bound of equal modulus is attained", 2, 4000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &a = *t[0], &b = *t[1];
             if (S.is_thin(a) && S.is_thin(b) && S.preorder_le(a, b) &&
                 S.modulus(a) == S.modulus(b) && a != b)
               return show(a) + " <= " + show(b);
             return "";
           });

  property("diag-invert", "thin pivots of invertible modulus move across refined balances", 3,
           8000, [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &d = *t[0], &x = *t[1], &y = *t[2];
             if (!S.is_thin(d) || d.is_zero() || !S.invertible(d)) return "";
             Elem dt = S.inverse(d);
             if (S.bala(S.mul(d, x), y) != S.bala(x, S.mul(dt, y)))
               return "d=" + show(d) + " x=" + show(x) + " y=" + show(y);
             return "";
           });

  property("invertible-thin-field", "nonzero thin = invertible = unbalanced", 1, 2000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem& a = *t[0];
             bool thin_star = S.is_thin(a) && !a.is_zero();
             if (thin_star != S.invertible(a)) return "thin*/invertible mismatch: " + show(a);
             if (thin_star != (!S.is_balanced(a))) return "thin*/unbalanced mismatch: " + show(a);
             return "";
           });

  property("zero-modulus", "only zero has bottom modulus", 1, 1000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem& a = *t[0];
             if (a.is_zero() != S.modulus(a).is_bottom()) return show(a);
             return "";
           });

  property("balanced-sum-pair",
           "a balanced sum has a balanced dominant term or a balancing pair", 3, 8000,
           [&](const std::vector<const Elem*>& t) -> std::string {
             Elem sum = S.add(S.add(*t[0], *t[1]), *t[2]);
             if (!S.is_balanced(sum) || sum.is_zero()) return "";
             for (int k = 0; k < 3; ++k)
               if (S.is_balanced(*t[k]) && S.modulus(*t[k]) == S.modulus(sum)) return "";
             for (int k = 0; k < 3; ++k)
               for (int l = k + 1; l < 3; ++l)
                 if (S.is_balanced(S.add(*t[k], *t[l])) &&
                     S.modulus(*t[k]) == S.modulus(sum) && S.modulus(*t[l]) == S.modulus(sum))
                   return "";
             return show(*t[0]) + "+" + show(*t[1]) + "+" + show(*t[2]) + " = " + show(sum);
           });

  property("balanced-absorb", "a balanced element absorbs anything of lower or equal modulus",
           2, 4000, [&](const std::vector<const Elem*>& t) -> std::string {
             const Elem &x = *t[0], &y = *t[1];
             if (S.is_balanced(x) && !x.is_zero() && S.modulus(y) <= S.modulus(x) &&
                 !S.is_balanced(S.add(x, y)))
               return show(x) + " + " + show(y);
             return "";
           });

  auto pass = [&](const char* id) {
    const PropertyResult* r = report_.find(id);
    return r && r->pass;
  };
  report_.weak_elimination =
      pass("thin-mult") && pass("weak-trans-scalar") && pass("weak-trans-systems");
  report_.strong_elimination = report_.weak_elimination && pass("thin-unique");
  report_.monotone_construction = pass("order-witness") && pass("diag-invert");
  report_.monotone_convergence = report_.monotone_construction && pass("chain-finite");
  report_.homogeneous_family = pass("invertible-thin-field") && pass("zero-modulus") &&
                               pass("balanced-sum-pair") && pass("balanced-absorb");
  return report_;
}

}  // namespace

std::vector<Elem> sample_elements(const Semiring& S, size_t count, uint64_t seed) {
  Rng rng{seed};
  std::vector<Elem> pool;
  pool.push_back(S.zero());
  pool.push_back(S.one());
  pool.push_back(S.negate(S.one()));
  pool.push_back(S.add(S.one(), S.negate(S.one())));
  while (pool.size() < count) {
    MaxPlus m = S.mag_kind() == MagKind::Trivial ? MaxPlus::unit() : MaxPlus(small_rat(rng));
    pool.push_back(S.make(sample_coeff(S, rng), m));
  }
  return pool;
}

const PropertyResult* AxiomReport::find(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  os << "semiring " << semiring << " ("
     << (mode == CheckMode::Exhaustive ? "exhaustive" : "sampled") << ")\n";
  for (const auto& r : results) {
    os << "  " << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  " << r.label;
    if (!r.pass) os << "  [witness: " << r.witness << "]";
    os << "\n";
  }
  os << "  elimination: " << (strong_elimination ? "strong" : weak_elimination ? "weak" : "none")
     << "\n";
  os << "  monotone algorithms: "
     << (monotone_convergence ? "convergence" : monotone_construction ? "construction" : "no")
     << "\n";
  os << "  homogeneous-system laws: " << (homogeneous_family ? "yes" : "no") << "\n";
  if (!complete) os << "  (incomplete: budget exhausted)\n";
  return os.str();
}

AxiomReport check_axioms(const Semiring& S, CheckMode mode, long budget, uint64_t seed) {
  Checker c(S, mode, budget, seed);
  return c.run();
}

}  // namespace tropcram
