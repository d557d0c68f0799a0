#include "transvect/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "transvect/numtheory.hpp"

namespace transvect {

struct RingDescriptor::Impl {
  RingKind kind;
  std::vector<Int> primes;                // Localization
  std::shared_ptr<const Impl> base;       // Double / Quotient
  Rat ideal_gen;                          // Double
  Int ideal_int = 0;                      // Double
  Rat modulus;                            // Quotient
  Int modulus_int = 0;                    // Quotient
};

namespace {

bool impl_equal(const RingDescriptor::Impl& a, const RingDescriptor::Impl& b);

bool base_equal(const std::shared_ptr<const RingDescriptor::Impl>& a,
                const std::shared_ptr<const RingDescriptor::Impl>& b) {
  if (!a && !b) return true;
  if (!a || !b) return false;
  return impl_equal(*a, *b);
}

bool impl_equal(const RingDescriptor::Impl& a, const RingDescriptor::Impl& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingKind::Integers:
      return true;
    case RingKind::Localization:
      return a.primes == b.primes;
    case RingKind::Double:
      return a.ideal_int == b.ideal_int && base_equal(a.base, b.base);
    case RingKind::Quotient:
      return a.modulus_int == b.modulus_int && base_equal(a.base, b.base);
  }
  return false;
}

// Membership of a rational in Integers or Localization.
bool in_base_ring(const RingDescriptor::Impl& impl, const Rat& x) {
  Int den = rat_den(x);
  if (impl.kind == RingKind::Integers) return den == 1;
  for (const Int& p : impl.primes) {
    while (den % p == 0) den /= p;
  }
  return den == 1;
}

Rat parse_rat_token(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad element token: " + s);
  }
}

std::string rat_to_token(const Rat& x) {
  std::ostringstream os;
  os << rat_num(x);
  if (rat_den(x) != 1) os << "/" << rat_den(x);
  return os.str();
}

}  // namespace

std::pair<Int, Int> split_by_primes(const Int& n,
                                    const std::vector<Int>& primes) {
  if (n == 0) throw std::domain_error("split_by_primes: zero argument");
  Int f = abs_int(n), s = 1;
  for (const Int& p : primes) {
    while (f % p == 0) {
      f /= p;
      s *= p;
    }
  }
  return {s, f};
}

Int canonical_generator_int(const RingDescriptor& ring, const Rat& x) {
  if (x == 0) return 0;
  Int num = abs_int(rat_num(x));
  if (ring.kind() == RingKind::Integers) return num;
  if (ring.kind() == RingKind::Localization)
    return split_by_primes(num, ring.inverted_primes()).second;
  throw std::domain_error("canonical_generator_int: unsupported ring");
}

bool congruent_mod(const Rat& x, const Rat& y, const Int& q) {
  Rat d = x - y;
  if (d == 0) return true;
  Int qq = abs_int(q);
  if (qq == 1) return true;
  // d = u/v reduced with gcd(v, q) = 1 required; q | u decides.
  if (gcd_int(rat_den(d), qq) != 1)
    throw std::domain_error("congruent_mod: denominator meets modulus");
  return rat_num(d) % qq == 0;
}

Int residue_mod(const Rat& x, const Int& m) {
  Int mm = abs_int(m);
  if (mm == 1) return 0;
  Int den = mod_floor(rat_den(x), mm);
  return mod_floor(rat_num(x) * mod_inverse(den, mm), mm);
}

RingDescriptor RingDescriptor::integers() {
  static const auto impl = std::make_shared<const Impl>(
      Impl{RingKind::Integers, {}, nullptr, Rat(), 0, Rat(), 0});
  return RingDescriptor(impl);
}

RingDescriptor RingDescriptor::localization(std::vector<Int> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const Int& p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("localization: not a prime");
  }
  auto impl = std::make_shared<const Impl>(
      Impl{RingKind::Localization, std::move(primes), nullptr, Rat(), 0,
           Rat(), 0});
  return RingDescriptor(impl);
}

RingDescriptor RingDescriptor::double_of(const RingDescriptor& base,
                                         const Rat& ideal_gen) {
  if (base.kind() != RingKind::Integers &&
      base.kind() != RingKind::Localization)
    throw std::invalid_argument("double_of: base must be Z or Z[1/S]");
  if (ideal_gen == 0) throw std::invalid_argument("double_of: zero ideal");
  if (!in_base_ring(*base.impl_, ideal_gen))
    throw std::invalid_argument("double_of: generator outside base ring");
  Int q = canonical_generator_int(base, ideal_gen);
  auto impl = std::make_shared<const Impl>(
      Impl{RingKind::Double, {}, base.impl_, ideal_gen, q, Rat(), 0});
  return RingDescriptor(impl);
}

RingDescriptor RingDescriptor::quotient(const RingDescriptor& base,
                                        const Rat& modulus) {
  if (base.kind() != RingKind::Integers &&
      base.kind() != RingKind::Localization)
    throw std::invalid_argument("quotient: base must be Z or Z[1/S]");
  if (modulus == 0) throw std::invalid_argument("quotient: zero modulus");
  Int m = canonical_generator_int(base, modulus);
  auto impl = std::make_shared<const Impl>(
      Impl{RingKind::Quotient, {}, base.impl_, Rat(), 0, modulus, m});
  return RingDescriptor(impl);
}

const std::vector<Int>& RingDescriptor::inverted_primes() const {
  if (kind() != RingKind::Localization)
    throw std::domain_error("inverted_primes: not a localization");
  return impl_->primes;
}

RingDescriptor RingDescriptor::base() const {
  if (!impl_->base) throw std::domain_error("base: ring has no base");
  return RingDescriptor(impl_->base);
}

const Rat& RingDescriptor::ideal_gen() const {
  if (kind() != RingKind::Double) throw std::domain_error("ideal_gen");
  return impl_->ideal_gen;
}

const Int& RingDescriptor::ideal_int() const {
  if (kind() != RingKind::Double) throw std::domain_error("ideal_int");
  return impl_->ideal_int;
}

const Int& RingDescriptor::modulus_int() const {
  if (kind() != RingKind::Quotient) throw std::domain_error("modulus_int");
  return impl_->modulus_int;
}

bool RingDescriptor::operator==(const RingDescriptor& o) const {
  return impl_equal(*impl_, *o.impl_);
}

std::string RingDescriptor::to_string() const {
  switch (kind()) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Localization: {
      std::ostringstream os;
      os << "ZS{";
      bool first = true;
      for (const Int& p : impl_->primes) {
        if (!first) os << ",";
        os << p;
        first = false;
      }
      os << "}";
      return os.str();
    }
    case RingKind::Double:
      return "D(" + base().to_string() + ";" + rat_to_token(impl_->ideal_gen) +
             ")";
    case RingKind::Quotient:
      return "Q(" + base().to_string() + ";" + rat_to_token(impl_->modulus) +
             ")";
  }
  return "?";
}

RingDescriptor RingDescriptor::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text.rfind("ZS{", 0) == 0 && text.back() == '}') {
    std::vector<Int> primes;
    std::string body = text.substr(3, text.size() - 4);
    if (!body.empty()) {
      std::istringstream is(body);
      std::string item;
      while (std::getline(is, item, ',')) primes.push_back(Int(item));
    }
    return localization(std::move(primes));
  }
  if (text.rfind("D(", 0) == 0 && text.back() == ')') {
    std::string body = text.substr(2, text.size() - 3);
    auto semi = body.rfind(';');
    if (semi == std::string::npos)
      throw std::invalid_argument("bad ring token: " + text);
    RingDescriptor base = parse(body.substr(0, semi));
    Rat gen = parse_rat_token(body.substr(semi + 1));
    return double_of(base, gen);
  }
  throw std::invalid_argument("bad ring token: " + text);
}

RingElem RingElem::make(const RingDescriptor& ring, const Rat& value) {
  if (ring.kind() == RingKind::Double)
    return make_pair(ring, value, value);
  RingElem e;
  e.ring_ = ring;
  switch (ring.kind()) {
    case RingKind::Integers:
      if (!rat_is_integer(value))
        throw std::invalid_argument("RingElem: not an integer");
      e.a_ = value;
      break;
    case RingKind::Localization: {
      Int den = rat_den(value);
      for (const Int& p : ring.inverted_primes()) {
        while (den % p == 0) den /= p;
      }
      if (den != 1)
        throw std::invalid_argument("RingElem: denominator outside S");
      e.a_ = value;
      break;
    }
    case RingKind::Quotient: {
      if (!rat_is_integer(value) && ring.base().kind() == RingKind::Integers)
        throw std::invalid_argument("RingElem: residue must be integral");
      e.a_ = Rat(residue_mod(value, ring.modulus_int()));
      break;
    }
    default:
      throw std::invalid_argument("RingElem: unsupported ring");
  }
  return e;
}

RingElem RingElem::make_pair(const RingDescriptor& ring, const Rat& first,
                             const Rat& second) {
  if (ring.kind() != RingKind::Double)
    throw std::invalid_argument("RingElem: pair payload needs a double ring");
  RingDescriptor base = ring.base();
  RingElem lhs = RingElem::make(base, first);    // validates membership
  RingElem rhs = RingElem::make(base, second);
  if (!congruent_mod(first, second, ring.ideal_int()))
    throw std::invalid_argument("RingElem: pair violates the congruence");
  RingElem e;
  e.ring_ = ring;
  e.a_ = first;
  e.b_ = second;
  return e;
}

RingElem RingElem::from_int(const RingDescriptor& ring, const Int& value) {
  return make(ring, Rat(value));
}

RingElem RingElem::zero(const RingDescriptor& ring) {
  return from_int(ring, 0);
}

RingElem RingElem::one(const RingDescriptor& ring) { return from_int(ring, 1); }

const Rat& RingElem::second() const {
  if (ring_.kind() != RingKind::Double)
    throw std::domain_error("second: not a double-ring element");
  return b_;
}

bool RingElem::is_zero() const {
  return a_ == 0 && (ring_.kind() != RingKind::Double || b_ == 0);
}

bool RingElem::is_one() const {
  return a_ == 1 && (ring_.kind() != RingKind::Double || b_ == 1);
}

Int RingElem::as_int() const {
  if (!rat_is_integer(a_)) throw std::domain_error("as_int: not integral");
  if (ring_.kind() == RingKind::Double)
    throw std::domain_error("as_int: double-ring element");
  return rat_num(a_);
}

Int RingElem::first_int() const {
  if (!rat_is_integer(a_)) throw std::domain_error("first_int: not integral");
  return rat_num(a_);
}

Int RingElem::second_int() const {
  const Rat& s = second();
  if (!rat_is_integer(s)) throw std::domain_error("second_int: not integral");
  return rat_num(s);
}

bool RingElem::operator==(const RingElem& o) const {
  return ring_ == o.ring_ && a_ == o.a_ && b_ == o.b_;
}

std::string RingElem::to_string() const {
  if (ring_.kind() == RingKind::Double)
    return rat_to_token(a_) + "|" + rat_to_token(b_);
  return rat_to_token(a_);
}

RingElem RingElem::parse(const RingDescriptor& ring, const std::string& text) {
  if (ring.kind() == RingKind::Double) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
      throw std::invalid_argument("bad pair token: " + text);
    return make_pair(ring, parse_rat_token(text.substr(0, bar)),
                     parse_rat_token(text.substr(bar + 1)));
  }
  return make(ring, parse_rat_token(text));
}

IdealSpec IdealSpec::principal(const RingElem& generator) {
  if (generator.is_zero())
    throw std::invalid_argument("IdealSpec: zero generator");
  IdealSpec j;
  j.ring_ = generator.ring();
  j.shape_ = IdealShape::Element;
  j.gen_ = generator;
  return j;
}

IdealSpec IdealSpec::coordinate(const RingDescriptor& double_ring,
                                IdealShape shape, const Rat& base_generator) {
  if (double_ring.kind() != RingKind::Double)
    throw std::invalid_argument("IdealSpec: coordinate shape needs a double");
  if (shape == IdealShape::Element)
    throw std::invalid_argument("IdealSpec: use principal() for elements");
  if (base_generator == 0)
    throw std::invalid_argument("IdealSpec: zero generator");
  RingElem::make(double_ring.base(), base_generator);  // membership check
  IdealSpec j;
  j.ring_ = double_ring;
  j.shape_ = shape;
  j.base_gen_ = base_generator;
  j.gen_ = RingElem();
  return j;
}

Int IdealSpec::canonical_int() const {
  if (shape_ != IdealShape::Element)
    return canonical_generator_int(ring_.base(), base_gen_);
  switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::Localization:
      return canonical_generator_int(ring_, gen_.first());
    case RingKind::Quotient:
      return gcd_int(gen_.as_int(), ring_.modulus_int());
    default:
      throw std::domain_error("canonical_int: no canonical integer form");
  }
}

bool IdealSpec::contains(const RingElem& x) const {
  if (x.ring() != ring_) throw std::invalid_argument("contains: ring mismatch");
  if (shape_ == IdealShape::Element &&
      (ring_.kind() == RingKind::Integers ||
       ring_.kind() == RingKind::Localization)) {
    if (x.is_zero()) return true;
    Int m = canonical_int();
    return congruent_mod(x.first(), Rat(0), m);
  }
  if (shape_ == IdealShape::Element && ring_.kind() == RingKind::Quotient) {
    return x.as_int() % canonical_int() == 0;
  }
  if (ring_.kind() != RingKind::Double)
    throw std::domain_error("contains: unsupported ring");

  RingDescriptor base = ring_.base();
  const Int q = ring_.ideal_int();
  switch (shape_) {
    case IdealShape::CoordBoth: {
      Int g = canonical_generator_int(base, base_gen_);
      return congruent_mod(x.first(), Rat(0), g) &&
             congruent_mod(x.second(), Rat(0), g);
    }
    case IdealShape::CoordFirst: {
      Int g = canonical_generator_int(base, base_gen_);
      return x.second() == 0 && congruent_mod(x.first(), Rat(0), g);
    }
    case IdealShape::CoordSecond: {
      Int g = canonical_generator_int(base, base_gen_);
      return x.first() == 0 && congruent_mod(x.second(), Rat(0), g);
    }
    case IdealShape::Element: {
      // x = b*y with y in the double: coordinate divisibility plus the
      // congruence on the quotients.
      const Rat& b1 = gen_.first();
      const Rat& b2 = gen_.second();
      if (b1 == 0 && b2 == 0) return x.is_zero();
      if (b1 == 0) {
        if (x.first() != 0) return false;
        Int m2 = canonical_generator_int(base, b2);
        return congruent_mod(x.second(), Rat(0), m2);
      }
      if (b2 == 0) {
        if (x.second() != 0) return false;
        Int m1 = canonical_generator_int(base, b1);
        return congruent_mod(x.first(), Rat(0), m1);
      }
      Int m1 = canonical_generator_int(base, b1);
      Int m2 = canonical_generator_int(base, b2);
      if (!congruent_mod(x.first(), Rat(0), m1)) return false;
      if (!congruent_mod(x.second(), Rat(0), m2)) return false;
      Rat y1 = x.first() / b1;
      Rat y2 = x.second() / b2;
      return congruent_mod(y1, y2, q);
    }
  }
  return false;
}

bool IdealSpec::operator==(const IdealSpec& o) const {
  return ring_ == o.ring_ && shape_ == o.shape_ && gen_ == o.gen_ &&
         base_gen_ == o.base_gen_;
}

std::string IdealSpec::to_string() const {
  switch (shape_) {
    case IdealShape::Element:
      return gen_.to_string();
    case IdealShape::CoordBoth:
      return "(" + rat_to_token(base_gen_) + "," + rat_to_token(base_gen_) +
             ")";
    case IdealShape::CoordFirst:
      return "(" + rat_to_token(base_gen_) + ",0)";
    case IdealShape::CoordSecond:
      return "(0," + rat_to_token(base_gen_) + ")";
  }
  return "?";
}

namespace {

void require_same_ring(const RingElem& x, const RingElem& y) {
  if (x.ring() != y.ring())
    throw std::invalid_argument("ring arithmetic: descriptor mismatch");
}

RingElem rebuild(const RingDescriptor& ring, const Rat& a, const Rat& b) {
  if (ring.kind() == RingKind::Double) return RingElem::make_pair(ring, a, b);
  return RingElem::make(ring, a);
}

}  // namespace

RingElem add(const RingElem& x, const RingElem& y) {
  require_same_ring(x, y);
  if (x.ring().kind() == RingKind::Double)
    return rebuild(x.ring(), x.first() + y.first(), x.second() + y.second());
  return rebuild(x.ring(), x.first() + y.first(), Rat());
}

RingElem sub(const RingElem& x, const RingElem& y) {
  require_same_ring(x, y);
  if (x.ring().kind() == RingKind::Double)
    return rebuild(x.ring(), x.first() - y.first(), x.second() - y.second());
  return rebuild(x.ring(), x.first() - y.first(), Rat());
}

RingElem mul(const RingElem& x, const RingElem& y) {
  require_same_ring(x, y);
  if (x.ring().kind() == RingKind::Double)
    return rebuild(x.ring(), x.first() * y.first(), x.second() * y.second());
  return rebuild(x.ring(), x.first() * y.first(), Rat());
}

RingElem neg(const RingElem& x) {
  if (x.ring().kind() == RingKind::Double)
    return rebuild(x.ring(), -x.first(), -x.second());
  return rebuild(x.ring(), -x.first(), Rat());
}

bool is_coprime(const RingElem& x, const IdealSpec& J) {
  if (x.ring() != J.ring())
    throw std::invalid_argument("is_coprime: ring mismatch");
  const RingDescriptor& ring = x.ring();
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::Localization: {
      Int m = J.canonical_int();
      if (m == 1) return true;
      if (x.is_zero()) return false;
      return gcd_int(canonical_generator_int(ring, x.first()), m) == 1;
    }
    case RingKind::Quotient: {
      Int m = J.canonical_int();
      if (m == 1) return true;
      return gcd_int(gcd_int(x.as_int(), ring.modulus_int()), m) == 1;
    }
    case RingKind::Double:
      break;
  }
  RingDescriptor base = ring.base();
  switch (J.shape()) {
    case IdealShape::CoordBoth: {
      Int g = canonical_generator_int(base, J.base_generator());
      if (g == 1) return true;
      return gcd_int(residue_mod(x.first(), g), g) == 1 &&
             gcd_int(residue_mod(x.second(), g), g) == 1;
    }
    case IdealShape::CoordFirst:
    case IdealShape::CoordSecond: {
      // R~/(J + ...) keeps the untouched coordinate free; the image of x is
      // a unit only for coordinate values +-1 matched mod I.
      Int g = canonical_generator_int(base, J.base_generator());
      Int L = lcm_int(g, ring.ideal_int());
      const Rat& live =
          J.shape() == IdealShape::CoordFirst ? x.second() : x.first();
      const Rat& modded =
          J.shape() == IdealShape::CoordFirst ? x.first() : x.second();
      if (live != 1 && live != -1) return false;
      if (gcd_int(canonical_generator_int(base, modded), L) != 1) return false;
      Int inv = mod_inverse(residue_mod(modded, L), L);
      return congruent_mod(Rat(inv), live, ring.ideal_int());
    }
    case IdealShape::Element: {
      const RingElem& b = J.generator();
      if (b.first() == 0 || b.second() == 0) return false;
      Int m1 = canonical_generator_int(base, b.first());
      Int m2 = canonical_generator_int(base, b.second());
      if (x.first() == 0 && m1 != 1) return false;
      if (x.second() == 0 && m2 != 1) return false;
      Int x1 = x.first() == 0 ? Int(0)
                              : canonical_generator_int(base, x.first());
      Int x2 = x.second() == 0 ? Int(0)
                               : canonical_generator_int(base, x.second());
      return gcd_int(x1, m1) == 1 && gcd_int(x2, m2) == 1;
    }
  }
  return false;
}

QuotientSplit::QuotientSplit(const RingElem& b) {
  ring_ = b.ring();
  if (ring_.kind() != RingKind::Double)
    throw std::invalid_argument("quotient_split: needs a double-ring element");
  RingDescriptor base = ring_.base();
  q_ = ring_.ideal_int();
  IdealSpec defining = IdealSpec::coordinate(ring_, IdealShape::CoordBoth,
                                             ring_.ideal_gen());
  if (!is_coprime(b, defining))
    throw std::invalid_argument("quotient_split: b not prime to the ideal");
  m1_ = canonical_generator_int(base, b.first());
  m2_ = canonical_generator_int(base, b.second());
  q1_ = RingDescriptor::quotient(base, b.first());
  q2_ = RingDescriptor::quotient(base, b.second());
}

std::pair<RingElem, RingElem> QuotientSplit::forward(const RingElem& x) const {
  if (x.ring() != ring_) throw std::invalid_argument("forward: ring mismatch");
  return {RingElem::from_int(q1_, residue_mod(x.first(), m1_)),
          RingElem::from_int(q2_, residue_mod(x.second(), m2_))};
}

RingElem QuotientSplit::backward(const RingElem& r1, const RingElem& r2) const {
  if (r1.ring() != q1_ || r2.ring() != q2_)
    throw std::invalid_argument("backward: ring mismatch");
  Int u = r1.as_int(), v = r2.as_int();
  // x = (u + m1*t, v) with t chosen so the pair congruence holds.
  Int t = q_ == 1 ? Int(0)
                  : mod_floor((v - u) * mod_inverse(m1_, abs_int(q_)),
                              abs_int(q_));
  return RingElem::make_pair(ring_, Rat(u + m1_ * t), Rat(v));
}

RingElem crt_lift(
    const std::vector<std::pair<RingElem, IdealSpec>>& residues) {
  if (residues.empty())
    throw std::invalid_argument("crt_lift: empty congruence list");
  const RingDescriptor& ring = residues.front().first.ring();
  if (ring.kind() != RingKind::Integers &&
      ring.kind() != RingKind::Localization)
    throw std::invalid_argument("crt_lift: supported over Z and Z[1/S] only");
  Int r = 0, m = 1;
  for (const auto& [res, ideal] : residues) {
    if (res.ring() != ring || ideal.ring() != ring)
      throw std::invalid_argument("crt_lift: ring mismatch");
    Int mod = ideal.canonical_int();
    if (mod == 0) throw std::invalid_argument("crt_lift: zero modulus");
    if (mod == 1) continue;
    if (gcd_int(m, mod) != 1)
      throw std::invalid_argument("crt_lift: moduli not comaximal");
    Int target = residue_mod(res.first(), mod);
    Int t = mod_floor((target - r) * mod_inverse(m, mod), mod);
    r += m * t;
    m *= mod;
  }
  return RingElem::from_int(ring, r);
}

UnitExponent unit_exponent(const IdealSpec& J) {
  const RingDescriptor& ring = J.ring();
  switch (ring.kind()) {
    case RingKind::Integers: {
      return {carmichael(std::max(J.canonical_int(), Int(1)))};
    }
    case RingKind::Localization: {
      Int m = J.canonical_int();
      if (m == 0) throw std::invalid_argument("unit_exponent: zero ideal");
      return {carmichael(m)};
    }
    case RingKind::Quotient:
      throw std::domain_error("unit_exponent: quotient-ring ideals");
    case RingKind::Double:
      break;
  }
  RingDescriptor base = ring.base();
  switch (J.shape()) {
    case IdealShape::CoordBoth:
      return {carmichael(canonical_generator_int(base, J.base_generator()))};
    case IdealShape::CoordFirst:
    case IdealShape::CoordSecond: {
      // R~/(I,0) is isomorphic to the base ring; only Z has finite unit
      // exponent there.
      if (base.kind() == RingKind::Integers) return {2};
      return {0};
    }
    case IdealShape::Element: {
      const RingElem& b = J.generator();
      if (b.is_zero()) throw std::invalid_argument("unit_exponent: zero ideal");
      if (b.first() == 0 || b.second() == 0) return {0};
      IdealSpec defining = IdealSpec::coordinate(ring, IdealShape::CoordBoth,
                                                 ring.ideal_gen());
      if (!is_coprime(b, defining))
        throw std::domain_error(
            "unit_exponent: generator not prime to the defining ideal");
      Int m1 = canonical_generator_int(base, b.first());
      Int m2 = canonical_generator_int(base, b.second());
      return {lcm_int(carmichael(m1), carmichael(m2))};
    }
  }
  throw std::domain_error("unit_exponent: unsupported ideal");
}

}  // namespace transvect
