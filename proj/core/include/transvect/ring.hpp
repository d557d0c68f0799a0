#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transvect/ints.hpp"

namespace transvect {

// Supported ring tower: Z, localizations Z[1/S], doubles of those along a
// nonzero ideal, and finite quotients of Z / Z[1/S]. All values are
// immutable after construction and all operations are pure.

enum class RingKind { Integers, Localization, Double, Quotient };

// Ideal shapes over a double ring: bR~ for an element b, and the coordinate
// ideals (I,0), (0,I), (I,I) keyed by a base-ring generator.
enum class IdealShape { Element, CoordFirst, CoordSecond, CoordBoth };

class RingElem;
class IdealSpec;

class RingDescriptor {
 public:
  static RingDescriptor integers();
  static RingDescriptor localization(std::vector<Int> primes);
  // base must be Integers or Localization; ideal_gen a nonzero base element.
  static RingDescriptor double_of(const RingDescriptor& base,
                                  const Rat& ideal_gen);
  static RingDescriptor quotient(const RingDescriptor& base,
                                 const Rat& modulus);

  RingKind kind() const { return impl_->kind; }
  bool is_double() const { return kind() == RingKind::Double; }

  const std::vector<Int>& inverted_primes() const;
  RingDescriptor base() const;

  // Double only: raw generator of the defining ideal and its canonical
  // positive integer generator (the S-free part of the numerator).
  const Rat& ideal_gen() const;
  const Int& ideal_int() const;

  // Quotient only: canonical positive integer modulus.
  const Int& modulus_int() const;

  bool operator==(const RingDescriptor& o) const;
  bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

  std::string to_string() const;
  static RingDescriptor parse(const std::string& text);

 private:
  struct Impl;
  explicit RingDescriptor(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class RingElem {
 public:
  RingElem() = default;

  // Validates ring membership (denominator support, residue range, the
  // double congruence) and canonicalizes.
  static RingElem make(const RingDescriptor& ring, const Rat& value);
  static RingElem make_pair(const RingDescriptor& ring, const Rat& first,
                            const Rat& second);
  static RingElem from_int(const RingDescriptor& ring, const Int& value);
  static RingElem zero(const RingDescriptor& ring);
  static RingElem one(const RingDescriptor& ring);

  const RingDescriptor& ring() const { return ring_; }
  const Rat& first() const { return a_; }
  const Rat& second() const;  // Double only

  bool is_zero() const;
  bool is_one() const;

  // Integers / Quotient payloads.
  Int as_int() const;
  // Double-of-Z coordinates.
  Int first_int() const;
  Int second_int() const;

  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  std::string to_string() const;
  static RingElem parse(const RingDescriptor& ring, const std::string& text);

 private:
  RingDescriptor ring_ = RingDescriptor::integers();
  Rat a_;
  Rat b_;
};

class IdealSpec {
 public:
  // Principal ideal of any supported ring, by nonzero generator.
  static IdealSpec principal(const RingElem& generator);
  // Coordinate ideal of a double ring; generator is a nonzero element of
  // the base ring.
  static IdealSpec coordinate(const RingDescriptor& double_ring,
                              IdealShape shape, const Rat& base_generator);

  const RingDescriptor& ring() const { return ring_; }
  IdealShape shape() const { return shape_; }
  const RingElem& generator() const { return gen_; }
  // Coord shapes: the base-ring generator.
  const Rat& base_generator() const { return base_gen_; }

  bool contains(const RingElem& x) const;

  // Canonical positive integer generator, valid for Element ideals over
  // Integers/Localization/Quotient and for coordinate ideals.
  Int canonical_int() const;

  bool operator==(const IdealSpec& o) const;
  bool operator!=(const IdealSpec& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  RingDescriptor ring_ = RingDescriptor::integers();
  IdealShape shape_ = IdealShape::Element;
  RingElem gen_;
  Rat base_gen_;
};

// Exponent of (R/J)^*, with value 0 encoding an infinite exponent.
struct UnitExponent {
  Int value;
  bool infinite() const { return value == 0; }
};

RingElem add(const RingElem& x, const RingElem& y);
RingElem sub(const RingElem& x, const RingElem& y);
RingElem mul(const RingElem& x, const RingElem& y);
RingElem neg(const RingElem& x);

// xR + J = R.
bool is_coprime(const RingElem& x, const IdealSpec& J);

// The isomorphism R~/bR~ -> R/b'R x R/b''R for b = (b', b'') with b' prime
// to the defining ideal.
class QuotientSplit {
 public:
  QuotientSplit(const RingElem& b);

  const RingDescriptor& left() const { return q1_; }
  const RingDescriptor& right() const { return q2_; }

  std::pair<RingElem, RingElem> forward(const RingElem& x) const;
  RingElem backward(const RingElem& r1, const RingElem& r2) const;

 private:
  RingDescriptor ring_ = RingDescriptor::integers();
  RingDescriptor q1_ = RingDescriptor::integers();
  RingDescriptor q2_ = RingDescriptor::integers();
  Int m1_, m2_, q_;
};

// Simultaneous congruences over Integers or Localization rings with
// pairwise comaximal moduli; returns the least nonnegative solution.
RingElem crt_lift(const std::vector<std::pair<RingElem, IdealSpec>>& residues);

UnitExponent unit_exponent(const IdealSpec& J);

// Shared low-level helpers.

// Splits |n| = s * f with s supported on `primes` and f coprime to them;
// returns (s, f), both positive. n != 0.
std::pair<Int, Int> split_by_primes(const Int& n,
                                    const std::vector<Int>& primes);

// Canonical positive integer m with xR = mR, for x a nonzero element of
// Integers or Localization.
Int canonical_generator_int(const RingDescriptor& ring, const Rat& x);

// x == y mod (q) in Integers or Localization, q a nonzero integer.
bool congruent_mod(const Rat& x, const Rat& y, const Int& q);

// Integer residue class of x mod m in Integers/Localization (denominator
// inverted mod m); requires gcd(den(x), m) = 1.
Int residue_mod(const Rat& x, const Int& m);

}  // namespace transvect
