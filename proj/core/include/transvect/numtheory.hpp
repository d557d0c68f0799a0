#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "transvect/ints.hpp"

namespace transvect {

// Deterministic primality: Miller-Rabin on a fixed base set that is exact
// below 2^64, Baillie-PSW (2-MR + strong Lucas) above.
bool is_prime(const Int& n);

enum class Sign { Positive, Negative };

// Signed congruence system; moduli must be pairwise coprime and positive.
struct CongruenceSystem {
  std::vector<std::pair<Int, Int>> congruences;  // (residue, modulus)
  std::optional<Sign> sign;
};

inline constexpr std::uint64_t kDefaultSearchLimit = 10'000'000;

// Smallest-|p| signed prime satisfying every congruence, the sign
// constraint, and p dividing no avoid entry. Candidates are scanned in
// increasing |p|, positive before negative at equal magnitude. Throws
// SearchExhausted after `limit` candidates.
Int find_prime(const CongruenceSystem& sys, const std::vector<Int>& avoid = {},
               std::uint64_t limit = kDefaultSearchLimit);

// Jacobi symbol (a/n), n odd positive.
int jacobi(Int a, Int n);

// Square root of a modulo an odd prime p, canonicalized to min(r, p-r).
// Throws std::domain_error when a is a non-residue.
Int sqrt_mod_prime(const Int& a, const Int& p);

// p-adic valuation of x != 0.
unsigned ord_p(Int x, const Int& p);

// Prime factorization of |n|, n != 0, |n| <= 2^96 (trial division plus
// Pollard rho). Returns prime -> exponent.
std::map<Int, unsigned> factorize(const Int& n);

// Carmichael function of |n|, with lambda(1) = 1.
Int carmichael(const Int& n);

// Exponent of an element's image, convenience used by exponent formulas:
// ord_p of n with n possibly huge but p small.
unsigned ord_p_of(const Int& n, const Int& p);

}  // namespace transvect
