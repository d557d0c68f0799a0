#include "transvect/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace transvect {

namespace {

bool miller_rabin_witness(const Int& n, const Int& a) {
  // n odd > 2. Returns true if a proves n composite.
  Int d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  Int x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;
}

// Strong Lucas test with Selfridge parameters (for BPSW).
bool strong_lucas_probable_prime(const Int& n) {
  // Find D = 5, -7, 9, -11, ... with jacobi(D/n) = -1.
  Int d = 5;
  while (true) {
    int j = jacobi(d, n);
    if (j == 0) return abs_int(d) == n;  // small collision
    if (j == -1) break;
    d = d > 0 ? Int(-(d + 2)) : Int(-d + 2);
  }
  Int p = 1;
  Int q = (1 - d) / 4;

  Int delta = n + 1;
  unsigned s = 0;
  Int t = delta;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  // Compute U_t, V_t mod n by binary chain.
  Int u = 1, v = p, qk = mod_floor(q, n);
  // bits of t from second-highest down
  std::vector<int> bits;
  for (Int m = t; m > 1; m >>= 1) bits.push_back(static_cast<int>(m & 1));
  std::reverse(bits.begin(), bits.end());
  Int inv2 = mod_inverse(2, n);
  for (int b : bits) {
    // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
    Int u2 = mod_floor(u * v, n);
    Int v2 = mod_floor(v * v - 2 * qk, n);
    Int qk2 = mod_floor(qk * qk, n);
    if (b) {
      // increment: U_{m+1} = (P U + V)/2, V_{m+1} = (D U + P V)/2
      Int u1 = mod_floor((p * u2 + v2) * inv2, n);
      Int v1 = mod_floor((d * u2 + p * v2) * inv2, n);
      u = u1;
      v = v1;
      qk = mod_floor(qk2 * q, n);
    } else {
      u = u2;
      v = v2;
      qk = qk2;
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned i = 1; i < s; ++i) {
    v = mod_floor(v * v - 2 * qk, n);
    if (v == 0) return true;
    qk = mod_floor(qk * qk, n);
  }
  return false;
}

const std::uint64_t kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                      29, 31, 37, 41, 43, 47, 53, 59, 61};

Int pollard_rho(const Int& n) {
  // Brent's cycle variant with deterministic parameter sweep.
  for (Int c = 1; c < 64; ++c) {
    Int x = 2, y = 2, d = 1;
    Int ys = y;
    std::uint64_t power = 1, lam = 0;
    auto f = [&](const Int& v) { return mod_floor(v * v + c, n); };
    x = f(x);
    while (true) {
      if (power == lam) {
        ys = x;
        power *= 2;
        lam = 0;
      }
      x = f(x);
      ++lam;
      d = gcd_int(abs_int(x - ys), n);
      if (d != 1) break;
    }
    if (d != n) return d;
  }
  throw std::runtime_error("pollard_rho: no factor found");
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (std::uint64_t p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  static const Int k64 = Int(1) << 64;
  if (n < k64) {
    // Exact below 2^64 with the first 12 prime bases.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
      if (miller_rabin_witness(n, Int(a))) return false;
    }
    return true;
  }
  if (miller_rabin_witness(n, 2)) return false;
  return strong_lucas_probable_prime(n);
}

Int find_prime(const CongruenceSystem& sys, const std::vector<Int>& avoid,
               std::uint64_t limit) {
  // Combine into a single class r mod m by CRT.
  Int r = 0, m = 1;
  for (const auto& [res, mod] : sys.congruences) {
    if (mod <= 0) throw std::invalid_argument("find_prime: modulus <= 0");
    if (mod == 1) continue;
    Int g = gcd_int(m, mod);
    if (g != 1) throw std::invalid_argument("find_prime: moduli not coprime");
    // r' = r mod m, res mod mod
    Int inv = mod_inverse(m, mod);
    Int t = mod_floor((mod_floor(res, mod) - r) * inv, mod);
    r = r + m * t;
    m = m * mod;
  }
  for (const Int& a : avoid) {
    if (a == 0) throw std::invalid_argument("find_prime: zero avoid entry");
  }

  auto acceptable = [&](const Int& candidate) {
    if (sys.sign == Sign::Positive && candidate < 0) return false;
    if (sys.sign == Sign::Negative && candidate > 0) return false;
    Int p = abs_int(candidate);
    if (p < 2) return false;
    for (const Int& a : avoid) {
      if (a % p == 0) return false;
    }
    return is_prime(p);
  };

  if (m == 1) {
    // Unconstrained class: walk 2, -2, 3, -3, ...
    std::uint64_t seen = 0;
    for (Int p = 2; seen < limit; ++p) {
      ++seen;
      if (acceptable(p)) return p;
      if (acceptable(-p)) return -p;
    }
    throw SearchExhausted("find_prime: no prime in range", limit);
  }

  // Walk the class r + k*m by increasing magnitude, positive first on ties.
  Int up = mod_floor(r, m);        // smallest nonnegative member
  Int down = up - m;               // largest negative member
  std::uint64_t seen = 0;
  while (seen < limit) {
    bool pick_up = up <= -down;  // tie -> positive
    if (pick_up) {
      ++seen;
      if (acceptable(up)) return up;
      up += m;
    } else {
      ++seen;
      if (acceptable(down)) return down;
      down -= m;
    }
  }
  throw SearchExhausted("find_prime: no prime in class", limit);
}

int jacobi(Int a, Int n) {
  if (n <= 0 || (n & 1) == 0)
    throw std::invalid_argument("jacobi: n must be odd positive");
  a = mod_floor(a, n);
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      Int nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a = a % n;
  }
  return n == 1 ? result : 0;
}

Int sqrt_mod_prime(const Int& a, const Int& p) {
  if (p == 2) return mod_floor(a, 2);
  Int aa = mod_floor(a, p);
  if (aa == 0) return 0;
  if (jacobi(aa, p) != 1)
    throw std::domain_error("sqrt_mod_prime: non-residue");
  Int r;
  if (p % 4 == 3) {
    r = pow_mod(aa, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks.
    Int q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    Int z = 2;
    while (jacobi(z, p) != -1) ++z;
    Int m = s, c = pow_mod(z, q, p), t = pow_mod(aa, q, p),
        rr = pow_mod(aa, (q + 1) / 2, p);
    while (t != 1) {
      Int i = 0, tt = t;
      while (tt != 1) {
        tt = tt * tt % p;
        ++i;
        if (i == m) throw std::domain_error("sqrt_mod_prime: non-residue");
      }
      Int b = pow_mod(c, pow_mod(2, m - i - 1, p - 1), p);
      m = i;
      c = b * b % p;
      t = t * c % p;
      rr = rr * b % p;
    }
    r = rr;
  }
  return std::min(r, Int(p - r));
}

unsigned ord_p(Int x, const Int& p) {
  if (x == 0) throw std::domain_error("ord_p: zero argument");
  if (p < 2) throw std::invalid_argument("ord_p: p must be >= 2");
  unsigned v = 0;
  x = abs_int(x);
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

unsigned ord_p_of(const Int& n, const Int& p) { return ord_p(n, p); }

std::map<Int, unsigned> factorize(const Int& n) {
  if (n == 0) throw std::domain_error("factorize: zero argument");
  static const Int kCap = Int(1) << 96;
  Int m = abs_int(n);
  if (m > kCap) throw FactorTooLarge("factorize: operand above 2^96");
  std::map<Int, unsigned> out;
  for (std::uint64_t p = 2; p < 100'000 && Int(p) * p <= m; p == 2 ? p = 3 : p += 2) {
    while (m % p == 0) {
      ++out[Int(p)];
      m /= p;
    }
  }
  if (m > 1) factor_rec(m, out);
  return out;
}

Int carmichael(const Int& n) {
  Int m = abs_int(n);
  if (m == 0) throw std::domain_error("carmichael: zero argument");
  if (m == 1) return 1;
  Int result = 1;
  for (const auto& [p, e] : factorize(m)) {
    Int lam;
    if (p == 2) {
      lam = e == 1 ? Int(1) : (e == 2 ? Int(2) : Int(Int(1) << (e - 2)));
    } else {
      lam = (p - 1);
      for (unsigned i = 1; i < e; ++i) lam *= p;
    }
    result = lcm_int(result, lam);
  }
  return result;
}

}  // namespace transvect
