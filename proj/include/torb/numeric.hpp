/*
  numeric.hpp — exact scalar types and gcd utilities.

  Everything in this library computes over arbitrary-precision integers
  and rationals; no floating point appears anywhere.
*/

#ifndef TORB_NUMERIC_HPP
#define TORB_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace torb {

using Int = mpz_class;
using Rat = mpq_class;

struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

struct RankError : std::runtime_error {
  explicit RankError(const std::string& what) : std::runtime_error(what) {}
};

struct NoSolutionError : std::runtime_error {
  explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// g = x*a + y*b with g = gcd(a,b) >= 0.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline Int gcd_all(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

inline Int abs(const Int& a) { return a >= 0 ? a : Int(-a); }

/// Floor division quotient (sign convention of mathematical mod).
inline Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Quotient for the division minimizing |a - q*b| (nearest integer; on ties
/// keeps the floor remainder).  The floor remainder r has the sign of b and
/// |r| < |b|, so the correction toward the other side is always q + 1.
inline Int ndiv_q(const Int& a, const Int& b) {
  Int q = fdiv_q(a, b);
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) q += 1;
  return q;
}

}  // namespace torb

#endif
