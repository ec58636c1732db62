#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hopf {

// Exact rational scalar.
using Rat = mpq_class;

unsigned long euler_phi(unsigned long n);
unsigned long lcm_ul(unsigned long a, unsigned long b);

// Monic integer coefficients of the L-th cyclotomic polynomial, low degree
// first, length euler_phi(L)+1.  Computed by exact division of x^L - 1 by the
// cyclotomic polynomials of the proper divisors of L; cached per conductor.
const std::vector<Rat>& cyclotomic_polynomial(unsigned long L);

// An element of the cyclotomic field Q(zeta_L), stored as the canonical
// residue of a rational polynomial modulo Phi_L.  The coefficient vector
// always has length euler_phi(L).  Mixed-conductor arithmetic lifts both
// operands to the least common multiple conductor first.
class CycNum {
 public:
  CycNum();  // zero at conductor 1

  static CycNum from_rational(const Rat& r, unsigned long L = 1);
  static CycNum from_long(long v, unsigned long L = 1);
  // zeta_L^k (k may be negative; reduced mod L).
  static CycNum root_of_unity(unsigned long L, long k);
  // Residue of the given polynomial (low degree first) mod Phi_L.
  static CycNum from_poly(std::vector<Rat> poly, unsigned long L);

  unsigned long conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_part() const;  // requires is_rational()

  // Rewrites this element over conductor M; requires conductor() | M.
  CycNum lifted(unsigned long M) const;

  CycNum operator-() const;
  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum inverse() const;  // requires nonzero
  CycNum operator/(const CycNum& o) const;
  CycNum pow(long e) const;

  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // Deterministic rendering, e.g. "0", "-1/2", "z8^3 + 1/3*z8".
  std::string str() const;

 private:
  unsigned long conductor_;
  std::vector<Rat> coeffs_;
};

CycNum operator*(const Rat& r, const CycNum& a);

// Lifts both numbers to their least common multiple conductor in place.
void lift_to_common_conductor(CycNum& a, CycNum& b);

}  // namespace hopf
