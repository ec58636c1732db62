#include "hopf/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopf {

namespace {

using Poly = std::vector<Rat>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

// Exact division a / b; throws if the division leaves a remainder.
Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly bb = b;
  trim(bb);
  if (bb.empty()) throw std::invalid_argument("polynomial division by zero");
  if (a.empty()) return {};
  if (a.size() < bb.size()) throw std::invalid_argument("inexact polynomial division");
  Poly q(a.size() - bb.size() + 1, Rat(0));
  for (size_t k = q.size(); k-- > 0;) {
    Rat c = a[k + bb.size() - 1] / bb.back();
    q[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < bb.size(); ++j) a[k + j] -= c * bb[j];
  }
  trim(a);
  if (!a.empty()) throw std::invalid_argument("inexact polynomial division");
  return q;
}

// Remainder of a modulo b (b monic not required).
Poly poly_mod(Poly a, const Poly& b) {
  Poly bb = b;
  trim(bb);
  assert(!bb.empty());
  trim(a);
  while (a.size() >= bb.size() && !a.empty()) {
    Rat c = a.back() / bb.back();
    size_t off = a.size() - bb.size();
    for (size_t j = 0; j < bb.size(); ++j) a[off + j] -= c * bb[j];
    trim(a);
  }
  return a;
}

struct ConductorData {
  unsigned long L = 1;
  size_t deg = 1;        // euler_phi(L)
  Poly phi;              // Phi_L, monic, length deg+1
  // x^k mod Phi_L for k in [deg, 2*deg-2], index k-deg; used to fold products.
  std::vector<Poly> xpow_red;
};

std::mutex g_cache_mutex;
std::map<unsigned long, std::unique_ptr<ConductorData>> g_cache;

const ConductorData& conductor_data_locked(unsigned long L);

Poly compute_phi(unsigned long L) {
  // x^L - 1 divided by the product of Phi_d over proper divisors d of L.
  Poly num(L + 1, Rat(0));
  num[0] = Rat(-1);
  num[L] = Rat(1);
  Poly den{Rat(1)};
  for (unsigned long d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    den = poly_mul(den, conductor_data_locked(d).phi);
  }
  return poly_div_exact(num, den);
}

const ConductorData& conductor_data_locked(unsigned long L) {
  auto it = g_cache.find(L);
  if (it != g_cache.end()) return *it->second;
  auto data = std::make_unique<ConductorData>();
  data->L = L;
  data->phi = (L == 1) ? Poly{Rat(-1), Rat(1)} : compute_phi(L);
  data->deg = data->phi.size() - 1;
  assert(data->deg == euler_phi(L));
  // Precompute reductions of x^deg .. x^(2deg-2).
  // x^deg = -(phi - x^deg) since phi is monic.
  Poly cur(data->deg, Rat(0));
  for (size_t i = 0; i < data->deg; ++i) cur[i] = -data->phi[i];
  for (size_t k = data->deg; k + 1 <= 2 * data->deg - 1; ++k) {
    data->xpow_red.push_back(cur);
    // multiply by x, reduce once
    Poly nxt(data->deg, Rat(0));
    Rat top = (data->deg >= 1) ? cur[data->deg - 1] : Rat(0);
    for (size_t i = data->deg - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top != 0) {
      for (size_t i = 0; i < data->deg; ++i) nxt[i] += top * -data->phi[i];
    }
    cur = nxt;
  }
  const ConductorData& ref = *data;
  g_cache.emplace(L, std::move(data));
  return ref;
}

const ConductorData& conductor_data(unsigned long L) {
  std::lock_guard<std::mutex> lk(g_cache_mutex);
  return conductor_data_locked(L);
}

// Reduce an arbitrary-degree polynomial to the canonical residue.
std::vector<Rat> reduce_poly(Poly p, const ConductorData& cd) {
  std::vector<Rat> out(cd.deg, Rat(0));
  if (p.size() <= 2 * cd.deg - 1) {
    for (size_t k = p.size(); k-- > 0;) {
      if (p[k] == 0) continue;
      if (k < cd.deg) {
        out[k] += p[k];
      } else {
        const Poly& red = cd.xpow_red[k - cd.deg];
        for (size_t i = 0; i < cd.deg; ++i) out[i] += p[k] * red[i];
      }
    }
    return out;
  }
  Poly r = poly_mod(std::move(p), cd.phi);
  r.resize(cd.deg, Rat(0));
  return r;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  unsigned long m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

unsigned long lcm_ul(unsigned long a, unsigned long b) {
  return std::lcm(a, b);
}

const std::vector<Rat>& cyclotomic_polynomial(unsigned long L) {
  return conductor_data(L).phi;
}

CycNum::CycNum() : conductor_(1), coeffs_(1, Rat(0)) {}

CycNum CycNum::from_rational(const Rat& r, unsigned long L) {
  CycNum c;
  c.conductor_ = L;
  c.coeffs_.assign(conductor_data(L).deg, Rat(0));
  c.coeffs_[0] = r;
  c.coeffs_[0].canonicalize();
  return c;
}

CycNum CycNum::from_long(long v, unsigned long L) { return from_rational(Rat(v), L); }

CycNum CycNum::root_of_unity(unsigned long L, long k) {
  const ConductorData& cd = conductor_data(L);
  long kk = k % static_cast<long>(L);
  if (kk < 0) kk += static_cast<long>(L);
  Poly p(static_cast<size_t>(kk) + 1, Rat(0));
  p[static_cast<size_t>(kk)] = Rat(1);
  CycNum c;
  c.conductor_ = L;
  c.coeffs_ = reduce_poly(std::move(p), cd);
  return c;
}

CycNum CycNum::from_poly(std::vector<Rat> poly, unsigned long L) {
  const ConductorData& cd = conductor_data(L);
  // GMP rational arithmetic requires canonical inputs.
  for (Rat& r : poly) r.canonicalize();
  CycNum c;
  c.conductor_ = L;
  c.coeffs_ = reduce_poly(std::move(poly), cd);
  return c;
}

bool CycNum::is_zero() const {
  for (const Rat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat CycNum::rational_part() const {
  if (!is_rational()) throw std::logic_error("CycNum is not rational: " + str());
  return coeffs_[0];
}

CycNum CycNum::lifted(unsigned long M) const {
  if (M == conductor_) return *this;
  if (M % conductor_ != 0)
    throw std::invalid_argument("conductor lift requires a multiple of the current conductor");
  // zeta_L = zeta_M^(M/L): substitute x -> x^(M/L).
  unsigned long s = M / conductor_;
  const ConductorData& cd = conductor_data(M);
  Poly p(coeffs_.size() * s - s + 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) p[i * s] = coeffs_[i];
  CycNum c;
  c.conductor_ = M;
  c.coeffs_ = reduce_poly(std::move(p), cd);
  return c;
}

CycNum CycNum::operator-() const {
  CycNum c = *this;
  for (Rat& x : c.coeffs_) x = -x;
  return c;
}

CycNum CycNum::operator+(const CycNum& o) const {
  if (conductor_ != o.conductor_) {
    unsigned long M = lcm_ul(conductor_, o.conductor_);
    return lifted(M) + o.lifted(M);
  }
  CycNum c = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) c.coeffs_[i] += o.coeffs_[i];
  return c;
}

CycNum CycNum::operator-(const CycNum& o) const {
  if (conductor_ != o.conductor_) {
    unsigned long M = lcm_ul(conductor_, o.conductor_);
    return lifted(M) - o.lifted(M);
  }
  CycNum c = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) c.coeffs_[i] -= o.coeffs_[i];
  return c;
}

CycNum CycNum::operator*(const CycNum& o) const {
  if (conductor_ != o.conductor_) {
    unsigned long M = lcm_ul(conductor_, o.conductor_);
    return lifted(M) * o.lifted(M);
  }
  const ConductorData& cd = conductor_data(conductor_);
  Poly prod = poly_mul(coeffs_, o.coeffs_);
  CycNum c;
  c.conductor_ = conductor_;
  if (prod.empty()) {
    c.coeffs_.assign(cd.deg, Rat(0));
  } else {
    c.coeffs_ = reduce_poly(std::move(prod), cd);
  }
  return c;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  if (is_rational()) {
    return from_rational(Rat(1) / coeffs_[0], conductor_);
  }
  // Extended Euclid over Q[x]: u*f + v*Phi = gcd = const (Phi_L irreducible).
  const ConductorData& cd = conductor_data(conductor_);
  Poly r0 = cd.phi, r1 = coeffs_;
  trim(r1);
  Poly u0{}, u1{Rat(1)};  // coefficients of f in the Bezout combination
  while (true) {
    trim(r1);
    assert(!r1.empty());
    // divide r0 by r1
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
    Poly rem = r0;
    while (rem.size() >= r1.size() && !(rem.empty())) {
      trim(rem);
      if (rem.size() < r1.size()) break;
      Rat c = rem.back() / r1.back();
      size_t off = rem.size() - r1.size();
      q[off] += c;
      for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= c * r1[j];
      trim(rem);
    }
    // u2 = u0 - q*u1
    Poly qu1 = poly_mul(q, u1);
    Poly u2 = u0;
    if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rat(0));
    for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
    trim(u2);
    r0 = r1;
    r1 = rem;
    u0 = u1;
    u1 = u2;
    trim(r1);
    if (r1.empty()) break;  // r0 is the gcd, u0 its f-cofactor
    if (r1.size() == 1) {
      // gcd is the constant r1[0]: inverse = u1 / r1[0]
      Poly inv = u1;
      for (Rat& x : inv) x /= r1[0];
      return from_poly(std::move(inv), conductor_);
    }
  }
  // Degenerate: f divides Phi — impossible for nonzero residues of lower degree.
  throw std::domain_error("cyclotomic inverse failed");
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result = from_rational(Rat(1), conductor_);
  CycNum base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

bool CycNum::operator==(const CycNum& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  unsigned long M = lcm_ul(conductor_, o.conductor_);
  return lifted(M).coeffs_ == o.lifted(M).coeffs_;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit_coeff = (a == 1 || a == -1) && k > 0;
    if (!unit_coeff) {
      os << a.get_str();
      if (k > 0) os << "*";
    } else if (a == -1) {
      os << "-";
    }
    if (k > 0) {
      os << "z" << conductor_;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycNum operator*(const Rat& r, const CycNum& a) {
  return CycNum::from_rational(r, a.conductor()) * a;
}

void lift_to_common_conductor(CycNum& a, CycNum& b) {
  unsigned long M = lcm_ul(a.conductor(), b.conductor());
  a = a.lifted(M);
  b = b.lifted(M);
}

}  // namespace hopf
