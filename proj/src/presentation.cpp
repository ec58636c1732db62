#include "hopf/presentation.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace hopf {

namespace {

Word subword(const Word& w, size_t from, size_t to) {
  return Word(w.begin() + from, w.begin() + to);
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word repeat(int letter, int count) { return Word(static_cast<size_t>(count), letter); }

}  // namespace

std::string word_str(const Word& w, const std::vector<std::string>& gen_names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << "*";
    first = false;
    os << gen_names.at(static_cast<size_t>(w[i]));
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

LinComb LinComb::of(Word w, CycNum c) {
  LinComb l;
  if (!c.is_zero()) l.terms.emplace(std::move(w), std::move(c));
  return l;
}

void LinComb::add(const Word& w, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LinComb LinComb::operator+(const LinComb& o) const {
  LinComb r = *this;
  for (const auto& [w, c] : o.terms) r.add(w, c);
  return r;
}

LinComb LinComb::operator-(const LinComb& o) const {
  LinComb r = *this;
  for (const auto& [w, c] : o.terms) r.add(w, -c);
  return r;
}

LinComb LinComb::scaled(const CycNum& c) const {
  LinComb r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms) r.add(w, x * c);
  return r;
}

std::string LinComb::str(const std::vector<std::string>& gen_names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << word_str(w, gen_names);
  }
  return os.str();
}

bool family_is_group_algebra(Family f) {
  return f == Family::WreathZnS2 || f == Family::Dihedral4m ||
         f == Family::DihedralTimesZ2;
}

bool family_is_dihedral_type(Family f) {
  return f == Family::A4m || f == Family::B4m || f == Family::Dihedral4m ||
         f == Family::DihedralTimesZ2;
}

// ---------------------------------------------------------------------------
// Rule-based rewriting backend.

namespace {

class RewriteMultiplier : public Multiplier {
 public:
  RewriteMultiplier(std::vector<Rule> rules, int ngens, size_t max_steps = 5000000)
      : rules_(std::move(rules)), ngens_(ngens), max_steps_(max_steps) {}

  LinComb normalize(const Word& w) const override {
    LinComb out;
    std::vector<std::pair<CycNum, Word>> work;
    work.emplace_back(CycNum::from_long(1), w);
    size_t steps = 0;
    while (!work.empty()) {
      CycNum c = std::move(work.back().first);
      Word cur = std::move(work.back().second);
      work.pop_back();
      if (++steps > max_steps_)
        throw std::runtime_error("rewriting step limit exceeded (termination guard)");
      size_t pos = 0;
      const Rule* hit = nullptr;
      size_t hit_pos = 0;
      for (pos = 0; pos < cur.size() && !hit; ++pos) {
        for (const Rule& r : rules_) {
          if (pos + r.lhs.size() > cur.size()) continue;
          if (std::equal(r.lhs.begin(), r.lhs.end(), cur.begin() + pos)) {
            hit = &r;
            hit_pos = pos;
            break;
          }
        }
      }
      if (!hit) {
        out.add(cur, c);
        continue;
      }
      Word prefix = subword(cur, 0, hit_pos);
      Word suffix = subword(cur, hit_pos + hit->lhs.size(), cur.size());
      for (const auto& [rw, rc] : hit->rhs.terms) {
        work.emplace_back(c * rc, concat(concat(prefix, rw), suffix));
      }
    }
    return out;
  }

  std::vector<Word> enumerate_basis() const override {
    std::vector<Word> all{Word{}};
    std::vector<Word> level{Word{}};
    while (!level.empty()) {
      std::vector<Word> next;
      for (const Word& w : level) {
        for (int g = 0; g < ngens_; ++g) {
          Word e = w;
          e.push_back(g);
          // The prefix is already irreducible, so any redex must end at the
          // new last letter: a suffix check suffices.
          bool reducible = false;
          for (const Rule& r : rules_) {
            if (r.lhs.size() > e.size()) continue;
            if (std::equal(r.lhs.begin(), r.lhs.end(), e.end() - r.lhs.size())) {
              reducible = true;
              break;
            }
          }
          if (!reducible) next.push_back(e);
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      if (all.size() > 1000000)
        throw std::runtime_error("basis enumeration exceeded size guard");
      level = std::move(next);
    }
    return all;
  }

  const std::vector<Rule>& rules() const { return rules_; }

 private:
  std::vector<Rule> rules_;
  int ngens_;
  size_t max_steps_;
};

// ---------------------------------------------------------------------------
// Structured backend for the dihedral-type families: elements are
// a^e * rho^p * s_-^delta with rho = s_+ s_-, p mod m; when kappa = 1 the
// wraparound rho^m carries into the a-exponent.

constexpr int S_PLUS = 0;
constexpr int S_MINUS = 1;
constexpr int A_GEN = 2;

class DihedralMultiplier : public Multiplier {
 public:
  DihedralMultiplier(int m, int kappa) : m_(m), kappa_(kappa) {}

  struct State {
    int e = 0, p = 0, d = 0;
  };

  State mul_letter(State s, int letter) const {
    switch (letter) {
      case A_GEN:
        s.e ^= 1;
        return s;
      case S_MINUS:
        s.d ^= 1;
        return s;
      case S_PLUS:
        if (s.d == 1) {
          s.d = 0;
          if (s.p >= 1) {
            s.p -= 1;
          } else {
            s.p = m_ - 1;
            s.e ^= kappa_;
          }
        } else {
          s.p += 1;
          s.d = 1;
          if (s.p == m_) {
            s.p = 0;
            s.e ^= kappa_;
          }
        }
        return s;
      default:
        throw std::logic_error("unknown generator index in dihedral-type word");
    }
  }

  Word canonical_word(State s) const {
    Word w;
    for (int i = 0; i < s.e; ++i) w.push_back(A_GEN);
    if (s.d == 0) {
      for (int i = 0; i < s.p; ++i) {
        w.push_back(S_PLUS);
        w.push_back(S_MINUS);
      }
    } else if (s.p == 0) {
      w.push_back(S_MINUS);
    } else {
      for (int i = 0; i < s.p - 1; ++i) {
        w.push_back(S_PLUS);
        w.push_back(S_MINUS);
      }
      w.push_back(S_PLUS);
    }
    return w;
  }

  LinComb normalize(const Word& w) const override {
    State s;
    for (int letter : w) s = mul_letter(s, letter);
    return LinComb::of(canonical_word(s), CycNum::from_long(1));
  }

  std::vector<Word> enumerate_basis() const override {
    std::vector<Word> out;
    for (int e = 0; e < 2; ++e)
      for (int p = 0; p < m_; ++p)
        for (int d = 0; d < 2; ++d) out.push_back(canonical_word({e, p, d}));
    return out;
  }

 private:
  int m_;
  int kappa_;
};

}  // namespace

// ---------------------------------------------------------------------------
// HopfPresentation methods.

LinComb HopfPresentation::normalize(const Word& w) const { return multiplier->normalize(w); }

LinComb HopfPresentation::multiply(const LinComb& a, const LinComb& b) const {
  LinComb out;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      LinComb n = normalize(concat(wa, wb));
      CycNum c = ca * cb;
      for (const auto& [w, x] : n.terms) out.add(w, x * c);
    }
  return out;
}

CycNum HopfPresentation::counit_of_word(const Word& w) const {
  CycNum r = CycNum::from_long(1, conductor);
  for (int g : w) r *= counit.at(static_cast<size_t>(g));
  return r;
}

CycNum HopfPresentation::counit_of(const LinComb& x) const {
  CycNum r = CycNum::from_long(0, conductor);
  for (const auto& [w, c] : x.terms) r += c * counit_of_word(w);
  return r;
}

LinComb HopfPresentation::antipode_of_word(const Word& w) const {
  LinComb r = LinComb::of(Word{}, CycNum::from_long(1));
  for (size_t i = w.size(); i-- > 0;)
    r = multiply(r, antipode.at(static_cast<size_t>(w[i])));
  return r;
}

const TensorElem& HopfPresentation::coproduct_of_word(const Word& w) const {
  auto it = coproduct_cache_.find(w);
  if (it != coproduct_cache_.end()) return it->second;
  TensorElem result;
  if (w.empty()) {
    result[{Word{}, Word{}}] = CycNum::from_long(1, conductor);
  } else {
    Word prefix = subword(w, 0, w.size() - 1);
    const TensorElem& head = coproduct_of_word(prefix);
    TensorElem tail;
    for (const CoproductTerm& t : coproduct.at(static_cast<size_t>(w.back()))) {
      // terms may repeat in principle; accumulate
      auto key = std::make_pair(t.left, t.right);
      auto jt = tail.find(key);
      if (jt == tail.end())
        tail.emplace(key, t.coeff);
      else
        jt->second += t.coeff;
    }
    result = tensor_mult(head, tail);
  }
  auto [jt, ok] = coproduct_cache_.emplace(w, std::move(result));
  (void)ok;
  return jt->second;
}

TensorElem HopfPresentation::coproduct_of(const LinComb& x) const {
  TensorElem out;
  for (const auto& [w, c] : x.terms) {
    for (const auto& [slots, k] : coproduct_of_word(w)) {
      CycNum v = c * k;
      if (v.is_zero()) continue;
      auto it = out.find(slots);
      if (it == out.end()) {
        out.emplace(slots, std::move(v));
      } else {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

TensorElem HopfPresentation::tensor_mult(const TensorElem& x, const TensorElem& y) const {
  TensorElem out;
  for (const auto& [sx, cx] : x) {
    for (const auto& [sy, cy] : y) {
      CycNum c = cx * cy;
      if (c.is_zero()) continue;
      LinComb left = normalize(concat(sx.first, sy.first));
      LinComb right = normalize(concat(sx.second, sy.second));
      for (const auto& [wl, cl] : left.terms)
        for (const auto& [wr, cr] : right.terms) {
          CycNum v = c * cl * cr;
          if (v.is_zero()) continue;
          auto key = std::make_pair(wl, wr);
          auto it = out.find(key);
          if (it == out.end()) {
            out.emplace(key, std::move(v));
          } else {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
          }
        }
    }
  }
  return out;
}

std::vector<std::pair<CycNum, std::vector<Word>>> HopfPresentation::iterated_coproduct(
    int gen, int k, bool expand_left) const {
  assert(k >= 1);
  std::map<std::vector<Word>, CycNum> cur;
  cur[{Word{static_cast<int>(gen)}}] = CycNum::from_long(1, conductor);
  for (int step = 1; step < k; ++step) {
    std::map<std::vector<Word>, CycNum> next;
    for (const auto& [slots, c] : cur) {
      size_t idx = expand_left ? 0 : slots.size() - 1;
      const TensorElem& delta = coproduct_of_word(slots[idx]);
      for (const auto& [pair_, d] : delta) {
        std::vector<Word> ns;
        ns.reserve(slots.size() + 1);
        for (size_t i = 0; i < idx; ++i) ns.push_back(slots[i]);
        ns.push_back(pair_.first);
        ns.push_back(pair_.second);
        for (size_t i = idx + 1; i < slots.size(); ++i) ns.push_back(slots[i]);
        CycNum v = c * d;
        if (v.is_zero()) continue;
        auto it = next.find(ns);
        if (it == next.end()) {
          next.emplace(std::move(ns), std::move(v));
        } else {
          it->second += v;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    cur = std::move(next);
  }
  std::vector<std::pair<CycNum, std::vector<Word>>> out;
  out.reserve(cur.size());
  for (auto& [slots, c] : cur) out.emplace_back(c, slots);
  return out;
}

// ---------------------------------------------------------------------------
// Construction-time certificates.

namespace {

LinComb normalize_comb(const Multiplier& mult, const LinComb& x) {
  LinComb out;
  for (const auto& [w, c] : x.terms) {
    LinComb n = mult.normalize(w);
    for (const auto& [nw, nc] : n.terms) out.add(nw, nc * c);
  }
  return out;
}

void check_rule_overlaps(const RewriteMultiplier& mult,
                         const std::vector<std::string>& gen_names) {
  const std::vector<Rule>& rules = mult.rules();
  auto join_check = [&](const LinComb& a, const LinComb& b, size_t i, size_t j) {
    LinComb na = normalize_comb(mult, a);
    LinComb nb = normalize_comb(mult, b);
    if (!(na == nb)) {
      std::ostringstream os;
      os << "rewriting system not confluent: critical pair of rules #" << i
         << " and #" << j << " does not join: " << na.str(gen_names)
         << " vs " << nb.str(gen_names);
      throw std::runtime_error(os.str());
    }
  };
  for (size_t i = 0; i < rules.size(); ++i) {
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& l1 = rules[i].lhs;
      const Word& l2 = rules[j].lhs;
      // Suffix of l1 equals prefix of l2 (proper overlap).
      size_t kmax = std::min(l1.size(), l2.size()) - 1;
      for (size_t k = 1; k <= kmax; ++k) {
        if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k)) continue;
        Word tail = subword(l2, k, l2.size());
        Word head = subword(l1, 0, l1.size() - k);
        LinComb a;  // reduce the l1 part first
        for (const auto& [w, c] : rules[i].rhs.terms) a.add(concat(w, tail), c);
        LinComb b;  // reduce the l2 part first
        for (const auto& [w, c] : rules[j].rhs.terms) b.add(concat(head, w), c);
        join_check(a, b, i, j);
      }
      // l2 contained inside l1.
      if (i != j && l2.size() <= l1.size()) {
        for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (!std::equal(l2.begin(), l2.end(), l1.begin() + pos)) continue;
          LinComb b;
          for (const auto& [w, c] : rules[j].rhs.terms)
            b.add(concat(concat(subword(l1, 0, pos), w),
                         subword(l1, pos + l2.size(), l1.size())),
                  c);
          join_check(rules[i].rhs, b, i, j);
        }
      }
    }
  }
}

}  // namespace

void HopfPresentation::run_construction_checks(int expected_dim) {
  basis = multiplier->enumerate_basis();
  basis_index.clear();
  for (size_t i = 0; i < basis.size(); ++i) basis_index[basis[i]] = i;
  dim = static_cast<int>(basis.size());
  if (dim != expected_dim) {
    std::ostringstream os;
    os << name << ": basis enumeration found " << dim << " words, expected "
       << expected_dim;
    throw std::runtime_error(os.str());
  }
  // Normalization is the identity on basis words.
  for (const Word& b : basis) {
    LinComb n = normalize(b);
    if (!(n == LinComb::of(b, CycNum::from_long(1))))
      throw std::runtime_error(name + ": normalization not idempotent on basis word " +
                               word_str(b, gen_names));
  }
  if (auto* rm = dynamic_cast<const RewriteMultiplier*>(multiplier.get())) {
    check_rule_overlaps(*rm, gen_names);
  } else {
    // Structured multiplication law: check associativity on all basis triples
    // and agreement of every declared relation with the law.
    for (const Word& b1 : basis)
      for (const Word& b2 : basis) {
        LinComb p12 = multiply(LinComb::of(b1, CycNum::from_long(1)),
                               LinComb::of(b2, CycNum::from_long(1)));
        for (const Word& b3 : basis) {
          LinComb left = multiply(p12, LinComb::of(b3, CycNum::from_long(1)));
          LinComb right =
              multiply(LinComb::of(b1, CycNum::from_long(1)),
                       multiply(LinComb::of(b2, CycNum::from_long(1)),
                                LinComb::of(b3, CycNum::from_long(1))));
          if (!(left == right))
            throw std::runtime_error(name + ": multiplication law not associative at (" +
                                     word_str(b1, gen_names) + ", " +
                                     word_str(b2, gen_names) + ", " +
                                     word_str(b3, gen_names) + ")");
        }
      }
    for (const Rule& r : rules) {
      LinComb lhs = normalize(r.lhs);
      LinComb rhs = normalize_comb(*multiplier, r.rhs);
      if (!(lhs == rhs))
        throw std::runtime_error(name + ": declared relation " +
                                 word_str(r.lhs, gen_names) +
                                 " disagrees with the multiplication law");
    }
  }
  // The counit respects every declared relation.
  for (const Rule& r : rules) {
    if (counit_of_word(r.lhs) != counit_of(r.rhs))
      throw std::runtime_error(name + ": counit does not respect relation " +
                               word_str(r.lhs, gen_names));
  }
}

// ---------------------------------------------------------------------------
// Builders.

namespace {

constexpr int X_GEN = 0;
constexpr int Y_GEN = 1;
constexpr int Z_GEN = 2;

// mu(J) = (1/n) sum_{i,j} q^{-ij} x^i y^j at conductor 2n; q = zeta_{2n}^2.
LinComb mu_of_integral(int n) {
  LinComb mu;
  Rat inv_n(1, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CycNum c = inv_n * CycNum::root_of_unity(2 * static_cast<unsigned long>(n),
                                               -2L * i * j);
      mu.add(concat(repeat(X_GEN, i), repeat(Y_GEN, j)), c);
    }
  return mu;
}

std::vector<Rule> h2n2_style_rules(int n, const LinComb& z_square) {
  std::vector<Rule> rules;
  rules.push_back({Word{Y_GEN, X_GEN}, LinComb::of(Word{X_GEN, Y_GEN}, CycNum::from_long(1))});
  rules.push_back({Word{Z_GEN, X_GEN}, LinComb::of(Word{Y_GEN, Z_GEN}, CycNum::from_long(1))});
  rules.push_back({Word{Z_GEN, Y_GEN}, LinComb::of(Word{X_GEN, Z_GEN}, CycNum::from_long(1))});
  rules.push_back({repeat(X_GEN, n), LinComb::of(Word{}, CycNum::from_long(1))});
  rules.push_back({repeat(Y_GEN, n), LinComb::of(Word{}, CycNum::from_long(1))});
  rules.push_back({Word{Z_GEN, Z_GEN}, z_square});
  return rules;
}

std::vector<Rule> dihedral_rules(int m, int kappa) {
  std::vector<Rule> rules;
  CycNum one = CycNum::from_long(1);
  rules.push_back({Word{S_PLUS, S_PLUS}, LinComb::of(Word{}, one)});
  rules.push_back({Word{S_MINUS, S_MINUS}, LinComb::of(Word{}, one)});
  rules.push_back({Word{A_GEN, A_GEN}, LinComb::of(Word{}, one)});
  rules.push_back({Word{S_PLUS, A_GEN}, LinComb::of(Word{A_GEN, S_PLUS}, one)});
  rules.push_back({Word{S_MINUS, A_GEN}, LinComb::of(Word{A_GEN, S_MINUS}, one)});
  Word rot;
  for (int i = 0; i < m; ++i) {
    rot.push_back(S_PLUS);
    rot.push_back(S_MINUS);
  }
  rules.push_back({rot, LinComb::of(kappa ? Word{A_GEN} : Word{}, one)});
  return rules;
}

CoproductExpansion grouplike(int gen) {
  return {CoproductTerm{CycNum::from_long(1), Word{gen}, Word{gen}}};
}

// Coproduct of s_sign: s_sign (x) e0 s_sign + s_other (x) e1 s_sign, with the
// idempotents e0, e1 = (1 +- a)/2 expanded.
CoproductExpansion dihedral_splus_style_coproduct(int s_sign, int s_other,
                                                  unsigned long conductor) {
  Rat half(1, 2);
  CycNum h = CycNum::from_rational(half, conductor);
  return {
      CoproductTerm{h, Word{s_sign}, Word{s_sign}},
      CoproductTerm{h, Word{s_sign}, Word{A_GEN, s_sign}},
      CoproductTerm{h, Word{s_other}, Word{s_sign}},
      CoproductTerm{-h, Word{s_other}, Word{A_GEN, s_sign}},
  };
}

LinComb dihedral_antipode(int s_sign, int s_other, unsigned long conductor) {
  // S(s_sign) = e0 s_sign + e1 s_other.
  Rat half(1, 2);
  CycNum h = CycNum::from_rational(half, conductor);
  LinComb l;
  l.add(Word{s_sign}, h);
  l.add(Word{A_GEN, s_sign}, h);
  l.add(Word{s_other}, h);
  l.add(Word{A_GEN, s_other}, -h);
  return l;
}

HopfPtr build_dihedral_type(Family fam, int m) {
  if (m < 2) throw std::invalid_argument("dihedral-type families require m >= 2");
  auto H = std::make_shared<HopfPresentation>();
  H->family = fam;
  H->param = m;
  H->conductor = lcm_ul(2 * static_cast<unsigned long>(m), 4);
  H->gen_names = {"s+", "s-", "a"};
  int kappa = (fam == Family::B4m || fam == Family::Dihedral4m) ? 1 : 0;
  switch (fam) {
    case Family::A4m: H->name = "A4m(m=" + std::to_string(m) + ")"; break;
    case Family::B4m: H->name = "B4m(m=" + std::to_string(m) + ")"; break;
    case Family::Dihedral4m: H->name = "D4m(m=" + std::to_string(m) + ")"; break;
    case Family::DihedralTimesZ2: H->name = "D2mxZ2(m=" + std::to_string(m) + ")"; break;
    default: throw std::logic_error("not a dihedral-type family");
  }
  H->rules = dihedral_rules(m, kappa);
  H->multiplier = std::make_shared<DihedralMultiplier>(m, kappa);
  if (fam == Family::A4m || fam == Family::B4m) {
    H->coproduct = {dihedral_splus_style_coproduct(S_PLUS, S_MINUS, H->conductor),
                    dihedral_splus_style_coproduct(S_MINUS, S_PLUS, H->conductor),
                    grouplike(A_GEN)};
    H->antipode = {dihedral_antipode(S_PLUS, S_MINUS, H->conductor),
                   dihedral_antipode(S_MINUS, S_PLUS, H->conductor),
                   LinComb::of(Word{A_GEN}, CycNum::from_long(1))};
  } else {
    H->coproduct = {grouplike(S_PLUS), grouplike(S_MINUS), grouplike(A_GEN)};
    H->antipode = {LinComb::of(Word{S_PLUS}, CycNum::from_long(1)),
                   LinComb::of(Word{S_MINUS}, CycNum::from_long(1)),
                   LinComb::of(Word{A_GEN}, CycNum::from_long(1))};
  }
  H->counit = {CycNum::from_long(1, H->conductor), CycNum::from_long(1, H->conductor),
               CycNum::from_long(1, H->conductor)};
  H->run_construction_checks(4 * m);
  return H;
}

HopfPtr build_h2n2_style(Family fam, int n) {
  if (n < 2) throw std::invalid_argument("these families require n >= 2");
  auto H = std::make_shared<HopfPresentation>();
  H->family = fam;
  H->param = n;
  H->conductor = 2 * static_cast<unsigned long>(n);
  H->gen_names = {"x", "y", "z"};
  bool group = (fam == Family::WreathZnS2);
  H->name = group ? ("ZnWrS2(n=" + std::to_string(n) + ")")
                  : ("H2n2(n=" + std::to_string(n) + ")");
  LinComb z_square =
      group ? LinComb::of(Word{}, CycNum::from_long(1)) : mu_of_integral(n);
  H->rules = h2n2_style_rules(n, z_square);
  H->multiplier = std::make_shared<RewriteMultiplier>(H->rules, 3);
  if (group) {
    H->coproduct = {grouplike(X_GEN), grouplike(Y_GEN), grouplike(Z_GEN)};
  } else {
    CoproductExpansion dz;
    Rat inv_n(1, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CycNum c = inv_n * CycNum::root_of_unity(H->conductor, -2L * i * j);
        dz.push_back(CoproductTerm{c, concat(repeat(X_GEN, i), Word{Z_GEN}),
                                   concat(repeat(Y_GEN, j), Word{Z_GEN})});
      }
    H->coproduct = {grouplike(X_GEN), grouplike(Y_GEN), std::move(dz)};
  }
  H->counit = {CycNum::from_long(1, H->conductor), CycNum::from_long(1, H->conductor),
               CycNum::from_long(1, H->conductor)};
  H->antipode = {LinComb::of(repeat(X_GEN, n - 1), CycNum::from_long(1)),
                 LinComb::of(repeat(Y_GEN, n - 1), CycNum::from_long(1)),
                 LinComb::of(Word{Z_GEN}, CycNum::from_long(1))};
  H->run_construction_checks(2 * n * n);
  return H;
}

}  // namespace

HopfPtr build_h2n2(int n) { return build_h2n2_style(Family::H2n2, n); }
HopfPtr build_a4m(int m) { return build_dihedral_type(Family::A4m, m); }
HopfPtr build_b4m(int m) { return build_dihedral_type(Family::B4m, m); }

HopfPtr build_group_algebra(GroupKind kind, int param) {
  switch (kind) {
    case GroupKind::WreathZnS2:
      return build_h2n2_style(Family::WreathZnS2, param);
    case GroupKind::Dihedral4m:
      return build_dihedral_type(Family::Dihedral4m, param);
    case GroupKind::DihedralTimesZ2:
      return build_dihedral_type(Family::DihedralTimesZ2, param);
  }
  throw std::invalid_argument("unknown group kind");
}

// ---------------------------------------------------------------------------
// Hopf axiom checks (test helpers).

bool check_coassociative(const HopfPresentation& H, int gen) {
  auto left = H.iterated_coproduct(gen, 3, true);
  auto right = H.iterated_coproduct(gen, 3, false);
  if (left.size() != right.size()) return false;
  for (size_t i = 0; i < left.size(); ++i) {
    if (left[i].second != right[i].second) return false;
    if (left[i].first != right[i].first) return false;
  }
  return true;
}

bool check_counit_axiom(const HopfPresentation& H, int gen) {
  const TensorElem& d = H.coproduct_of_word(Word{gen});
  LinComb left, right;
  for (const auto& [slots, c] : d) {
    left.add(slots.second, c * H.counit_of_word(slots.first));
    right.add(slots.first, c * H.counit_of_word(slots.second));
  }
  LinComb expect = H.normalize(Word{gen});
  return left == expect && right == expect;
}

bool check_antipode_axiom(const HopfPresentation& H, int gen) {
  const TensorElem& d = H.coproduct_of_word(Word{gen});
  LinComb left, right;
  for (const auto& [slots, c] : d) {
    LinComb sl = H.antipode_of_word(slots.first);
    LinComb r1 = H.multiply(sl, LinComb::of(slots.second, CycNum::from_long(1)));
    for (const auto& [w, x] : r1.terms) left.add(w, x * c);
    LinComb sr = H.antipode_of_word(slots.second);
    LinComb r2 = H.multiply(LinComb::of(slots.first, CycNum::from_long(1)), sr);
    for (const auto& [w, x] : r2.terms) right.add(w, x * c);
  }
  LinComb expect = LinComb::of(Word{}, H.counit_of_word(Word{gen}));
  return left == expect && right == expect;
}

bool check_coproduct_respects_rules(const HopfPresentation& H) {
  for (const Rule& r : H.rules) {
    const TensorElem& lhs = H.coproduct_of_word(r.lhs);
    TensorElem rhs = H.coproduct_of(r.rhs);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace hopf
