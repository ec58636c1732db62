#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopf/cyclotomic.hpp"

namespace hopf {

// A word in the algebra generators (sequence of generator indices).  The
// empty word is the identity.
using Word = std::vector<int>;

std::string word_str(const Word& w, const std::vector<std::string>& gen_names);

// Finite linear combination of words with cyclotomic coefficients.
class LinComb {
 public:
  std::map<Word, CycNum> terms;  // no zero coefficients

  static LinComb zero() { return LinComb(); }
  static LinComb of(Word w, CycNum c);

  void add(const Word& w, const CycNum& c);
  LinComb operator+(const LinComb& o) const;
  LinComb operator-(const LinComb& o) const;
  LinComb scaled(const CycNum& c) const;
  bool operator==(const LinComb& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
  std::string str(const std::vector<std::string>& gen_names) const;
};

// One term coeff * (left tensor right) of a coproduct expansion.
struct CoproductTerm {
  CycNum coeff;
  Word left;
  Word right;
};
using CoproductExpansion = std::vector<CoproductTerm>;

// An element of H tensor H, normalized slot-wise.
using TensorElem = std::map<std::pair<Word, Word>, CycNum>;

struct Rule {
  Word lhs;
  LinComb rhs;
};

// Multiplication backend: normalizes words against the defining relations and
// enumerates the canonical basis.
class Multiplier {
 public:
  virtual ~Multiplier() = default;
  virtual LinComb normalize(const Word& w) const = 0;
  virtual std::vector<Word> enumerate_basis() const = 0;
};

enum class Family {
  H2n2,         // skew group-ring extension of k[Z_n x Z_n] by the swap
  A4m,          // dihedral-type, rotation^m = 1
  B4m,          // dihedral-type, rotation^m = central a
  WreathZnS2,   // group algebra of Z_n wr S_2
  Dihedral4m,   // group algebra of the dihedral group of order 4m
  DihedralTimesZ2,  // group algebra of D_{2m} x Z_2
};

bool family_is_group_algebra(Family f);
// True for the families presented on generators {s+, s-, a}.
bool family_is_dihedral_type(Family f);

class HopfPresentation {
 public:
  std::string name;
  Family family = Family::H2n2;
  int param = 0;  // n for H2n2/wreath families, m for the dihedral-type ones
  int dim = 0;
  unsigned long conductor = 1;
  std::vector<std::string> gen_names;
  std::vector<Rule> rules;                     // declared defining relations
  std::vector<CoproductExpansion> coproduct;   // per generator
  std::vector<CycNum> counit;                  // per generator
  std::vector<LinComb> antipode;               // per generator
  std::vector<Word> basis;                     // canonical basis words
  std::map<Word, size_t> basis_index;

  size_t generator_count() const { return gen_names.size(); }

  LinComb normalize(const Word& w) const;
  LinComb multiply(const LinComb& a, const LinComb& b) const;
  CycNum counit_of_word(const Word& w) const;
  CycNum counit_of(const LinComb& x) const;
  LinComb antipode_of_word(const Word& w) const;  // anti-homomorphic extension

  // Coproduct of a basis word (memoized) / of a general element.
  const TensorElem& coproduct_of_word(const Word& w) const;
  TensorElem coproduct_of(const LinComb& x) const;
  // Product in H tensor H with slot-wise normalization.
  TensorElem tensor_mult(const TensorElem& x, const TensorElem& y) const;

  // Iterated coproduct of a generator with k output slots (k >= 1).  When
  // expand_left is true the expansion repeatedly splits the leftmost slot,
  // otherwise the rightmost; coassociativity makes both agree.
  std::vector<std::pair<CycNum, std::vector<Word>>> iterated_coproduct(
      int gen, int k, bool expand_left = true) const;

  // Construction-time certificates (throw std::runtime_error on failure).
  void run_construction_checks(int expected_dim);

  std::shared_ptr<const Multiplier> multiplier;

 private:
  mutable std::map<Word, TensorElem> coproduct_cache_;
};

using HopfPtr = std::shared_ptr<const HopfPresentation>;

// Builders.  All scalars are created at the presentation's ambient conductor:
// 2n for the H2n2/wreath families and lcm(2m, 4) for the dihedral-type ones.
HopfPtr build_h2n2(int n);
HopfPtr build_a4m(int m);
HopfPtr build_b4m(int m);

enum class GroupKind { WreathZnS2, Dihedral4m, DihedralTimesZ2 };
HopfPtr build_group_algebra(GroupKind kind, int param);

// Hopf-axiom checks used by the test suites; `which` selects the generator.
bool check_coassociative(const HopfPresentation& H, int gen);
bool check_counit_axiom(const HopfPresentation& H, int gen);
bool check_antipode_axiom(const HopfPresentation& H, int gen);
bool check_coproduct_respects_rules(const HopfPresentation& H);

}  // namespace hopf
