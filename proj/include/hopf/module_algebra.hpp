#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopf/linalg.hpp"
#include "hopf/presentation.hpp"
#include "hopf/representation.hpp"

namespace hopf {

// Scalar multiple of a normal-form basis monomial of a fixed degree.  The
// zero element is represented by a zero coefficient.
struct Mono {
  size_t idx = 0;
  CycNum coeff;

  bool is_zero() const { return coeff.is_zero(); }
};

// Connected graded algebra with a per-degree monomial basis and one-letter
// multiplication rules.  Every product of two basis monomials is a scalar
// multiple of a basis monomial for the concrete engines below, so products
// are folds of append_gen/prepend_gen steps.
//
// Basis monomials of degree d are indexed 0..dim(d)-1 in graded-lexicographic
// order of their defining words (generator 0 < generator 1 < ...).
class GradedAlgebra {
 public:
  virtual ~GradedAlgebra() = default;

  virtual std::string name() const = 0;
  virtual size_t num_gens() const = 0;
  virtual const std::vector<std::string>& gen_names() const = 0;
  virtual size_t dim(long d) const = 0;

  // Defining word (generator indices, length d) of a basis monomial.
  virtual std::vector<size_t> monomial_word(long d, size_t idx) const = 0;

  // (basis monomial of degree d) * generator and generator * (basis monomial).
  virtual Mono append_gen(long d, size_t idx, size_t g) const = 0;
  virtual Mono prepend_gen(long d, size_t idx, size_t g) const = 0;

  // Spanning vectors of the quadratic relation subspace R inside V tensor V;
  // coordinate i*num_gens()+j stands for gen_i tensor gen_j.
  virtual std::vector<SparseVec> relations() const = 0;

  // Derived helpers.
  std::string monomial_str(long d, size_t idx) const;
  Mono word_mono(const std::vector<size_t>& w) const;  // reduce an arbitrary word
  size_t index_of_word(const std::vector<size_t>& w) const;  // w must be normal
  Mono mono_product(long d1, size_t i1, long d2, size_t i2) const;
  // First letter of the defining word and the index of the remaining tail
  // (the tail of a normal word is again normal).
  std::pair<size_t, size_t> split_first(long d, size_t idx) const;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// k<u,v> / (vu - c uv); basis u^a v^b, index = b.
AlgebraPtr make_skew_plane(const CycNum& c,
                           std::vector<std::string> names = {"u", "v"});

// k<u,v> / (u^2 + gamma v^2) with gamma != 0; basis u^k (vu)^q v^delta,
// delta in {0,1}, index = 2q + delta.
AlgebraPtr make_square_exchange_plane(const CycNum& gamma,
                                      std::vector<std::string> names = {"u",
                                                                        "v"});

// Ore extension base[t; sigma]: t g = sigma(g) t for base generators g.
// sigma must map every generator to a scalar multiple of a single generator
// (true for every instance used here).  Basis: (base monomial) * t^k.
AlgebraPtr make_ore_extension(AlgebraPtr base, const CycMatrix& sigma,
                              std::string t_name = "t");

// A graded algebra together with a Hopf-module structure on its degree-one
// part.  The quadratic relations must span a submodule of V tensor V for the
// action to descend; check_module_algebra verifies this and more.
struct ModuleAlgebra {
  HopfPtr H;
  AlgebraPtr alg;
  Representation deg1;  // module structure on span(generators of alg)
  std::string name;
  std::string relation_desc;
  std::vector<RepLabel> deg1_labels;  // catalog labels of the degree-one part
  bool inner_faithful = false;
};

// Graded action computed by the coproduct recursion
//   h . (x w) = sum h_(1)(x) * h_(2)(w)
// memoized per (basis word of H, degree).  Matrices are stored as sparse
// columns: column j lists the image of basis monomial j.
class ActionTable {
 public:
  explicit ActionTable(const ModuleAlgebra& M);

  // Action of a basis word / element / generator of H on A_d.
  const std::vector<SparseVec>& word_action(const Word& w, long d);
  std::vector<SparseVec> action_of(const LinComb& x, long d);
  const std::vector<SparseVec>& generator_action(int gen, long d);
  CycMatrix dense_generator_action(int gen, long d);

  const ModuleAlgebra& module() const { return *M_; }
  const std::vector<Word>& carrier() const { return carrier_; }

 private:
  const ModuleAlgebra* M_;
  long built_ = -1;
  std::vector<Word> carrier_;
  std::map<Word, size_t> carrier_index_;
  std::map<Word, CycMatrix> deg1_cache_;
  // table_[carrier position][degree] = sparse columns.
  std::vector<std::vector<std::vector<SparseVec>>> table_;
  // split_cache_[degree][monomial] = (first letter, tail index).
  std::vector<std::vector<std::pair<size_t, size_t>>> split_cache_;

  const CycMatrix& deg1_image(const Word& w);
  void close_carrier();
  void ensure(long d);
  std::vector<SparseVec> build_word_degree(const Word& w, long d);
};

// Independent oracle: the action of a Hopf generator on A_d computed through
// tensor representatives in V^{tensor d} (iterated coproduct, then reduction
// to normal form).  Exponential in d; small degrees only.
std::vector<SparseVec> action_via_tensor(const ModuleAlgebra& M, int gen,
                                         long d);

// Brute-force dimension of V^{tensor d} / (sum_i V^i R V^{d-2-i}) computed
// from the relations alone, without the engine's rewriting rules.
size_t tensor_quotient_dim(const GradedAlgebra& A, long d);

// Inductive certificate that the engine's per-degree bases realize the exact
// quadratic quotient: in coordinates V tensor A_{d-1}, the embedded relation
// image must (a) have rank num_gens*dim(d-1) - dim(d), (b) be killed by the
// one-letter multiplication map, whose (c) claimed values on split basis
// monomials are exact.  Valid for all degrees, cheap, and independent of how
// the closed-form rules were derived.
struct EngineCertificate {
  bool ok = false;
  long max_degree = 0;
  std::string detail;  // empty when ok
};
EngineCertificate certify_engine(const GradedAlgebra& A, long max_degree);

struct ModuleAlgebraReport {
  bool relations_stable = false;
  bool engine_certified = false;
  bool actions_well_defined = false;
  bool multiplicative = false;
  long engine_degree = 0;
  long action_degree = 0;
  std::string detail;  // empty when everything holds

  bool ok() const {
    return relations_stable && engine_certified && actions_well_defined &&
           multiplicative;
  }
};

// Full certificate: relation submodule test, engine certification up to
// engine_degree, tensor-route comparison and product rule up to
// action_degree (kept small; the tensor route is exponential).
ModuleAlgebraReport check_module_algebra(const ModuleAlgebra& M,
                                         long engine_degree,
                                         long action_degree);

// Named module algebras acted on by each family, with default parameters
// (two-dimensional seed of index (1,0) resp. 1; sign parameter +1).
//   H_{2n^2}, n = 2:  KP-a..KP-d (relations u^2+v^2, u^2-v^2, vu+i uv, vu-i uv)
//   H_{2n^2}, n >= 3: Aminus, Aplus
//   B_{4m} and odd A_{4m}: Aminus, Aplus
//   even A_{4m}: A1minus..A5minus, A1plus..A5plus (three-dimensional, Ore)
std::vector<std::string> standard_action_names(const HopfPresentation& H);
ModuleAlgebra make_standard_action(const HopfPtr& H, const std::string& name);
std::vector<ModuleAlgebra> standard_actions(const HopfPtr& H);

// Parameterized constructors behind the standard catalog.
ModuleAlgebra make_h2n2_module(const HopfPtr& H, int i, int j, int sign);
ModuleAlgebra make_b4m_module(const HopfPtr& H, int i, int sign);
ModuleAlgebra make_a4m_odd_module(const HopfPtr& H, int i, int sign);
ModuleAlgebra make_a4m_even_module(const HopfPtr& H, int k, int i, int eps,
                                   int sign);

// Sufficient-condition Ore extension: for a trivial t the twist sigma must be
// an H-module map; for a nontrivial one-dimensional t the label must in
// addition satisfy the convolution identity
//   sum rho(h_(1)) h_(2) = sum h_(1) rho(h_(2))
// on every generator.  Throws std::runtime_error("extension condition fails
// ...") naming the violating generator otherwise.
ModuleAlgebra ore_extend(const ModuleAlgebra& M, const CycMatrix& sigma,
                         const RepLabel& t_label);

// Trivial one-dimensional label of the family (counit).
RepLabel trivial_label(const HopfPresentation& H);

}  // namespace hopf
