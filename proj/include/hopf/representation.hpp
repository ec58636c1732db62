#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hopf/linalg.hpp"
#include "hopf/presentation.hpp"

namespace hopf {

// Tagged label for an irreducible (or convenience) representation.
//
// Kinds and the meaning of the integer fields:
//   OneDimCyc       T_a^b   : character index a, sign b = +-1   (x/y/z families)
//   TwoDimCyc       pi_{a,b}: two-dimensional, indices a, b     (x/y/z families)
//   OneDimSigns     T_{a,b,c}: all of a,b,c in {+1,-1}          (s+/s-/a families)
//   TwoDimIndex     pi_a    : two-dimensional, single index     (B-type)
//   TwoDimIndexSign pi_a^b  : index a, sign b = +-1             (A-type)
enum class RepKind { OneDimCyc, TwoDimCyc, OneDimSigns, TwoDimIndex, TwoDimIndexSign };

struct RepLabel {
  RepKind kind{};
  int a = 0;
  int b = 0;
  int c = 0;
  friend auto operator<=>(const RepLabel&, const RepLabel&) = default;
  int dim() const;
  // Textual forms: "T_1_+", "pi_1_2", "T_+_-_+", "pi_2", "pi_2_-".
  std::string str() const;
  static RepLabel parse(const std::string& text);
};

RepLabel label_T_cyc(int k, int sign);
RepLabel label_pi_cyc(int i, int j);
RepLabel label_T_signs(int c1, int c2, int c3);
RepLabel label_pi_index(int i);
RepLabel label_pi_index_sign(int i, int eps);

struct Representation {
  HopfPtr H;
  std::optional<RepLabel> label;
  std::vector<CycMatrix> gen_images;

  int dim() const { return static_cast<int>(gen_images.empty() ? 0 : gen_images[0].rows()); }
  CycMatrix word_image(const Word& w) const;
  CycMatrix of(const LinComb& x) const;
};

// Canonical decomposition of a label: one entry when the label is (equivalent
// to) an irreducible catalog label, two entries when it is a reducible
// convenience label (equal-index pi's and boundary A-type indices).
std::vector<RepLabel> canonical_label(const HopfPresentation& H, const RepLabel& L);
bool label_is_irreducible(const HopfPresentation& H, const RepLabel& L);

// Build generator matrices for a label (convenience labels allowed); the
// result always passes check_is_module.
Representation build_representation(const HopfPtr& H, const RepLabel& L);

std::vector<RepLabel> irreducible_labels(const HopfPresentation& H);
std::vector<Representation> irreducible_catalog(const HopfPtr& H);

// Throws std::runtime_error naming the offending relation if the generator
// matrices fail any declared relation.
void check_is_module(const Representation& rho);

Representation tensor_rep(const Representation& x, const Representation& y);
Representation direct_sum(const Representation& x, const Representation& y);

// Basis of the space of module maps S -> rho, i.e. matrices M with
// M rho_S(g) = rho(g) M for every generator g.
std::vector<CycMatrix> intertwiners(const Representation& S, const Representation& rho);

struct DecompositionPart {
  RepLabel label;
  int multiplicity = 0;
  std::vector<CycMatrix> witnesses;  // injective module maps S -> rho
};

// Multiplicities of every catalog label inside rho (only nonzero parts are
// returned, in catalog order).  Throws if the multiplicities do not add up to
// the dimension of rho.
std::vector<DecompositionPart> decompose(const Representation& rho);
std::vector<std::pair<RepLabel, int>> decompose_multiset(const Representation& rho);

}  // namespace hopf
