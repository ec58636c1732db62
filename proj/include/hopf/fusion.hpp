#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopf/representation.hpp"

namespace hopf {

// Grothendieck-ring data: ordered irreducible labels plus the dense cube of
// structure constants N[a][b][c] = multiplicity of labels[c] in
// labels[a] (x) labels[b].
struct FusionTable {
  HopfPtr H;
  std::vector<RepLabel> labels;
  std::vector<int> cube;

  size_t size() const { return labels.size(); }
  size_t index_of(const RepLabel& l) const;
  int mult(size_t a, size_t b, size_t c) const {
    return cube[(a * size() + b) * size() + c];
  }
  int& mult_ref(size_t a, size_t b, size_t c) {
    return cube[(a * size() + b) * size() + c];
  }
};

// Ground truth: tensor generator matrices via the coproduct and decompose by
// intertwiner ranks.
FusionTable build_fusion_table(const HopfPtr& H);

// The closed-form product of two irreducible labels (case split per family),
// canonicalized.  Used as the oracle against build_fusion_table.
std::vector<std::pair<RepLabel, int>> expected_tensor(const HopfPresentation& H,
                                                      const RepLabel& x,
                                                      const RepLabel& y);
FusionTable expected_fusion_table(const HopfPtr& H);

bool tables_equal(const FusionTable& a, const FusionTable& b);
bool is_commutative(const FusionTable& t);

// Least set of labels containing every summand of every tensor power of the
// (direct sum of the) seed labels.  Seeds may be convenience labels; they are
// canonicalized first.  Throws if no fixed point is reached within
// (number of labels)^2 rounds.
std::vector<RepLabel> generation_closure(const FusionTable& t,
                                         const std::vector<RepLabel>& seed);
bool closure_is_all(const FusionTable& t, const std::vector<RepLabel>& seed);

// Closed-form inner-faithfulness verdict for the seeds covered by the
// classification theorems: a single two-dimensional label (all three Hopf
// families), or a two-dimensional plus a one-dimensional label for the A-type
// family at even parameter.  Throws std::invalid_argument for other shapes.
bool inner_faithful_criterion(const HopfPresentation& H,
                              const std::vector<RepLabel>& reps);

// Does the position-wise bijection carry the structure constants of t1 to t2?
bool compare_fusion_isomorphism(const FusionTable& t1, const FusionTable& t2,
                                const std::vector<std::pair<RepLabel, RepLabel>>& bij);

// Backtracking search for a structure-constant-preserving bijection.
std::optional<std::vector<std::pair<RepLabel, RepLabel>>> find_fusion_isomorphism(
    const FusionTable& t1, const FusionTable& t2);

nlohmann::ordered_json fusion_to_json(const FusionTable& t);

}  // namespace hopf
