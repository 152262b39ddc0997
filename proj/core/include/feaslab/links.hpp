#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "feaslab/proof.hpp"

namespace feaslab {

/// A formula occurrence in a premise of a node.
struct OccRef {
  int premise = 0;
  bool succedent = false;
  std::size_t index = 0;
};

/// How the formula occurrences of one inference relate to those of its
/// premises.
struct NodeLinks {
  /// Passive source of each conclusion occurrence; empty for occurrences
  /// created by the rule.
  std::vector<std::optional<OccRef>> ante, succ;

  struct Created {
    bool succedent;
    std::size_t index;
    /// Hypothesis index for the antecedent atoms of a theory axiom, else -1.
    int hypothesis = -1;
  };
  std::vector<Created> created;

  /// Premise occurrences consumed by the rule, in rule order: cut formulas,
  /// contracted copies, components of a principal formula, discharged
  /// hypotheses.
  std::vector<OccRef> active;
};

/// Throws std::logic_error when the node does not follow from its premises.
NodeLinks node_links(const ProofNode& n, const Theory& th);

}  // namespace feaslab
