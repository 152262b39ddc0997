#pragma once

#include <string>
#include <string_view>

#include "feaslab/proof.hpp"
#include "feaslab/theory.hpp"

namespace feaslab {

struct ProofDocument {
  Theory theory;
  Proof proof;
};

/// JSON text {"theory": <selector>, "proof": <node>} where a node is
/// {"rule", "conclusion", [formula, term, var, axiom, instantiation,
/// discharge], "premises"}. Formulas and sequents are in the text syntax.
std::string proof_to_json(const Proof& p, const Theory& th);

/// Inverse of proof_to_json; throws std::invalid_argument (or ParseError)
/// on malformed input. Does not check the proof.
ProofDocument proof_from_json(std::string_view text);

}  // namespace feaslab
