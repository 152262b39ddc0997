#pragma once

#include <stdexcept>
#include <string>

#include "feaslab/proof.hpp"
#include "feaslab/theory.hpp"

namespace feaslab {

enum class CheckErrorKind { RuleMismatch, Eigenvariable, OracleReject, UnknownAxiom, UndefinedOperation, IllFormed };

const char* to_string(CheckErrorKind k);

class CheckError : public std::runtime_error {
 public:
  CheckError(CheckErrorKind kind, std::string path, const std::string& reason)
      : std::runtime_error(std::string(to_string(kind)) + " at " + path + ": " + reason),
        kind_(kind),
        path_(std::move(path)) {}

  [[nodiscard]] CheckErrorKind kind() const { return kind_; }
  /// Premise indices from the root, e.g. "root.1.0".
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  CheckErrorKind kind_;
  std::string path_;
};

/// Verifies every inference of `p` against `th`; throws CheckError on the
/// first failure, otherwise returns the proof's size statistics.
SizeStats check(const Proof& p, const Theory& th);

}  // namespace feaslab
