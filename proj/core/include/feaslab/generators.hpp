#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "feaslab/evaluate.hpp"
#include "feaslab/mat2.hpp"
#include "feaslab/proof.hpp"
#include "feaslab/theory.hpp"

namespace feaslab {

using SemanticValue = std::variant<NatValue, Word, BSElement, ExtRational, Mat2>;
std::string describe(const SemanticValue& v);

struct GenReport {
  Theory theory;
  Proof proof;
  /// The single succedent formula of the end sequent.
  Formula goal;
  /// Value the goal's term is built to denote; absent when it is too large
  /// to compute.
  std::optional<SemanticValue> value;
  SizeStats stats;
};

/// ⊢ F(s^n(0)) by n successor steps.
GenReport gen_unary(std::size_t n);
/// ⊢ F(2^n) through t_{k+1} = t_k * 2. Requires n >= 1.
GenReport gen_geometric(std::size_t n);
/// ⊢ F(2^{2^n}) by n cut-chained squaring lemmas F(t) ⊢ F(t^2).
GenReport gen_square_cut(std::size_t n);
/// ⊢ F(2^{2^{2^n}}) through ∀x(F(x) → F(x^k)) ⊢ ∀x(F(x) → F(x^{k²})).
GenReport gen_quantifier(std::size_t n);

enum class PowerMode { Linear, Squaring, Quantifier };
/// ⊢ F(g^n) (linear), F(g^{2^n}) (squaring) or F(g^{2^{2^n}}) (quantifier)
/// for a generator g of a group theory.
GenReport gen_group_power(const Theory& th, std::string_view generator, std::size_t n, PowerMode mode);
/// ⊢ F(y^{2^{2^n}}) in ⟨x, y | y² = xyx⁻¹⟩ via y^{2^m} = x^m y x^{-m}.
GenReport gen_distorted(std::size_t n);

enum class MatrixMode { Squaring, Quantifier };
/// ⊢ φ(A^{2^n}) (squaring) or ⊢ φ(A^{2^{2^n}}) (quantifier).
/// Throws std::invalid_argument when det A = 0.
GenReport gen_matrix_power(const Mat2& a, std::size_t n, MatrixMode mode);
/// ⊢ F(A^{2^n}·x) for a finite x. Throws UndefinedOperation when the
/// Möbius step divides by zero.
GenReport gen_rational_orbit(const Mat2& a, const ExtRational& x, std::size_t n);

/// ⊢ F(q) for a rational literal q, built from F(0), F(1) and the closure
/// axioms.
Proof rational_literal_proof(const Theory& th, const BigRational& q);

/// Options for the name-based entry point used by the CLI and benchmarks.
struct GenOptions {
  std::string theory;  // empty: the generator's default theory
  std::string generator_symbol = "x";
  PowerMode power_mode = PowerMode::Squaring;
  MatrixMode matrix_mode = MatrixMode::Squaring;
  Mat2 matrix = Mat2::of(2, 1, 1, 1);
  ExtRational x{0L};
};

/// Names: unary, geometric, square-cut, quantifier, group-power, distorted,
/// matrix-power, rational-orbit. Throws std::invalid_argument otherwise.
GenReport generate(std::string_view name, std::size_t n, const GenOptions& opts = {});
const std::vector<std::string>& generator_names();

/// Terms shared by the recipes.
Term arith_two();
/// Exponent term denoting 2^{2^j}: the base literal for j = 0, else
/// exp(2, exp(2, j)). `arith` selects successor numerals over literals.
Term double_exponent(std::size_t j, bool arith);

}  // namespace feaslab
