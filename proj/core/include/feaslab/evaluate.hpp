#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "feaslab/ext_rational.hpp"
#include "feaslab/groups.hpp"
#include "feaslab/nat_value.hpp"
#include "feaslab/term.hpp"

namespace feaslab {

/// Value of a closed term built from 0, s, +, *, exp and natural literals.
/// Throws std::invalid_argument on open terms or foreign symbols and
/// std::domain_error when the value cannot be represented within the budget.
NatValue eval_nat(const Term& t, std::size_t bit_budget = kDefaultBitBudget);

/// eval_nat restricted to exactly representable values.
BigInt eval_exact_nat(const Term& t);

/// Value of a closed rational-signature term. mp<ij>(a,b,c,d,k) is entry ij
/// of (a b; c d)^k. Throws UndefinedOperation on partial operations.
ExtRational eval_rational(const Term& t);

enum class Presentation { Free, BS12 };

using GroupValue = std::variant<Word, BSElement>;

/// Free reduced word of a group term; variables act as extra free generators.
Word term_to_word(const Term& t);
/// Value of a closed group term under the presentation.
GroupValue eval_group(const Term& t, Presentation p);
std::string to_string(const GroupValue& v);

enum class Verdict { Equal, Unequal, Undecided };
const char* to_string(Verdict v);

// Ground-equality deciders used by the theories. Closed terms are compared by
// value; open terms through a normal form, answering Undecided when the
// normal forms differ.
Verdict arith_equal(const Term& s, const Term& t);
Verdict group_equal(const Term& s, const Term& t, Presentation p);
Verdict rational_equal(const Term& s, const Term& t);

}  // namespace feaslab
