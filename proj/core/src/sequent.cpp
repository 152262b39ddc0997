#include "feaslab/sequent.hpp"

#include <algorithm>

namespace feaslab {

bool Sequent::has_free(std::string_view var) const {
  auto pred = [&](const Formula& f) { return f.has_free(var); };
  return std::any_of(antecedent.begin(), antecedent.end(), pred) ||
         std::any_of(succedent.begin(), succedent.end(), pred);
}

void Sequent::collect_free_variables(std::vector<std::string>& out) const {
  for (const auto* side : {&antecedent, &succedent}) {
    for (const auto& f : *side) out.insert(out.end(), f.free_variables().begin(), f.free_variables().end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

bool same_multiset(std::span<const Formula> a, std::span<const Formula> b) {
  if (a.size() != b.size()) return false;
  std::vector<std::uint64_t> x, y;
  x.reserve(a.size());
  y.reserve(b.size());
  for (const auto& f : a) x.push_back(f.id());
  for (const auto& f : b) y.push_back(f.id());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool same_sequent(const Sequent& a, const Sequent& b) {
  return same_multiset(a.antecedent, b.antecedent) && same_multiset(a.succedent, b.succedent);
}

std::optional<std::vector<Formula>> remove_one(std::span<const Formula> v, const Formula& f) {
  auto it = std::find(v.begin(), v.end(), f);
  if (it == v.end()) return std::nullopt;
  std::vector<Formula> out(v.begin(), it);
  out.insert(out.end(), it + 1, v.end());
  return out;
}

std::vector<Formula> concat(std::span<const Formula> a, std::span<const Formula> b) {
  std::vector<Formula> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace feaslab
