#include "feaslab/oracle.hpp"

#include <deque>
#include <map>
#include <unordered_set>

#include "feaslab/checker.hpp"
#include "feaslab/theory.hpp"

namespace feaslab {

namespace {

const Theory& arith() {
  static const Theory th = arith_feasibility();
  return th;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

}  // namespace

CostModel calibrated_cost_model() { return CostModel{1, 1, 1}; }

Term CostTable::construction(std::uint64_t n) const {
  const Entry& e = entries.at(n);
  switch (e.step) {
    case Step::Leaf: return Term::constant("0");
    case Step::Successor: return Term::apply("s", {construction(e.a)});
    case Step::Plus: return Term::apply("+", {construction(e.a), construction(e.b)});
    case Step::Times: return Term::apply("*", {construction(e.a), construction(e.b)});
  }
  return {};
}

CostTable min_tree_derivation(std::uint64_t n, const CostModel& model, std::uint64_t max_bound) {
  if (n > max_bound) throw BoundExceeded("oracle bound " + std::to_string(max_bound) + " exceeded by " + std::to_string(n));
  CostTable table;
  table.bound = n;
  table.model = model;
  table.entries.resize(n + 1);
  table.entries[0] = {model.k_leaf, CostTable::Step::Leaf, 0, 0};
  // Values grouped by cost, so sums only scan values cheap enough to help.
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_cost;
  by_cost[model.k_leaf].push_back(0);
  for (std::uint64_t v = 1; v <= n; ++v) {
    CostTable::Entry best{table.entries[v - 1].cost + model.k_unary, CostTable::Step::Successor, v - 1, 0};
    for (std::uint64_t a = 2; a * a <= v; ++a) {
      if (v % a != 0) continue;
      const std::uint64_t c = table.entries[a].cost + table.entries[v / a].cost + model.k_binary;
      if (c < best.cost) best = {c, CostTable::Step::Times, a, v / a};
    }
    for (const auto& [c1, values] : by_cost) {
      // The cheaper summand costs c1, so the pair costs at least 2*c1 + k_binary.
      if (2 * c1 + model.k_binary >= best.cost) break;
      for (std::uint64_t a : values) {
        if (a == 0 || a >= v) continue;
        const std::uint64_t c = c1 + table.entries[v - a].cost + model.k_binary;
        if (c < best.cost) best = {c, CostTable::Step::Plus, a, v - a};
      }
    }
    table.entries[v] = best;
    by_cost[best.cost].push_back(v);
  }
  return table;
}

Proof construction_proof(const Term& t) {
  const Theory& th = arith();
  if (t.is_constant() && t.symbol() == "0") return theory_axiom(th, "F:zero", {});
  if (t.is_application() && t.symbol() == "s" && t.args().size() == 1) {
    return theory_axiom(th, "F:successor", {{"x", t.args()[0]}}, {construction_proof(t.args()[0])}, {0});
  }
  if (t.is_application() && (t.symbol() == "+" || t.symbol() == "*") && t.args().size() == 2) {
    return theory_axiom(th, t.symbol() == "+" ? "F:plus" : "F:times", {{"x", t.args()[0]}, {"y", t.args()[1]}},
                        {construction_proof(t.args()[0]), construction_proof(t.args()[1])}, {0, 1});
  }
  throw std::invalid_argument("not a construction term");
}

std::optional<Proof> enumerate_min_proof(std::uint64_t n, std::uint64_t budget) {
  if (budget > kMaxEnumerationLines) {
    throw BoundExceeded("enumeration budget above " + std::to_string(kMaxEnumerationLines) + " lines");
  }
  struct Candidate {
    Term term;
    std::uint64_t value;
  };
  // by_size[k]: every construction term with k symbols, whose proof has k lines.
  std::vector<std::vector<Candidate>> by_size(budget + 1);
  const auto found = [&](const Candidate& c) -> std::optional<Proof> {
    if (c.value != n) return std::nullopt;
    Proof p = construction_proof(c.term);
    check(p, arith());
    return p;
  };
  for (std::uint64_t k = 1; k <= budget; ++k) {
    auto& level = by_size[k];
    if (k == 1) {
      level.push_back({Term::constant("0"), 0});
    } else {
      for (const auto& c : by_size[k - 1]) level.push_back({Term::apply("s", {c.term}), sat_add(c.value, 1)});
      for (std::uint64_t i = 1; i + 1 < k; ++i) {
        const std::uint64_t j = k - 1 - i;
        for (const auto& l : by_size[i]) {
          for (const auto& r : by_size[j]) {
            level.push_back({Term::apply("+", {l.term, r.term}), sat_add(l.value, r.value)});
            level.push_back({Term::apply("*", {l.term, r.term}), sat_mul(l.value, r.value)});
          }
        }
      }
    }
    for (const auto& c : level) {
      if (auto p = found(c)) return p;
    }
  }
  return std::nullopt;
}

namespace {

template <class Element, class Key, class Step>
std::size_t bfs(const Element& identity, const Element& target, const std::vector<Element>& steps, Key key, Step step,
                std::size_t radius) {
  const std::string goal = key(target);
  std::unordered_set<std::string> seen{key(identity)};
  std::vector<Element> frontier{identity};
  for (std::size_t d = 0;; ++d) {
    for (const auto& e : frontier) {
      if (key(e) == goal) return d;
    }
    if (d == radius) break;
    std::vector<Element> next;
    for (const auto& e : frontier) {
      for (const auto& s : steps) {
        Element m = step(e, s);
        if (seen.insert(key(m)).second) next.push_back(std::move(m));
      }
    }
    frontier = std::move(next);
  }
  throw RadiusExhausted("target not within radius " + std::to_string(radius));
}

}  // namespace

std::size_t word_metric_distance(const GroupValue& target, Presentation presentation,
                                 const std::vector<std::string>& generators, std::size_t radius) {
  if (presentation == Presentation::BS12) {
    const BSElement x = BSElement::x();
    const BSElement y = BSElement::y();
    const std::vector<BSElement> steps{x, bs_inverse(x), y, bs_inverse(y)};
    const BSElement* goal = std::get_if<BSElement>(&target);
    const BSElement converted = goal != nullptr ? *goal : bs_normalize(std::get<Word>(target));
    return bfs(
        BSElement(), converted, steps, [](const BSElement& e) { return e.to_string(); }, bs_multiply, radius);
  }
  const Word* goal = std::get_if<Word>(&target);
  if (goal == nullptr) throw std::invalid_argument("free presentation needs a word");
  std::vector<Word> steps;
  for (const auto& g : generators) {
    steps.push_back(Word{Letter{g, 1}});
    steps.push_back(Word{Letter{g, -1}});
  }
  return bfs(
      Word{}, free_reduce(*goal), steps, [](const Word& w) { return to_string(w); }, free_multiply, radius);
}

}  // namespace feaslab
