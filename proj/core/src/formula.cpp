#include "feaslab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace feaslab {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void union_into(std::vector<std::string>& out, const std::vector<std::string>& more) {
  if (more.empty()) return;
  std::vector<std::string> merged;
  merged.reserve(out.size() + more.size());
  std::set_union(out.begin(), out.end(), more.begin(), more.end(), std::back_inserter(merged));
  out = std::move(merged);
}

bool is_binder(FormulaKind k) { return k == FormulaKind::Forall || k == FormulaKind::Exists; }

}  // namespace

class FormulaTable {
 public:
  static FormulaTable& instance() {
    static FormulaTable table;
    return table;
  }

  Formula intern(FormulaKind kind, std::string_view symbol, std::vector<Term> args,
                 std::vector<Formula> children) {
    std::size_t h = mix(static_cast<std::size_t>(kind) + 17, std::hash<std::string_view>{}(symbol));
    for (const auto& a : args) h = mix(h, static_cast<std::size_t>(a.id()));
    for (const auto& c : children) h = mix(h, static_cast<std::size_t>(c.id()) * 31 + 7);

    std::lock_guard lock(mutex_);
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      const FormulaNode* n = it->second;
      if (n->kind == kind && n->symbol == symbol && n->args == args && n->children == children) {
        return Formula(n);
      }
    }
    std::vector<std::string> fv;
    for (const auto& a : args) union_into(fv, a.free_variables());
    for (const auto& c : children) union_into(fv, c.free_variables());
    if (is_binder(kind)) {
      auto it = std::lower_bound(fv.begin(), fv.end(), symbol,
                                 [](const std::string& a, std::string_view b) { return a < b; });
      if (it != fv.end() && *it == symbol) fv.erase(it);
    }
    nodes_.push_back(FormulaNode{kind, std::string(symbol), std::move(args), std::move(children),
                                 nodes_.size(), h, std::move(fv)});
    const FormulaNode* n = &nodes_.back();
    index_.emplace(h, n);
    return Formula(n);
  }

 private:
  std::mutex mutex_;
  std::deque<FormulaNode> nodes_;
  std::unordered_multimap<std::size_t, const FormulaNode*> index_;
};

Formula Formula::atom(std::string_view predicate, std::vector<Term> args) {
  for (const auto& a : args) {
    if (a.is_null()) throw std::invalid_argument("null term in atom");
  }
  return FormulaTable::instance().intern(FormulaKind::Atom, predicate, std::move(args), {});
}

Formula Formula::negation(const Formula& f) {
  return FormulaTable::instance().intern(FormulaKind::Not, "", {}, {f});
}
Formula Formula::conjunction(const Formula& a, const Formula& b) {
  return FormulaTable::instance().intern(FormulaKind::And, "", {}, {a, b});
}
Formula Formula::disjunction(const Formula& a, const Formula& b) {
  return FormulaTable::instance().intern(FormulaKind::Or, "", {}, {a, b});
}
Formula Formula::implication(const Formula& a, const Formula& b) {
  return FormulaTable::instance().intern(FormulaKind::Implies, "", {}, {a, b});
}
Formula Formula::forall(std::string_view var, const Formula& body) {
  return FormulaTable::instance().intern(FormulaKind::Forall, var, {}, {body});
}
Formula Formula::exists(std::string_view var, const Formula& body) {
  return FormulaTable::instance().intern(FormulaKind::Exists, var, {}, {body});
}

FormulaKind Formula::kind() const { return node_->kind; }
bool Formula::is_equality() const { return is_atom() && node_->symbol == "=" && node_->args.size() == 2; }
const std::string& Formula::predicate() const { return node_->symbol; }
std::span<const Term> Formula::args() const { return node_->args; }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
const std::string& Formula::bound_var() const { return node_->symbol; }
std::uint64_t Formula::id() const { return node_->id; }
const std::vector<std::string>& Formula::free_variables() const { return node_->free_vars; }

bool Formula::has_free(std::string_view var) const {
  const auto& fv = node_->free_vars;
  return std::binary_search(fv.begin(), fv.end(), var, [](const auto& a, const auto& b) {
    return std::string_view(a) < std::string_view(b);
  });
}

std::string fresh_variable(std::string_view base, const std::function<bool(std::string_view)>& taken) {
  std::string stem(base);
  // x_12 -> x
  if (auto pos = stem.rfind('_'); pos != std::string::npos && pos + 1 < stem.size() &&
                                  std::all_of(stem.begin() + static_cast<long>(pos) + 1, stem.end(),
                                              [](unsigned char c) { return std::isdigit(c); })) {
    stem.resize(pos);
  }
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + "_" + std::to_string(k);
    if (!taken(candidate)) return candidate;
  }
}

Formula substitute(const Formula& f, std::string_view var, const Term& replacement) {
  std::unordered_map<const FormulaNode*, Formula> memo;
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (!g.has_free(var)) return g;
    if (auto it = memo.find(g.node()); it != memo.end()) return it->second;
    Formula out;
    switch (g.kind()) {
      case FormulaKind::Atom: {
        std::vector<Term> args;
        for (const auto& a : g.args()) args.push_back(substitute(a, var, replacement));
        out = Formula::atom(g.predicate(), std::move(args));
        break;
      }
      case FormulaKind::Not:
        out = Formula::negation(go(g.left()));
        break;
      case FormulaKind::And:
        out = Formula::conjunction(go(g.left()), go(g.right()));
        break;
      case FormulaKind::Or:
        out = Formula::disjunction(go(g.left()), go(g.right()));
        break;
      case FormulaKind::Implies:
        out = Formula::implication(go(g.left()), go(g.right()));
        break;
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        // g.has_free(var) implies bound_var != var.
        std::string bound = g.bound_var();
        Formula body = g.body();
        if (replacement.has_free(bound)) {
          const std::string renamed = fresh_variable(bound, [&](std::string_view c) {
            return replacement.has_free(c) || body.has_free(c) || c == var;
          });
          body = substitute(body, bound, Term::variable(renamed));
          bound = renamed;
        }
        Formula nb = go(body);
        out = g.kind() == FormulaKind::Forall ? Formula::forall(bound, nb) : Formula::exists(bound, nb);
        break;
      }
    }
    memo.emplace(g.node(), out);
    return out;
  };
  return go(f);
}

std::size_t dag_node_count(std::span<const Formula> roots) {
  std::unordered_set<const FormulaNode*> seen;
  std::vector<Term> terms;
  std::vector<Formula> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!seen.insert(f.node()).second) continue;
    for (const auto& c : f.node()->children) stack.push_back(c);
    for (const auto& a : f.args()) terms.push_back(a);
  }
  return seen.size() + dag_node_count(terms);
}

BigInt tree_size(const Formula& f) {
  BigInt s = 1;
  for (const auto& a : f.args()) s += tree_size(a);
  for (const auto& c : f.node()->children) s += tree_size(c);
  return s;
}

int logical_degree(const Formula& f) {
  if (f.is_atom()) return 0;
  int d = 0;
  for (const auto& c : f.node()->children) d = std::max(d, logical_degree(c));
  return d + 1;
}

}  // namespace feaslab
