#include "feaslab/term.hpp"

#include <algorithm>
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

struct Key {
  TermKind kind;
  std::string_view symbol;
  std::span<const Term> args;
  std::size_t hash;
};

std::size_t hash_of(TermKind kind, std::string_view symbol, std::span<const Term> args) {
  std::size_t h = mix(static_cast<std::size_t>(kind), std::hash<std::string_view>{}(symbol));
  for (const auto& a : args) h = mix(h, static_cast<std::size_t>(a.id()));
  return h;
}

std::vector<std::string> merge_free(TermKind kind, std::string_view symbol,
                                    std::span<const Term> args) {
  if (kind == TermKind::Variable) return {std::string(symbol)};
  std::vector<std::string> out;
  for (const auto& a : args) {
    const auto& fv = a.free_variables();
    if (fv.empty()) continue;
    std::vector<std::string> merged;
    merged.reserve(out.size() + fv.size());
    std::set_union(out.begin(), out.end(), fv.begin(), fv.end(), std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

}  // namespace

class TermTable {
 public:
  static TermTable& instance() {
    static TermTable table;
    return table;
  }

  Term intern(TermKind kind, std::string_view symbol, std::vector<Term> args) {
    const std::size_t h = hash_of(kind, symbol, args);
    std::lock_guard lock(mutex_);
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      const TermNode* n = it->second;
      if (n->kind == kind && n->symbol == symbol &&
          std::equal(n->args.begin(), n->args.end(), args.begin(), args.end())) {
        return Term(n);
      }
    }
    auto fv = merge_free(kind, symbol, args);
    nodes_.push_back(TermNode{kind, std::string(symbol), std::move(args), nodes_.size(), h,
                              std::move(fv)});
    const TermNode* n = &nodes_.back();
    index_.emplace(h, n);
    return Term(n);
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return nodes_.size();
  }

 private:
  std::mutex mutex_;
  std::deque<TermNode> nodes_;
  std::unordered_multimap<std::size_t, const TermNode*> index_;
};

Term Term::variable(std::string_view name) {
  return TermTable::instance().intern(TermKind::Variable, name, {});
}

Term Term::constant(std::string_view symbol) {
  return TermTable::instance().intern(TermKind::Constant, symbol, {});
}

Term Term::apply(std::string_view symbol, std::vector<Term> args) {
  if (args.empty()) throw std::invalid_argument("application needs at least one argument");
  for (const auto& a : args) {
    if (a.is_null()) throw std::invalid_argument("null argument term");
  }
  return TermTable::instance().intern(TermKind::Application, symbol, std::move(args));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::symbol() const { return node_->symbol; }
std::span<const Term> Term::args() const { return node_->args; }
std::uint64_t Term::id() const { return node_->id; }
const std::vector<std::string>& Term::free_variables() const { return node_->free_vars; }

bool Term::has_free(std::string_view var) const {
  const auto& fv = node_->free_vars;
  return std::binary_search(fv.begin(), fv.end(), var,
                            [](const auto& a, const auto& b) { return std::string_view(a) < std::string_view(b); });
}

Term substitute(const Term& t, std::string_view var, const Term& replacement) {
  std::unordered_map<const TermNode*, Term> memo;
  std::function<Term(const Term&)> go = [&](const Term& u) -> Term {
    if (!u.has_free(var)) return u;
    if (u.is_variable()) return replacement;
    if (auto it = memo.find(u.node()); it != memo.end()) return it->second;
    std::vector<Term> args;
    args.reserve(u.args().size());
    for (const auto& a : u.args()) args.push_back(go(a));
    Term out = Term::apply(u.symbol(), std::move(args));
    memo.emplace(u.node(), out);
    return out;
  };
  return go(t);
}

std::size_t dag_node_count(std::span<const Term> roots) {
  std::unordered_set<const TermNode*> seen;
  std::vector<Term> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    Term t = stack.back();
    stack.pop_back();
    if (!seen.insert(t.node()).second) continue;
    for (const auto& a : t.args()) stack.push_back(a);
  }
  return seen.size();
}

BigInt tree_size(const Term& t) {
  std::unordered_map<const TermNode*, BigInt> memo;
  std::function<BigInt(const Term&)> go = [&](const Term& u) -> BigInt {
    if (u.args().empty()) return 1;
    if (auto it = memo.find(u.node()); it != memo.end()) return it->second;
    BigInt s = 1;
    for (const auto& a : u.args()) s += go(a);
    memo.emplace(u.node(), s);
    return s;
  };
  return go(t);
}

std::size_t interned_term_count() { return TermTable::instance().size(); }

}  // namespace feaslab
