#include "feaslab/links.hpp"

#include <array>
#include <stdexcept>

namespace feaslab {

namespace {

class LinkBuilder {
 public:
  LinkBuilder(const ProofNode& n) : n_(n) {
    used_.resize(n.premises.size());
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      used_[i][0].assign(n.premises[i]->conclusion.antecedent.size(), false);
      used_[i][1].assign(n.premises[i]->conclusion.succedent.size(), false);
    }
    out_.ante.resize(n.conclusion.antecedent.size());
    out_.succ.resize(n.conclusion.succedent.size());
    taken_[0].assign(n.conclusion.antecedent.size(), false);
    taken_[1].assign(n.conclusion.succedent.size(), false);
  }

  void active(int premise, bool succ, const Formula& f) {
    const auto& side = succ ? n_.premises[static_cast<std::size_t>(premise)]->conclusion.succedent
                            : n_.premises[static_cast<std::size_t>(premise)]->conclusion.antecedent;
    auto& used = used_[static_cast<std::size_t>(premise)][succ];
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (!used[i] && side[i] == f) {
        used[i] = true;
        out_.active.push_back(OccRef{premise, succ, i});
        return;
      }
    }
    throw std::logic_error("premise lacks an active formula");
  }

  void created(bool succ, const Formula& f, int hypothesis = -1) {
    const auto& side = succ ? n_.conclusion.succedent : n_.conclusion.antecedent;
    auto& taken = taken_[succ];
    // Principal formulas sit first in the antecedent and last in the succedent.
    if (succ) {
      for (std::size_t i = side.size(); i-- > 0;) {
        if (!taken[i] && side[i] == f) return mark(succ, i, hypothesis);
      }
    } else {
      for (std::size_t i = 0; i < side.size(); ++i) {
        if (!taken[i] && side[i] == f) return mark(succ, i, hypothesis);
      }
    }
    throw std::logic_error("conclusion lacks a principal formula");
  }

  NodeLinks finish() {
    for (int succ = 0; succ < 2; ++succ) {
      const auto& side = succ ? n_.conclusion.succedent : n_.conclusion.antecedent;
      auto& from = succ ? out_.succ : out_.ante;
      for (std::size_t i = 0; i < side.size(); ++i) {
        if (taken_[succ][i]) continue;
        from[i] = take_passive(succ != 0, side[i]);
      }
    }
    for (std::size_t p = 0; p < used_.size(); ++p) {
      for (int s = 0; s < 2; ++s) {
        for (bool u : used_[p][s]) {
          if (!u) throw std::logic_error("premise occurrence without a continuation");
        }
      }
    }
    return std::move(out_);
  }

 private:
  void mark(bool succ, std::size_t i, int hypothesis) {
    taken_[succ][i] = true;
    out_.created.push_back(NodeLinks::Created{succ, i, hypothesis});
  }

  OccRef take_passive(bool succ, const Formula& f) {
    for (std::size_t p = 0; p < n_.premises.size(); ++p) {
      const auto& side = succ ? n_.premises[p]->conclusion.succedent : n_.premises[p]->conclusion.antecedent;
      auto& used = used_[p][succ];
      for (std::size_t i = 0; i < side.size(); ++i) {
        if (!used[i] && side[i] == f) {
          used[i] = true;
          return OccRef{static_cast<int>(p), succ, i};
        }
      }
    }
    throw std::logic_error("conclusion occurrence without an ancestor");
  }

  const ProofNode& n_;
  std::vector<std::array<std::vector<bool>, 2>> used_;
  std::array<std::vector<bool>, 2> taken_;
  NodeLinks out_;
};

}  // namespace

NodeLinks node_links(const ProofNode& n, const Theory& th) {
  LinkBuilder b(n);
  const Rule& r = n.rule;
  const Formula& f = r.formula;
  switch (r.tag) {
    case RuleTag::LogicalAxiom:
      b.created(false, f);
      b.created(true, f);
      break;
    case RuleTag::EqOracle:
      b.created(true, f);
      break;
    case RuleTag::TheoryAxiom: {
      const AxiomSchema* schema = th.axiom(r.axiom);
      if (schema == nullptr) throw std::logic_error("unknown axiom " + r.axiom);
      const Sequent inst = instantiate(*schema, r.instantiation);
      std::vector<bool> discharged(inst.antecedent.size(), false);
      for (std::size_t i = 0; i < r.discharge.size(); ++i) {
        const auto d = static_cast<std::size_t>(r.discharge[i]);
        discharged[d] = true;
        b.active(static_cast<int>(i), true, inst.antecedent[d]);
      }
      for (std::size_t h = 0; h < inst.antecedent.size(); ++h) {
        if (!discharged[h]) b.created(false, inst.antecedent[h], static_cast<int>(h));
      }
      b.created(true, inst.succedent.front());
      break;
    }
    case RuleTag::Cut:
      b.active(0, true, f);
      b.active(1, false, f);
      break;
    case RuleTag::ContractLeft:
      b.active(0, false, f);
      b.active(0, false, f);
      b.created(false, f);
      break;
    case RuleTag::ContractRight:
      b.active(0, true, f);
      b.active(0, true, f);
      b.created(true, f);
      break;
    case RuleTag::WeakenLeft: b.created(false, f); break;
    case RuleTag::WeakenRight: b.created(true, f); break;
    case RuleTag::AndLeft:
      b.active(0, false, f.left());
      b.active(0, false, f.right());
      b.created(false, f);
      break;
    case RuleTag::AndRight:
      b.active(0, true, f.left());
      b.active(1, true, f.right());
      b.created(true, f);
      break;
    case RuleTag::OrLeft:
      b.active(0, false, f.left());
      b.active(1, false, f.right());
      b.created(false, f);
      break;
    case RuleTag::OrRight:
      b.active(0, true, f.left());
      b.active(0, true, f.right());
      b.created(true, f);
      break;
    case RuleTag::ImpliesLeft:
      b.active(0, true, f.left());
      b.active(1, false, f.right());
      b.created(false, f);
      break;
    case RuleTag::ImpliesRight:
      b.active(0, false, f.left());
      b.active(0, true, f.right());
      b.created(true, f);
      break;
    case RuleTag::NotLeft:
      b.active(0, true, f.left());
      b.created(false, f);
      break;
    case RuleTag::NotRight:
      b.active(0, false, f.left());
      b.created(true, f);
      break;
    case RuleTag::ForallLeft:
      b.active(0, false, instantiate_body(f, r.term));
      b.created(false, f);
      break;
    case RuleTag::ExistsRight:
      b.active(0, true, instantiate_body(f, r.term));
      b.created(true, f);
      break;
    case RuleTag::ForallRight:
      b.active(0, true, instantiate_body(f, Term::variable(r.var)));
      b.created(true, f);
      break;
    case RuleTag::ExistsLeft:
      b.active(0, false, instantiate_body(f, Term::variable(r.var)));
      b.created(false, f);
      break;
  }
  return b.finish();
}

}  // namespace feaslab
