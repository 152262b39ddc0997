#include "feaslab/proof_io.hpp"

#include <json.hpp>
#include <stdexcept>

#include "feaslab/syntax.hpp"

namespace feaslab {

namespace {

using Json = nlohmann::ordered_json;

Json node_to_json(const Proof& p) {
  const Rule& r = p->rule;
  Json j;
  j["rule"] = rule_name(r.tag);
  j["conclusion"] = to_string(p->conclusion);
  if (!r.formula.is_null()) j["formula"] = to_string(r.formula);
  if (!r.term.is_null()) j["term"] = to_string(r.term);
  if (!r.var.empty()) j["var"] = r.var;
  if (r.tag == RuleTag::TheoryAxiom) {
    j["axiom"] = r.axiom;
    Json inst = Json::array();
    for (const auto& [v, t] : r.instantiation) inst.push_back(Json::array({v, to_string(t)}));
    j["instantiation"] = inst;
    j["discharge"] = r.discharge;
  }
  Json prem = Json::array();
  for (const auto& q : p->premises) prem.push_back(node_to_json(q));
  j["premises"] = std::move(prem);
  return j;
}

Proof node_from_json(const Json& j, const Signature& sig) {
  if (!j.is_object()) throw std::invalid_argument("proof node must be an object");
  const auto tag = rule_from_name(j.at("rule").get<std::string>());
  if (!tag) throw std::invalid_argument("unknown rule '" + j.at("rule").get<std::string>() + "'");
  Rule r;
  r.tag = *tag;
  if (j.contains("formula")) r.formula = parse_formula(j["formula"].get<std::string>(), sig);
  if (j.contains("term")) r.term = parse_term(j["term"].get<std::string>(), sig);
  if (j.contains("var")) r.var = j["var"].get<std::string>();
  if (j.contains("axiom")) r.axiom = j["axiom"].get<std::string>();
  if (j.contains("instantiation")) {
    for (const auto& pair : j["instantiation"]) {
      r.instantiation.emplace_back(pair.at(0).get<std::string>(), parse_term(pair.at(1).get<std::string>(), sig));
    }
  }
  if (j.contains("discharge")) r.discharge = j["discharge"].get<std::vector<int>>();
  std::vector<Proof> premises;
  if (j.contains("premises")) {
    for (const auto& q : j["premises"]) premises.push_back(node_from_json(q, sig));
  }
  return make_node(parse_sequent(j.at("conclusion").get<std::string>(), sig), std::move(r), std::move(premises));
}

}  // namespace

std::string proof_to_json(const Proof& p, const Theory& th) {
  Json doc;
  doc["theory"] = th.name;
  doc["proof"] = node_to_json(p);
  return doc.dump(1) + "\n";
}

ProofDocument proof_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed proof JSON: ") + e.what());
  }
  try {
    ProofDocument out{theory_from_selector(doc.at("theory").get<std::string>()), nullptr};
    out.proof = node_from_json(doc.at("proof"), out.theory.signature);
    return out;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed proof JSON: ") + e.what());
  }
}

}  // namespace feaslab
