#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "feaslab/checker.hpp"
#include "feaslab/cut_elim.hpp"
#include "feaslab/ext_rational.hpp"
#include "feaslab/flow_graph.hpp"
#include "feaslab/generators.hpp"
#include "feaslab/mat2.hpp"
#include "feaslab/oracle.hpp"
#include "feaslab/proof_io.hpp"
#include "feaslab/syntax.hpp"
#include "feaslab/torus.hpp"

namespace feaslab::cli {

namespace {

struct GenArgs {
  std::string theory;
  std::string symbol = "x";
  std::string mode;
  std::string matrix = "(2 1; 1 1)";
  std::string x = "0";
};

void add_gen_options(CLI::App* cmd, GenArgs& a) {
  cmd->add_option("--theory", a.theory, "Theory selector: arith, rat, group:bs12, group:free:<g1,g2,...>");
  cmd->add_option("--symbol", a.symbol, "Group generator to power");
  cmd->add_option("--mode", a.mode, "linear, squaring or quantifier");
  cmd->add_option("--matrix", a.matrix, "Matrix as \"(a b; c d)\"");
  cmd->add_option("--x", a.x, "Starting point of the orbit");
}

GenOptions to_options(const GenArgs& a) {
  GenOptions o;
  o.theory = a.theory;
  o.generator_symbol = a.symbol;
  if (a.mode == "linear") {
    o.power_mode = PowerMode::Linear;
  } else if (a.mode == "quantifier") {
    o.power_mode = PowerMode::Quantifier;
    o.matrix_mode = MatrixMode::Quantifier;
  } else if (!a.mode.empty() && a.mode != "squaring") {
    throw std::invalid_argument("unknown mode '" + a.mode + "'");
  }
  o.matrix = Mat2::parse(a.matrix);
  o.x = ExtRational::parse(a.x);
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw std::runtime_error("cannot write " + path);
  o << text;
}

std::string summary(const std::string& generator, const GenReport& g) {
  std::ostringstream s;
  if (g.value) {
    s << (generator == "matrix-power" ? "phi(" : "F(") << describe(*g.value) << ")";
  } else {
    s << to_string(g.goal);
  }
  s << ", lines=" << g.stats.lines << ", end: " << to_string(end_sequent(g.proof));
  return s.str();
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt_double(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

// "a..b" or a single n; b < a gives an empty range.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "'");
  }
}

int cmd_gen(const std::string& name, std::size_t n, const GenArgs& ga, std::string out_path, std::ostream& out) {
  const GenReport g = generate(name, n, to_options(ga));
  if (out_path.empty()) out_path = name + "-" + std::to_string(n) + ".json";
  if (out_path != "-") write_file(out_path, proof_to_json(g.proof, g.theory));
  out << summary(name, g) << "\n";
  return 0;
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  const ProofDocument doc = proof_from_json(read_file(path));
  try {
    const SizeStats st = check(doc.proof, doc.theory);
    out << "ok: " << to_string(end_sequent(doc.proof)) << ", lines=" << st.lines << ", cuts=" << st.cut_count
        << ", contractions=" << st.contraction_count << ", height=" << st.height << "\n";
    return 0;
  } catch (const CheckError& e) {
    err << "rejected: " << e.what() << "\n";
    return 1;
  }
}

int cmd_cutfree(const std::string& path, const std::string& out_path, std::uint64_t budget, std::ostream& out) {
  const ProofDocument doc = proof_from_json(read_file(path));
  const SizeStats before = check(doc.proof, doc.theory);
  const Proof cf = eliminate_cuts(doc.proof, doc.theory, budget);
  const SizeStats after = check(cf, doc.theory);
  if (!out_path.empty()) write_file(out_path, proof_to_json(cf, doc.theory));
  out << "lines " << before.lines << " -> " << after.lines << ", cuts " << before.cut_count << " -> "
      << after.cut_count << ", contractions " << before.contraction_count << " -> " << after.contraction_count << "\n";
  return 0;
}

int cmd_flow(const std::string& path, const std::string& dot_path, std::ostream& out) {
  const ProofDocument doc = proof_from_json(read_file(path));
  check(doc.proof, doc.theory);
  const FlowGraph g = build_flow_graph(doc.proof, doc.theory);
  if (!dot_path.empty()) write_file(dot_path, emit_dot(g));
  out << flow_stats_json(flow_stats(g)) << "\n";
  return 0;
}

int cmd_bench(const std::string& name, const std::string& range, const GenArgs& ga, std::uint64_t budget,
              bool timing, const std::string& out_path, std::ostream& out) {
  const auto [lo, hi] = parse_range(range);
  std::ostringstream csv;
  csv << "n,lines_with_cuts,lines_cut_free,ratio,cut_count,contraction_count,wall_time_ms,status,"
         "cycles_with_cuts,bridges_with_cuts,cycles_cut_free,bridges_cut_free\n";
  const auto hook = [&](const BlowupRow& r, const GenReport& g, const Proof* cf) {
    const FlowStats with = flow_stats(build_flow_graph(g.proof, g.theory));
    csv << r.n << ',' << r.lines_with_cuts << ',';
    if (cf != nullptr) {
      const FlowStats without = flow_stats(build_flow_graph(*cf, g.theory));
      csv << r.lines_cut_free << ',' << fmt_double(r.ratio) << ',' << r.cut_count << ',' << r.contraction_count << ','
          << (timing ? fmt_double(r.wall_time_ms, 4) : "-") << ',' << csv_field(status_name(r.status)) << ','
          << with.cycles << ',' << with.bridges << ',' << without.cycles << ',' << without.bridges << '\n';
    } else {
      csv << ",," << r.cut_count << ",," << (timing ? fmt_double(r.wall_time_ms, 4) : "-") << ','
          << csv_field(status_name(r.status)) << ',' << with.cycles << ',' << with.bridges << ",,\n";
    }
  };
  if (lo <= hi) blowup_report(name, lo, hi, to_options(ga), budget, hook);
  if (out_path.empty()) {
    out << csv.str();
  } else {
    write_file(out_path, csv.str());
  }
  return 0;
}

int cmd_orbit(const std::string& matrix, const std::string& x0, std::size_t n, const std::string& format, int proof_m,
              std::ostream& out, std::ostream& err) {
  const Mat2 a = Mat2::parse(matrix);
  if (a.det() == 0) throw std::invalid_argument("singular matrix");
  ExtRational x = ExtRational::parse(x0);
  nlohmann::ordered_json orbit = nlohmann::ordered_json::array();
  int status = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      try {
        x = mobius_apply(a, x);
      } catch (const std::exception& e) {
        err << "undefined operation at k=" << k << ": " << e.what() << "\n";
        status = 1;
        break;
      }
    }
    if (format == "json") {
      orbit.push_back(x.to_string());
    } else {
      out << "k=" << k << ": " << x.to_string() << "\n";
    }
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["matrix"] = a.to_string();
    j["x"] = x0;
    j["orbit"] = orbit;
    out << j.dump() << "\n";
  }
  if (proof_m >= 0) {
    const GenReport g = gen_matrix_power(a, static_cast<std::size_t>(proof_m), MatrixMode::Squaring);
    out << summary("matrix-power", g) << "\n";
  }
  return status;
}

int cmd_torus(const std::string& matrix, std::size_t n, const std::string& vec, bool table, std::ostream& out) {
  const Mat2 a = Mat2::parse(matrix);
  const auto comma = vec.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("vector must be \"v1,v2\"");
  const BigInt v1(vec.substr(0, comma));
  const BigInt v2(vec.substr(comma + 1));
  out << std::setprecision(17);
  if (a.is_symmetric()) {
    const auto [hi, lo] = eigenvalues_sym2(a);
    out << "eigenvalues: " << hi << " " << lo << "\n";
  }
  out << "dominant: " << dominant_eigenvalue(a) << "\n";
  for (std::size_t k = table ? 0 : n; k <= n; ++k) {
    const WindingGrowth w = winding_growth(a, v1, v2, static_cast<unsigned>(k));
    out << "n=" << k << " norm=" << w.norm.str() << " ratio=" << w.ratio << "\n";
  }
  return 0;
}

int cmd_oracle_dp(std::uint64_t n, std::uint64_t enum_max, std::ostream& out) {
  const CostTable t = min_tree_derivation(n);
  out << "value,dp_cost,enum_cost\n";
  for (std::uint64_t v = 0; v <= n; ++v) {
    out << v << ',' << t.cost(v) << ',';
    if (v <= enum_max) {
      const auto p = enumerate_min_proof(v, std::min<std::uint64_t>(t.cost(v), kMaxEnumerationLines));
      if (p) out << size(*p).lines;
    }
    out << '\n';
  }
  return 0;
}

int cmd_oracle_enum(std::uint64_t n, std::uint64_t budget, std::ostream& out) {
  const auto p = enumerate_min_proof(n, budget);
  if (!p) {
    out << "none within " << budget << " lines\n";
    return 0;
  }
  out << to_string(end_sequent(*p)) << ", lines=" << size(*p).lines << "\n";
  return 0;
}

int cmd_oracle_word(const std::string& term, const std::string& selector, std::size_t radius, std::ostream& out) {
  const Theory th = theory_from_selector(selector);
  const Term t = parse_term(term, th.signature);
  const std::size_t d = word_metric_distance(eval_group(t, th.presentation), th.presentation, th.generators, radius);
  out << d << "\n";
  return 0;
}

// Proof size of F(y^{2^{2^n}}) against the word length of y^{2^{2^n}}.
int cmd_oracle_distortion(std::size_t n_max, std::size_t radius, std::ostream& out) {
  out << "n,proof_lines,exponent,word_distance,method\n";
  for (std::size_t n = 0; n <= n_max; ++n) {
    const GenReport g = gen_distorted(n);
    const BigInt e = BigInt(1) << (std::size_t{1} << n);
    const BSElement target = std::get<BSElement>(*g.value);
    std::string dist, method;
    try {
      dist = std::to_string(word_metric_distance(target, Presentation::BS12, {"x", "y"}, radius));
      method = "bfs";
    } catch (const RadiusExhausted&) {
      // x^m y x^-m with m = 2^n.
      dist = "<=" + std::to_string(2 * (std::size_t{1} << n) + 1);
      method = "conjugation-bound";
    }
    out << n << ',' << g.stats.lines << ',' << e.str() << ',' << csv_field(dist) << ',' << method << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"feaslab: feasibility proofs, cut elimination and growth experiments"};
  app.require_subcommand(1, 1);
  std::uint64_t budget = node_budget_from_env();

  std::string gen_name, out_path, file, dot_path, range, format = "text", matrix = "(2 1; 1 1)", x0 = "0",
                                                          vec = "1,0", term, selector = "group:bs12";
  std::size_t n = 0, radius = 10;
  std::uint64_t enum_max = 8, enum_budget = 10;
  int proof_m = -1;
  bool timing = false, table = false;
  GenArgs ga;

  auto* gen = app.add_subcommand("gen", "Generate a proof and print a summary");
  gen->add_option("generator", gen_name, "Generator name")->required();
  gen->add_option("n", n, "Size parameter")->required();
  gen->add_option("-o,--out", out_path, "Proof file (default <generator>-<n>.json, '-' for none)");
  add_gen_options(gen, ga);

  auto* chk = app.add_subcommand("check", "Check a proof file");
  chk->add_option("file", file)->required();

  auto* cf = app.add_subcommand("cutfree", "Eliminate cuts from a proof file");
  cf->add_option("file", file)->required();
  cf->add_option("-o,--out", out_path, "Write the cut-free proof here");
  cf->add_option("--budget", budget, "Node budget")->check(CLI::PositiveNumber);

  auto* flow = app.add_subcommand("flow", "Flow-graph statistics of a proof file");
  flow->add_option("file", file)->required();
  flow->add_option("--dot", dot_path, "Write the graph as DOT");

  auto* bench = app.add_subcommand("bench", "Cut-elimination blowup table as CSV");
  bench->add_option("generator", gen_name)->required();
  bench->add_option("range", range, "n or a..b")->required();
  bench->add_option("--budget", budget, "Node budget")->check(CLI::PositiveNumber);
  bench->add_flag("--timing", timing, "Fill the wall_time_ms column");
  bench->add_option("-o,--out", out_path, "CSV file (default stdout)");
  add_gen_options(bench, ga);

  auto* orbit = app.add_subcommand("orbit", "Orbit of x under the Mobius action of a matrix");
  orbit->add_option("--matrix", matrix);
  orbit->add_option("--x", x0);
  orbit->add_option("-n,--n", n)->required();
  orbit->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  orbit->add_option("--proof", proof_m, "Also build the squaring proof for A^(2^m)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force baselines");
  oracle->require_subcommand(1, 1);
  auto* dp = oracle->add_subcommand("dp", "Minimal construction costs up to N as CSV");
  dp->add_option("N", n)->required();
  dp->add_option("--enum-max", enum_max, "Also enumerate proofs for values up to this");
  auto* en = oracle->add_subcommand("enum", "Smallest construction proof of F(n)");
  en->add_option("n", n)->required();
  en->add_option("--budget", enum_budget)->check(CLI::PositiveNumber);
  auto* word = oracle->add_subcommand("word", "Word-metric distance of a group term");
  word->add_option("term", term)->required();
  word->add_option("--theory", selector);
  word->add_option("--radius", radius);
  auto* dist = oracle->add_subcommand("distortion", "Proof lines against word length in BS(1,2)");
  dist->add_option("--n-max", n)->required();
  dist->add_option("--radius", radius);

  auto* torus = app.add_subcommand("torus", "Eigenvalues and winding growth");
  torus->add_option("--matrix", matrix);
  torus->add_option("-n,--n", n)->required();
  torus->add_option("--v", vec, "Vector \"v1,v2\"");
  torus->add_flag("--table", table, "Print every k up to n");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) return cmd_gen(gen_name, n, ga, out_path, out);
    if (*chk) return cmd_check(file, out, err);
    if (*cf) return cmd_cutfree(file, out_path, budget, out);
    if (*flow) return cmd_flow(file, dot_path, out);
    if (*bench) return cmd_bench(gen_name, range, ga, budget, timing, out_path, out);
    if (*orbit) return cmd_orbit(matrix, x0, n, format, proof_m, out, err);
    if (*torus) return cmd_torus(matrix, n, vec, table, out);
    if (*dp) return cmd_oracle_dp(n, enum_max, out);
    if (*en) return cmd_oracle_enum(n, enum_budget, out);
    if (*word) return cmd_oracle_word(term, selector, radius, out);
    if (*dist) return cmd_oracle_distortion(n, radius, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace feaslab::cli
