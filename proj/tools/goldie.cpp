#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "goldie/error.hpp"
#include "goldie/instance_io.hpp"
#include "goldie/report.hpp"
#include "goldie/weyl_algebra.hpp"

using namespace goldie;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kValidation = 2, kAssumption = 3, kInconclusive = 4 };

bool g_json = false;

void emit(const ReportJson& doc, const std::string& text) {
  if (g_json)
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_analyze(const std::string& path, bool points) {
  const Instance inst = load_instance(path);
  const AnalysisReport rep = analyze(inst.spec, *inst.alpha);
  emit(to_json(rep, points), render_text(rep, points));
  if (!rep.assumption3) {
    std::cerr << "goldie: " << rep.assumption3_defect << '\n';
    return kAssumption;
  }
  return kOk;
}

int cmd_rank(const std::string& path) {
  const Instance inst = load_instance(path);
  const std::size_t rank = goldie_rank(inst.spec, *inst.alpha);
  ReportJson doc;
  doc["goldie_rank"] = rank;
  emit(doc, std::to_string(rank) + "\n");
  return kOk;
}

int cmd_family(const std::string& path, long x_max, bool verify) {
  const Instance inst = load_instance(path);
  const FamilyTable table = goldie_family(inst.spec, *inst.alpha, x_max, verify);
  emit(to_json(table), render_text(table));
  for (const auto& row : table.rows)
    if (row.ehrhart_value && row.direct_count && *row.ehrhart_value != Rational(*row.direct_count)) {
      std::cerr << "goldie: closed form disagrees with direct count at x = " << row.x << '\n';
      return kFailure;
    }
  return kOk;
}

std::vector<long> parse_radii(const std::string& text) {
  std::vector<long> radii;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long r = std::stol(item, &used);
      if (used != item.size() || r <= 0) throw std::invalid_argument(item);
      radii.push_back(r);
    } catch (const std::logic_error&) {
      throw ValidationError("bad radius '" + item + "'");
    }
  }
  if (radii.size() < 2) throw ValidationError("need at least two radii, e.g. --radius 10,15");
  return radii;
}

int cmd_oracle(const std::string& path, const std::string& radius) {
  const Instance inst = load_instance(path);
  const auto radii = radius.empty() ? default_radius_schedule(inst.spec) : parse_radii(radius);
  const OracleResult res = oracle_component_count(inst.spec, *inst.alpha, radii);
  emit(to_json(res), render_text(res));
  return res.stabilized ? kOk : kInconclusive;
}

int cmd_include(const std::string& path_a, const std::string& path_b) {
  const Instance a = load_instance(path_a);
  const Instance b = load_instance(path_b);
  const bool included = closure_inclusion(region_closure(a.spec, *a.alpha), region_closure(b.spec, *b.alpha));
  ReportJson doc;
  doc["included"] = included;
  emit(doc, included ? "true\n" : "false\n");
  return kOk;
}

weyl::Word random_word(const weyl::Algebra& alg, std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), idx(0, alg.n - 1);
  std::uniform_int_distribution<int> coin(0, 1), pos(0, 2), any(-2, 2);
  weyl::Word w(len(rng));
  for (auto& f : w) {
    f.index = idx(rng);
    f.letter = coin(rng) ? weyl::Letter::X : weyl::Letter::D;
    const bool signed_power = f.letter == weyl::Letter::X && alg.invertible(f.index);
    f.exponent = signed_power ? any(rng) : pos(rng);
  }
  return w;
}

struct WeylOptions {
  std::size_t n = 2;
  std::size_t r = 1;
  long box = 2;
  std::size_t words = 500;
  std::size_t length = 6;
  unsigned seed = 1;
  std::string expr;
};

int cmd_weyl(const WeylOptions& o) {
  if (o.n == 0 || o.r > o.n) throw ValidationError("weyl-check needs n >= 1 and 0 <= r <= n");
  if (o.box < 0) throw ValidationError("weyl-check needs --box >= 0");
  const weyl::Algebra alg{o.n, o.r};
  ReportJson doc;
  std::ostringstream text;

  if (!o.expr.empty()) {
    const weyl::Element e = weyl::evaluate(alg, weyl::parse_expression(o.expr));
    doc["normal_form"] = weyl::to_string(e);
    text << weyl::to_string(e) << '\n';
  }

  // torus action: [x_i d_i, a_alpha] = alpha_i a_alpha over the whole box
  std::size_t checked = 0, failed = 0;
  weyl::Exponents alpha(o.n, -o.box);
  for (bool more = true; more;) {
    const weyl::Element a_alpha(weyl::build_a_alpha(alg, alpha));
    for (std::size_t i = 0; i < o.n; ++i) {
      ++checked;
      if (weyl::commutator(alg, weyl::pi(alg, i), a_alpha) != a_alpha * Rational(alpha[i])) ++failed;
    }
    more = false;
    for (std::size_t k = 0; k < o.n; ++k) {
      if (alpha[k] < o.box) {
        ++alpha[k];
        more = true;
        break;
      }
      alpha[k] = -o.box;
    }
  }

  std::mt19937 rng(o.seed);
  std::size_t idem_failed = 0;
  for (std::size_t k = 0; k < o.words; ++k) {
    const weyl::Element once = weyl::normalize(alg, random_word(alg, rng, o.length));
    if (weyl::normalize(alg, once) != once) ++idem_failed;
  }

  doc["torus_action"] = {{"checked", checked}, {"failed", failed}};
  doc["idempotence"] = {{"words", o.words}, {"failed", idem_failed}};
  text << "torus action  " << checked - failed << "/" << checked << " commutators exact\n";
  text << "idempotence   " << o.words - idem_failed << "/" << o.words << " random words stable\n";
  emit(doc, text.str());
  return failed == 0 && idem_failed == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Region closures, component counts and Ehrhart families for Weyl algebra subquotients"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Print structured output");

  std::string file, file_b, radius;
  bool points = false, verify = false;
  long x_max = 10;
  WeylOptions weyl_opts;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one instance");
  analyze_cmd->add_option("file", file, "Instance file")->required();
  analyze_cmd->add_flag("--points", points, "Include component representatives and characters");

  auto* rank_cmd = app.add_subcommand("rank", "Goldie rank (number of closure components)");
  rank_cmd->add_option("file", file, "Instance file")->required();

  auto* family_cmd = app.add_subcommand("family", "Dilation family quasi-polynomial and table");
  family_cmd->add_option("file", file, "Instance file")->required();
  family_cmd->add_option("--xmax", x_max, "Largest dilation in the table")->check(CLI::PositiveNumber);
  family_cmd->add_flag("--verify", verify, "Recount every admissible dilation from scratch");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force component count");
  oracle_cmd->add_option("file", file, "Instance file")->required();
  oracle_cmd->add_option("--radius", radius, "Comma-separated radius schedule, e.g. 10,15");

  auto* weyl_cmd = app.add_subcommand("weyl-check", "Normal-ordering and torus-action checks");
  weyl_cmd->add_option("--n", weyl_opts.n, "Number of variables");
  weyl_cmd->add_option("--r", weyl_opts.r, "Number of polynomial variables");
  weyl_cmd->add_option("--box", weyl_opts.box, "Weights range over [-B, B]^n");
  weyl_cmd->add_option("--words", weyl_opts.words, "Random words for the idempotence check");
  weyl_cmd->add_option("--length", weyl_opts.length, "Maximum random word length");
  weyl_cmd->add_option("--seed", weyl_opts.seed, "Random seed");
  weyl_cmd->add_option("--expr", weyl_opts.expr, "Expression to normal-order, e.g. \"d1 x1^2 - 3 x2^-1\"");

  auto* include_cmd = app.add_subcommand("include", "Is closure(A) contained in closure(B)?");
  include_cmd->add_option("fileA", file, "Instance file")->required();
  include_cmd->add_option("fileB", file_b, "Instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file, points);
    if (*rank_cmd) return cmd_rank(file);
    if (*family_cmd) return cmd_family(file, x_max, verify);
    if (*oracle_cmd) return cmd_oracle(file, radius);
    if (*weyl_cmd) return cmd_weyl(weyl_opts);
    if (*include_cmd) return cmd_include(file, file_b);
  } catch (const ValidationError& e) {
    std::cerr << "goldie: " << e.what() << '\n';
    return kValidation;
  } catch (const AssumptionViolation& e) {
    std::cerr << "goldie: " << e.what() << '\n';
    return kAssumption;
  } catch (const std::exception& e) {
    std::cerr << "goldie: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
