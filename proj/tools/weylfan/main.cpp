#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylfan/charvar.hpp"
#include "weylfan/fan.hpp"
#include "weylfan/groebner.hpp"
#include "weylfan/io.hpp"

namespace {

using weylfan::CommPoly;
using weylfan::Error;
using weylfan::ErrorCode;
using weylfan::ProblemFile;
using weylfan::Rational;
using weylfan::RingPresentation;
using weylfan::SkewPoly;
using weylfan::WeightVector;
using Json = nlohmann::ordered_json;

// Exit codes.
constexpr int kOk = 0;
constexpr int kOther = 1;
constexpr int kParse = 2;
constexpr int kRegion = 3;
constexpr int kBudget = 4;
constexpr int kCheckFailed = 5;
constexpr int kUsage = 64;

struct Common {
  std::string file;
  bool json = false;
};

Json poly_list(const std::vector<CommPoly>& gens, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(weylfan::format_polynomial(g, names));
  return out;
}

std::vector<std::string> vars_of(const std::vector<std::size_t>& vars, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (std::size_t v : vars) out.push_back(names.at(v));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

std::string flat_string(const std::vector<Rational>& w) {
  std::vector<std::string> parts;
  for (const auto& x : w) parts.push_back(weylfan::to_string(x));
  return join(parts, ",");
}

weylfan::MonomialOrder base_order(const ProblemFile& pf, const std::string& flag) {
  const std::string name = !flag.empty() ? flag : pf.order.value_or("grevlex");
  return weylfan::MonomialOrder(pf.ring.nvars(), weylfan::parse_base_order(name));
}

WeightVector require_pr(const ProblemFile& pf, const WeightVector& w) {
  if (!weylfan::pr_contains(pf.ring, w)) throw Error(ErrorCode::region, "weight not in polynomial region");
  return w;
}

// Explicit --weight, else the file's weights, else the positive sample vector.
std::vector<WeightVector> weights_for(const ProblemFile& pf, const std::string& flag) {
  if (!flag.empty()) return {weylfan::parse_weight(pf.ring, flag, 0, 1)};
  if (!pf.weights.empty()) return pf.weights;
  return {weylfan::pr_sample_positive(pf.ring)};
}

int default_bound(const ProblemFile& pf) { return pf.ring_kind == "weyl" ? pf.ring.n() : 0; }

Json report_json(const weylfan::ComponentReport& r, const RingPresentation& p) {
  const auto names = p.var_names();
  Json j;
  j["weight"] = weylfan::to_string(r.weight);
  j["charIdeal"] = poly_list(r.ideal.initial, names);
  j["isMonomial"] = r.ideal.is_monomial;
  if (r.ideal.radical) {
    j["radical"] = weylfan::to_string(*r.ideal.radical, names);
  } else {
    j["radical"] = nullptr;
  }
  j["bound"] = r.bound;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    comps.push_back({{"vars", vars_of(c.vars, names)}, {"dim", c.dim}, {"pass", c.pass}, {"belowGkdim", c.below_gkdim}});
  }
  j["components"] = r.decomposition_supported ? comps : Json(nullptr);
  j["totalDim"] = r.total_dim ? Json(*r.total_dim) : Json("-inf");
  j["gkdim"] = r.gkdim ? Json(*r.gkdim) : Json("-inf");
  j["upperBoundHolds"] = r.upper_bound_holds;
  j["verdict"] = weylfan::to_string(r.verdict);
  return j;
}

void print_report(const weylfan::ComponentReport& r, const RingPresentation& p) {
  const auto names = p.var_names();
  std::cout << "weight: " << weylfan::to_string(r.weight) << "\n";
  std::cout << "charIdeal: " << weylfan::format_ideal(r.ideal.initial, names) << "\n";
  if (r.ideal.radical) {
    std::cout << "radical: " << weylfan::to_string(*r.ideal.radical, names) << "\n";
  } else {
    std::cout << "radical: not computed (initial ideal is not monomial)\n";
  }
  if (!r.decomposition_supported) {
    std::cout << "components: decomposition unsupported\n";
  } else if (r.components.empty()) {
    std::cout << "components: none (empty variety)\n";
  } else {
    std::cout << "components:\n";
    for (const auto& c : r.components) {
      std::cout << "  {" << join(vars_of(c.vars, names), ", ") << "} dim " << c.dim << (c.pass ? " pass" : " FAIL")
                << "\n";
    }
  }
  std::cout << "totalDim: " << (r.total_dim ? std::to_string(*r.total_dim) : "-inf") << "\n";
  std::cout << "bound: " << r.bound << "\n";
  std::cout << "gkdim: " << (r.gkdim ? std::to_string(*r.gkdim) : "-inf") << "\n";
  std::cout << "upperBound: " << (r.upper_bound_holds ? "holds" : "VIOLATED") << "\n";
  std::cout << "verdict: " << weylfan::to_string(r.verdict) << "\n";
}

int cmd_gb(const Common& c, const std::string& order_flag, const std::string& weight_flag) {
  const ProblemFile pf = weylfan::load_problem(c.file);
  const auto opts = weylfan::GbOptions::from_environment();
  weylfan::MonomialOrder order = base_order(pf, order_flag);
  if (!weight_flag.empty()) {
    const WeightVector w = require_pr(pf, weylfan::parse_weight(pf.ring, weight_flag, 0, 1));
    order = weylfan::weight_order(pf.ring, w, order);
  }
  const weylfan::GroebnerBasis gb = weylfan::groebner_basis(pf.ring, pf.ideal, order, opts);
  const auto names = pf.ring.var_names();
  if (c.json) {
    Json j;
    j["order"] = order.describe();
    j["reduced"] = gb.reduced;
    Json elems = Json::array();
    for (std::size_t k = 0; k < gb.elements.size(); ++k) {
      elems.push_back({{"poly", weylfan::format_polynomial(gb.elements[k], names)},
                       {"lead", weylfan::monomial_to_string(gb.leads[k], names)}});
    }
    j["elements"] = elems;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "order: " << order.describe() << "\n";
  std::cout << "reduced: " << (gb.reduced ? "yes" : "no") << "\n";
  for (const auto& g : gb.elements) std::cout << weylfan::format_polynomial(g, names) << "\n";
  return kOk;
}

int cmd_charvar(const Common& c, const std::string& weight_flag, std::optional<int> bound) {
  const ProblemFile pf = weylfan::load_problem(c.file);
  const auto opts = weylfan::GbOptions::from_environment();
  const int b = bound.value_or(default_bound(pf));
  Json all = Json::array();
  bool ok = true;
  bool first = true;
  for (const auto& w : weights_for(pf, weight_flag)) {
    const auto r = weylfan::verify_component_bound(pf.ring, pf.ideal, require_pr(pf, w), b, opts);
    ok = ok && r.verdict != weylfan::Verdict::fail;
    if (c.json) {
      all.push_back(report_json(r, pf.ring));
    } else {
      if (!first) std::cout << "\n";
      print_report(r, pf.ring);
    }
    first = false;
  }
  if (c.json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_pr(const Common& c) {
  const ProblemFile pf = weylfan::load_problem(c.file);
  const auto lines = weylfan::format_inequalities(weylfan::pr_halfspaces(pf.ring), weylfan::weight_names(pf.ring));
  if (c.json) {
    Json j;
    j["variables"] = weylfan::weight_names(pf.ring);
    Json forms = Json::array();
    for (const auto& f : weylfan::pr_halfspaces(pf.ring).strict) {
      std::vector<std::string> coeffs;
      for (const auto& x : f.coeffs) coeffs.push_back(weylfan::to_string(x));
      forms.push_back({{"coeffs", coeffs}, {"relation", ">"}});
    }
    j["halfspaces"] = forms;
    j["text"] = lines;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << (lines.empty() ? std::string("(entire space)") : join(lines, ", ")) << "\n";
  return kOk;
}

int cmd_gkdim(const Common& c, const std::string& weight_flag) {
  const ProblemFile pf = weylfan::load_problem(c.file);
  const auto opts = weylfan::GbOptions::from_environment();
  Json all = Json::array();
  for (const auto& w : weights_for(pf, weight_flag)) {
    const auto d = weylfan::gk_dim(pf.ring, pf.ideal, require_pr(pf, w), opts);
    const std::string text = d ? std::to_string(*d) : "-inf";
    if (c.json) {
      all.push_back({{"weight", weylfan::to_string(w)}, {"gkdim", d ? Json(*d) : Json("-inf")}});
    } else {
      std::cout << text << "\n";
    }
  }
  if (c.json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kOk;
}

int cmd_fan(const Common& c, std::size_t max_cones) {
  const ProblemFile pf = weylfan::load_problem(c.file);
  const auto opts = weylfan::GbOptions::from_environment();
  const auto fan = weylfan::enumerate_fan(pf.ring, pf.ideal, opts, max_cones);
  const auto names = pf.ring.var_names();
  const auto wnames = weylfan::weight_names(pf.ring);
  auto rows = [&wnames](const std::vector<std::vector<Rational>>& v, const std::string& rel) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(weylfan::format_linear_inequality(r, wnames, rel));
    return out;
  };
  if (c.json) {
    Json j;
    j["ideal"] = "original";
    j["partial"] = fan.partial;
    Json cones = Json::array();
    for (const auto& cone : fan.cones) {
      cones.push_back({{"equalities", rows(cone.cone.equalities, "=")},
                       {"strict", rows(cone.cone.strict, ">")},
                       {"witness", flat_string(cone.witness)},
                       {"initial", poly_list(cone.initial, names)},
                       {"inGR", cone.in_gr}});
    }
    j["cones"] = cones;
    Json adj = Json::array();
    for (const auto& [a, b] : fan.adjacency) adj.push_back({a, b});
    j["adjacency"] = adj;
    std::cout << j.dump(2) << "\n";
    return fan.partial ? kBudget : kOk;
  }
  std::cout << "cones: " << fan.cones.size() << (fan.partial ? " (partial: budget exhausted)" : "") << "\n";
  for (std::size_t k = 0; k < fan.cones.size(); ++k) {
    const auto& cone = fan.cones[k];
    std::cout << "cone " << k << (cone.in_gr ? "" : " (outside GR)") << ":\n";
    if (!cone.cone.equalities.empty()) std::cout << "  equalities: " << join(rows(cone.cone.equalities, "="), ", ") << "\n";
    std::cout << "  strict: " << join(rows(cone.cone.strict, ">"), ", ") << "\n";
    std::cout << "  witness: " << flat_string(cone.witness) << "\n";
    std::cout << "  initial: " << weylfan::format_ideal(cone.initial, names) << "\n";
  }
  std::vector<std::string> adj;
  for (const auto& [a, b] : fan.adjacency) adj.push_back(std::to_string(a) + "-" + std::to_string(b));
  std::cout << "adjacency: " << (adj.empty() ? std::string("none") : join(adj, ", ")) << "\n";
  return fan.partial ? kBudget : kOk;
}

int cmd_walk(const Common& c, const std::string& from, const std::string& to) {
  const ProblemFile pf = weylfan::load_problem(c.file);
  const auto opts = weylfan::GbOptions::from_environment();
  const WeightVector w1 = require_pr(pf, weylfan::parse_weight(pf.ring, from, 0, 1));
  const WeightVector w2 = require_pr(pf, weylfan::parse_weight(pf.ring, to, 0, 1));
  const auto result = weylfan::walk(pf.ring, pf.ideal, w1, w2, opts);
  const auto names = pf.ring.var_names();
  if (c.json) {
    Json j;
    Json segs = Json::array();
    for (const auto& s : result.segments) {
      segs.push_back({{"from", weylfan::to_string(s.begin)}, {"to", weylfan::to_string(s.end)},
                      {"initial", poly_list(s.ideal, names)}});
    }
    j["segments"] = segs;
    Json bps = Json::array();
    for (std::size_t k = 0; k < result.breakpoints.size(); ++k) {
      bps.push_back({{"r", weylfan::to_string(result.breakpoints[k])},
                     {"initial", poly_list(result.at_breakpoints[k], names)}});
    }
    j["breakpoints"] = bps;
    j["verified"] = result.verified;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t k = 0; k < result.breakpoints.size(); ++k) {
    std::cout << "r = " << weylfan::to_string(result.breakpoints[k]) << ": "
              << weylfan::format_ideal(result.at_breakpoints[k], names) << "\n";
    if (k < result.segments.size()) {
      const auto& s = result.segments[k];
      std::cout << "  (" << weylfan::to_string(s.begin) << ", " << weylfan::to_string(s.end)
                << "): " << weylfan::format_ideal(s.ideal, names) << "\n";
    }
  }
  std::cout << "verified: " << (result.verified ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_universal(const Common& c, std::size_t max_cones) {
  const ProblemFile pf = weylfan::load_problem(c.file);
  const auto opts = weylfan::GbOptions::from_environment();
  const auto u = weylfan::universal_gb(pf.ring, pf.ideal, opts, max_cones);
  const auto names = pf.ring.var_names();
  std::vector<std::string> lines;
  for (const auto& g : u) lines.push_back(weylfan::format_polynomial(g, names));
  if (c.json) {
    std::cout << Json{{"universal", lines}}.dump(2) << "\n";
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& dir, bool json) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wf") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const auto opts = weylfan::GbOptions::from_environment();
  Json all = Json::array();
  int failures = 0;
  for (const auto& path : files) {
    const ProblemFile pf = weylfan::load_problem(path.string());
    for (const auto& w : weights_for(pf, "")) {
      const auto r = weylfan::verify_component_bound(pf.ring, pf.ideal, require_pr(pf, w), default_bound(pf), opts);
      const bool bad = r.verdict == weylfan::Verdict::fail || !r.upper_bound_holds;
      failures += bad ? 1 : 0;
      if (json) {
        Json j = report_json(r, pf.ring);
        j["file"] = path.filename().string();
        all.push_back(j);
      } else {
        std::cout << path.filename().string() << " [" << weylfan::to_string(w) << "] " << weylfan::to_string(r.verdict)
                  << (r.upper_bound_holds ? "" : " (upper bound violated)") << "\n";
      }
    }
  }
  if (json) {
    std::cout << Json{{"cases", all}, {"failures", failures}}.dump(2) << "\n";
  } else {
    std::cout << "failures: " << failures << "\n";
  }
  return failures == 0 ? kOk : kCheckFailed;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse:
      return kParse;
    case ErrorCode::region:
      return kRegion;
    case ErrorCode::budget:
      return kBudget;
    default:
      return kOther;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylfan: Groebner bases, Groebner fans and characteristic varieties"};
  app.require_subcommand(1);

  Common common;
  std::string order_flag;
  std::string weight_flag;
  std::optional<int> bound;
  std::string from;
  std::string to;
  std::string corpus;
  std::size_t max_cones = 256;

  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", common.file, "problem file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", common.json, "structured output");
    return sub;
  };

  CLI::App* gb = file_command("gb", "reduced Groebner basis");
  gb->add_option("--order", order_flag, "lex, grlex or grevlex");
  gb->add_option("--weight", weight_flag, "refine by a weight vector, e.g. 1,1,1,3");

  CLI::App* charvar = file_command("charvar", "characteristic ideal and component bound");
  charvar->add_option("--weight", weight_flag, "weight vector");
  charvar->add_option("--bound", bound, "component dimension bound (default n for Weyl algebras)");

  CLI::App* fan = file_command("fan", "Groebner fan inside the polynomial region");
  fan->add_option("--max-cones", max_cones, "enumeration budget");

  CLI::App* walk = file_command("walk", "Groebner walk between two positive weights");
  walk->add_option("--from", from, "start weight")->required();
  walk->add_option("--to", to, "end weight")->required();

  CLI::App* pr = file_command("pr", "polynomial region inequalities");

  CLI::App* gkdim = file_command("gkdim", "Gelfand-Kirillov dimension of R/I");
  gkdim->add_option("--weight", weight_flag, "positive weight vector");

  CLI::App* universal = file_command("universal", "universal Groebner basis");
  universal->add_option("--max-cones", max_cones, "enumeration budget");

  CLI::App* verify = app.add_subcommand("verify", "check component bounds over a corpus of .wf files");
  verify->add_option("--corpus", corpus, "directory")->required()->check(CLI::ExistingDirectory);
  verify->add_flag("--json", common.json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gb->parsed()) return cmd_gb(common, order_flag, weight_flag);
    if (charvar->parsed()) return cmd_charvar(common, weight_flag, bound);
    if (fan->parsed()) return cmd_fan(common, max_cones);
    if (walk->parsed()) return cmd_walk(common, from, to);
    if (pr->parsed()) return cmd_pr(common);
    if (gkdim->parsed()) return cmd_gkdim(common, weight_flag);
    if (universal->parsed()) return cmd_universal(common, max_cones);
    if (verify->parsed()) return cmd_verify(corpus, common.json);
  } catch (const weylfan::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
