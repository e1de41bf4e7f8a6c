#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "schurmzv/checkerboard.hpp"
#include "schurmzv/errors.hpp"
#include "schurmzv/mzv.hpp"
#include "schurmzv/ribbons.hpp"
#include "schurmzv/ssyt.hpp"
#include "schurmzv/stuffle.hpp"
#include "schurmzv/symbolic.hpp"
#include "schurmzv/text_format.hpp"

using json = nlohmann::ordered_json;
using namespace schurmzv;

namespace {

enum ExitCode { kOk = 0, kParse = 2, kPrecondition = 3, kResource = 4, kInternal = 5 };

struct Config {
  double tolerance = kNumericToleranceFloor;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::vector<int> ladder{256, 512, 1024, 2048, 4096};
  int log_power = 2;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParseError("bad integer for " + what + ": '" + s + "'");
  }
}

void apply_setting(Config& cfg, const std::string& line) {
  const auto eq = line.find('=');
  if (eq == std::string::npos) throw ParseError("config line without '=': " + line);
  const std::string key = trim(line.substr(0, eq));
  const std::string value = trim(line.substr(eq + 1));
  if (key == "tolerance") {
    try {
      cfg.tolerance = std::stod(value);
    } catch (const std::exception&) {
      throw ParseError("bad tolerance: " + value);
    }
    if (!(cfg.tolerance >= kNumericToleranceFloor)) throw PreconditionError("tolerance below the floor 1e-10");
  } else if (key == "enumeration_cap") {
    try {
      cfg.enumeration_cap = std::stoull(value);
    } catch (const std::exception&) {
      throw ParseError("bad enumeration_cap: " + value);
    }
  } else if (key == "extrapolation_log_power") {
    cfg.log_power = parse_int(value, "extrapolation_log_power");
    if (cfg.log_power < 0) throw PreconditionError("extrapolation_log_power must be non-negative");
  } else if (key == "extrapolation_ladder") {
    cfg.ladder.clear();
    for (const auto& m : split(value, ',')) cfg.ladder.push_back(parse_int(m, "extrapolation_ladder"));
    if (cfg.ladder.empty()) throw ParseError("empty extrapolation_ladder");
  } else {
    throw ParseError("unknown config key '" + key + "'");
  }
}

void load_config_file(Config& cfg, const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    apply_setting(cfg, line);
  }
}

/// A path to a grid file, or the grid text itself.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

json matrix_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json cells_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back({c.row, c.col});
  return out;
}

json decomposition_json(const OutsideDecomposition& theta) {
  json pieces = json::array();
  for (std::size_t i = 0; i < theta.size(); ++i)
    pieces.push_back({{"cells", cells_json(theta.pieces[i])},
                      {"min_content", theta.min_content(i)},
                      {"max_content", theta.max_content(i)}});
  return pieces;
}

std::string steps_string(const Ribbon& r) {
  std::string s;
  for (Step st : r.steps()) s += st == Step::Up ? 'U' : 'R';
  return s;
}

json ribbon_json(const Ribbon& r) {
  return {{"first_content", r.first_content()}, {"steps", steps_string(r)}, {"shape", render(r.shape())}};
}

json table_json(const SubribbonTable& table) {
  json rows = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < table.size(); ++j) {
      const SubribbonEntry& e = table(i, j);
      if (is_empty(e)) {
        row.push_back("EMPTY");
      } else if (is_undefined(e)) {
        row.push_back("UNDEFINED");
      } else {
        const Ribbon& r = std::get<Ribbon>(e);
        row.push_back("[" + std::to_string(r.first_content()) + "," + std::to_string(r.last_content()) + "]");
      }
    }
    rows.push_back(row);
  }
  return rows;
}

json combination_json(const IndexCombination& combo) {
  json out = json::array();
  for (const auto& [idx, mult] : combo)
    out.push_back({{"index", format_index(idx)}, {"multiplicity", mult}, {"admissible", is_admissible(idx)}});
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text, ',')) {
    try {
      out.push_back(std::stod(s));
    } catch (const std::exception&) {
      throw ParseError("bad number '" + s + "'");
    }
  }
  if (out.empty()) throw ParseError("empty list of T values");
  return out;
}

json tpoly_json(const TPoly& p) {
  json coeffs = json::array();
  for (int j = 0; j <= p.degree(); ++j) {
    json terms = json::array();
    for (const auto& [idx, c] : p.coefficient(j).terms())
      terms.push_back({{"index", format_index(idx)}, {"coefficient", to_string(c)}});
    coeffs.push_back({{"power", j}, {"terms", terms}});
  }
  return coeffs;
}

json symbol_json(const ZetaSymbolValue& v, MzvEvaluator& eval, const std::vector<double>& t_values) {
  json out = {{"value", to_string(v)}};
  json gens = json::array();
  for (int g : v.generators()) gens.push_back(g == kGenP ? "pi^4" : g == kGenT ? "T" : "z" + std::to_string(g));
  out["generators"] = gens;
  json weights = json::array();
  for (int w : v.weights()) weights.push_back(w);
  out["weights"] = weights;
  json numeric = json::array();
  for (double t : t_values) numeric.push_back({{"T", t}, {"value_numeric", v.numeric(t, eval)}});
  out["numeric"] = numeric;
  return out;
}

json evaluation_json(const CheckerboardEvaluation& e, MzvEvaluator& eval, const std::vector<double>& t_values) {
  json out = symbol_json(e.value, eval, t_values);
  out["ribbon_label"] = e.ribbon_label;
  out["ribbon"] = ribbon_json(e.ribbon);
  out["decomposition"] = decomposition_json(e.theta);
  out["entry_labels"] = e.entry_labels;
  json matrix = json::array();
  for (Eigen::Index i = 0; i < e.matrix.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < e.matrix.cols(); ++j) row.push_back(to_string(e.matrix(i, j)));
    matrix.push_back(row);
  }
  out["matrix"] = matrix;
  out["tessellations"] = e.tessellations;
  return out;
}

struct Output {
  json doc;
  json diagnostics = json::array();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multiple zeta values: truncated sums, Jacobi-Trudi determinants, checkerboard evaluations"};
  app.require_subcommand(1);
  bool pretty = false;
  std::string config_path;
  std::vector<std::string> settings;
  app.add_flag("--pretty", pretty, "Indent the JSON output");
  app.add_option("--config", config_path, "key=value file (tolerance, enumeration_cap, extrapolation_ladder, extrapolation_log_power)");
  app.add_option("--set", settings, "Override one config key, e.g. --set tolerance=1e-8");

  std::string input, ribbon_input, index_text, t_text = "0,1", kind_text, n_text, strategy_text = "auto";
  std::string entries_text = "13";
  int M = 0;
  bool regularized = false, extrapolate = false;
  double tol_flag = -1.0;

  auto* eval_cmd = app.add_subcommand("eval", "Truncated Schur MZV zeta_M of a tableau");
  eval_cmd->add_option("-M", M, "Truncation: entries of the SSYT are < M")->required();
  eval_cmd->add_option("tableau", input, "Grid file or grid text")->required();
  eval_cmd->add_flag("--extrapolate", extrapolate, "Also Richardson-extrapolate along the configured M ladder");

  auto* expand_cmd = app.add_subcommand("expand", "Expansion of a tableau into MZV indices");
  expand_cmd->add_option("tableau", input, "Grid file or grid text")->required();

  auto* reg_cmd = app.add_subcommand("regularize", "Harmonic regularisation of an index or a tableau");
  reg_cmd->add_option("tableau", input, "Grid file or grid text");
  reg_cmd->add_option("--index", index_text, "MZV index such as 1,3");
  reg_cmd->add_option("--T", t_text, "Comma separated T values for numeric evaluation");

  std::string host_input;
  auto* dec_cmd = app.add_subcommand("decompose", "Outside decomposition of a shape along a ribbon");
  dec_cmd->add_option("host", host_input, "Host shape file or text")->required();
  dec_cmd->add_option("ribbon", ribbon_input, "Ribbon shape file or text")->required();

  auto* jt_cmd = app.add_subcommand("jt-check", "Check the generalised Jacobi-Trudi identity");
  jt_cmd->add_option("-M", M, "Truncation for the exact check");
  jt_cmd->add_option("--ribbon", ribbon_input, "Ribbon shape file or text")->required();
  jt_cmd->add_option("tableau", input, "Diagonal tableau file or text")->required();
  jt_cmd->add_flag("--regularized", regularized, "Check the regularised identity numerically");
  jt_cmd->add_option("--T", t_text, "Comma separated T values for the regularised check");

  auto* cb_cmd = app.add_subcommand("checkerboard", "Checkerboard tableaux");
  cb_cmd->require_subcommand(1);
  auto* cb_eval = cb_cmd->add_subcommand("eval", "Closed-form evaluation of a 1-3 or 1-2 checkerboard");
  cb_eval->add_option("tableau", input, "Grid file or grid text")->required();
  cb_eval->add_option("--strategy", strategy_text, "auto, staircase or column (1-3 only)");
  cb_eval->add_option("--T", t_text, "Comma separated T values for numeric evaluation");
  auto* cb_alpha = cb_cmd->add_subcommand("alpha", "Exact alpha_n");
  cb_alpha->add_option("--n", n_text, "n or a range lo..hi")->required();
  auto* cb_tess = cb_cmd->add_subcommand("tessellate", "Check a pure F-stair tessellation");
  cb_tess->add_option("--kind", kind_text, "A, B, S or S*")->required();
  cb_tess->add_option("tableau", input, "Checkerboard grid file or text")->required();

  auto* mzv_cmd = app.add_subcommand("mzv", "Numeric multiple zeta value");
  mzv_cmd->add_option("--index", index_text, "Admissible index such as 3,4")->required();
  mzv_cmd->add_option("--tol", tol_flag, "Requested tolerance (at least 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  Output out;
  std::string command;
  for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
    sub = sub->get_subcommands().front();
    command += (command.empty() ? "" : " ") + sub->get_name();
  }
  json input_json;
  int code = kOk;
  try {
    Config cfg;
    if (!config_path.empty()) load_config_file(cfg, config_path);
    for (const auto& s : settings) apply_setting(cfg, s);
    if (tol_flag > 0) cfg.tolerance = tol_flag;
    MzvEvaluator eval(cfg.tolerance);
    json result;

    if (*eval_cmd) {
      command = "eval";
      const Tableau t = parse_tableau(read_input(input));
      input_json = {{"tableau", render(t)}, {"M", M}};
      if (M < 1) throw PreconditionError("M must be positive");
      const Rational v = truncated_schur_zeta(t, M, cfg.enumeration_cap);
      result = {{"value", to_string(v)}, {"value_numeric", to_double(v)}, {"admissible", is_admissible(t)}};
      if (extrapolate) {
        const IndexCombination combo = expand_tableau(t);
        json ladder = json::array();
        std::vector<long double> values;
        for (std::size_t i = 0; i < cfg.ladder.size(); ++i) {
          const int m = cfg.ladder[i];
          values.push_back(truncated_from_expansion<long double>(combo, m));
          json row = {{"M", m}, {"value_numeric", static_cast<double>(values.back())}};
          if (i > 0 && m == 2 * cfg.ladder[i - 1])
            row["richardson_numeric"] = static_cast<double>(2 * values[i] - values[i - 1]);
          ladder.push_back(row);
        }
        json extrapolation = {{"ladder", ladder}, {"log_power", cfg.log_power}};
        if (cfg.ladder.size() >= static_cast<std::size_t>(cfg.log_power + 2)) {
          extrapolation["limit_numeric"] =
              static_cast<double>(extrapolate_truncation(cfg.ladder, values, cfg.log_power));
        } else {
          out.diagnostics.push_back("extrapolation ladder too short for the configured log power");
        }
        result["extrapolation"] = extrapolation;
      }
    } else if (*expand_cmd) {
      command = "expand";
      const Tableau t = parse_tableau(read_input(input));
      input_json = {{"tableau", render(t)}};
      const IndexCombination combo = expand_tableau(t);
      long long total = 0;
      for (const auto& [idx, m] : combo) total += m;
      result = {{"terms", combination_json(combo)}, {"term_count", total}};
    } else if (*reg_cmd) {
      command = "regularize";
      const std::vector<double> ts = parse_doubles(t_text);
      TPoly p;
      if (!index_text.empty()) {
        const MzvIndex idx = parse_index(index_text);
        input_json = {{"index", format_index(idx)}};
        p = regularize(idx);
      } else if (!input.empty()) {
        const Tableau t = parse_tableau(read_input(input));
        input_json = {{"tableau", render(t)}};
        p = schur_regularize(t);
      } else {
        throw ParseError("regularize needs a tableau or --index");
      }
      json numeric = json::array();
      for (double t : ts) numeric.push_back({{"T", t}, {"value_numeric", eval_tpoly(p, t, eval)}});
      result = {{"value", to_string(p)}, {"coefficients", tpoly_json(p)}, {"numeric", numeric},
                {"tolerance", cfg.tolerance}};
    } else if (*dec_cmd) {
      command = "decompose";
      const SkewShape host = parse_shape(read_input(host_input));
      const Ribbon r = Ribbon::from_shape(parse_shape(read_input(ribbon_input)));
      const Ribbon placed(host.content_set().empty() ? 0 : host.content_set().front(), r.steps());
      input_json = {{"host", render(host)}, {"ribbon", render(r.shape())}};
      const OutsideDecomposition theta = decomposition_from_ribbon(host, placed);
      const SubribbonTable table = subribbon_table(theta);
      result = {{"ribbon", ribbon_json(minimal_containing_ribbon(theta))},
                {"pieces", decomposition_json(theta)},
                {"subribbon_table", table_json(table)}};
    } else if (*jt_cmd) {
      command = "jt-check";
      const Tableau t = parse_tableau(read_input(input));
      const DiagonalTableau k = DiagonalTableau::from_tableau(t);
      const Ribbon r = Ribbon::from_shape(parse_shape(read_input(ribbon_input)));
      const std::vector<int> contents = t.shape().content_set();
      if (contents.empty()) throw PreconditionError("empty tableau");
      if (static_cast<int>(r.size()) != contents.back() - contents.front() + 1)
        throw PreconditionError("ribbon must have one box per content of the tableau");
      const Ribbon placed(contents.front(), r.steps());
      const OutsideDecomposition theta = decomposition_from_ribbon(t.shape(), placed);
      input_json = {{"tableau", render(t)}, {"ribbon", render(r.shape())}};
      if (regularized) {
        input_json["T"] = parse_doubles(t_text);
        const RegularizedJtReport rep = regularized_jt_check(k, theta, parse_doubles(t_text), eval);
        json samples = json::array();
        for (std::size_t i = 0; i < rep.t_samples.size(); ++i)
          samples.push_back({{"T", rep.t_samples[i]}, {"lhs_numeric", rep.lhs[i]}, {"rhs_numeric", rep.rhs[i]}});
        result = {{"samples", samples},
                  {"max_discrepancy_numeric", rep.max_discrepancy},
                  {"det_t_spread_numeric", rep.det_t_spread},
                  {"admissible", rep.admissible},
                  {"tolerance", cfg.tolerance}};
      } else {
        if (M < 1) throw PreconditionError("jt-check needs -M >= 1 (or --regularized)");
        input_json["M"] = M;
        const JacobiTrudiReport rep = jacobi_trudi_check_exact(k, theta, M, cfg.enumeration_cap);
        result = {{"equal", rep.equal}, {"lhs", to_string(rep.lhs)}, {"rhs", to_string(rep.rhs)},
                  {"matrix", matrix_json(rep.matrix)}};
      }
      result["pieces"] = decomposition_json(theta);
    } else if (*cb_eval) {
      command = "checkerboard eval";
      const Tableau t = parse_tableau(read_input(input));
      input_json = {{"tableau", render(t)}, {"strategy", strategy_text}};
      const std::vector<double> ts = parse_doubles(t_text);
      const DiagonalTableau k = DiagonalTableau::from_tableau(t);
      const auto values = checkerboard_values(k);
      bool twelve = values && *values == std::pair{1, 2};
      if (!twelve && k.by_content().size() == 1 && k.by_content().begin()->second == 2) twelve = true;
      if (twelve) {
        try {
          const CheckerboardEvaluation e = evaluate_checkerboard_12(t);
          result = evaluation_json(e, eval, ts);
          for (const auto& f : e.flags) out.diagnostics.push_back(f);
        } catch (const PreconditionError& err) {
          const TPoly p = schur_regularize(t);
          json numeric = json::array();
          for (double tv : ts) numeric.push_back({{"T", tv}, {"value_numeric", eval_tpoly(p, tv, eval)}});
          result = {{"value", nullptr}, {"numeric", numeric}, {"tolerance", cfg.tolerance}};
          out.diagnostics.push_back(std::string("no closed form: ") + err.what() + "; numeric value only");
        }
      } else {
        RibbonStrategy strategy = RibbonStrategy::Auto;
        if (strategy_text == "staircase") {
          strategy = RibbonStrategy::Staircase;
        } else if (strategy_text == "column") {
          strategy = RibbonStrategy::Column;
        } else if (strategy_text != "auto") {
          throw ParseError("unknown strategy '" + strategy_text + "'");
        }
        const CheckerboardEvaluation e = evaluate_checkerboard_13(t, strategy);
        result = evaluation_json(e, eval, ts);
        for (const auto& f : e.flags) out.diagnostics.push_back(f);
      }
      result["tolerance"] = cfg.tolerance;
    } else if (*cb_alpha) {
      command = "checkerboard alpha";
      int lo = 0, hi = 0;
      if (const auto dots = n_text.find(".."); dots != std::string::npos) {
        lo = parse_int(n_text.substr(0, dots), "--n");
        hi = parse_int(n_text.substr(dots + 2), "--n");
      } else {
        lo = hi = parse_int(n_text, "--n");
      }
      if (lo < 1 || hi < lo) throw PreconditionError("--n needs 1 <= lo <= hi");
      input_json = {{"n", n_text}};
      json rows = json::array();
      for (int n = lo; n <= hi; ++n) {
        const Rational a = alpha(n);
        rows.push_back({{"n", n}, {"alpha", to_string(a)}, {"denominator", to_string(Integer(a.get_den()))},
                        {"g13", to_string(g13(n))}});
      }
      result = lo == hi ? rows.front() : json{{"values", rows}};
    } else if (*cb_tess) {
      command = "checkerboard tessellate";
      const Tableau t = parse_tableau(read_input(input));
      const StairKind kind = parse_stair_kind(kind_text);
      input_json = {{"tableau", render(t)}, {"kind", to_string(kind)}};
      const DiagonalTableau k = DiagonalTableau::from_tableau(t);
      const auto values = checkerboard_values(k);
      if (!values) throw PreconditionError("not a checkerboard with two alternating values");
      const TessellationResult r = tessellation_check(t, kind, values->first, values->second);
      json pieces = json::array();
      for (std::size_t i = 0; i < r.pieces.size(); ++i)
        pieces.push_back({{"cells", cells_json(r.theta.pieces[i])},
                          {"stair", r.pieces[i] ? json(to_string(*r.pieces[i])) : json(nullptr)}});
      result = {{"tessellates", r.ok}, {"ribbon", ribbon_json(r.ribbon)}, {"pieces", pieces}};
    } else if (*mzv_cmd) {
      command = "mzv";
      const MzvIndex idx = parse_index(index_text);
      input_json = {{"index", format_index(idx)}};
      result = {{"value_numeric", numeric_mzv(idx, cfg.tolerance)}, {"tolerance", cfg.tolerance}};
    }
    out.doc = {{"command", command}, {"input", input_json}, {"result", result}, {"diagnostics", out.diagnostics}};
  } catch (const ParseError& e) {
    code = kParse;
    out.doc = {{"command", command}, {"input", input_json}, {"error", {{"kind", "parse"}, {"message", e.what()}}}};
  } catch (const PreconditionError& e) {
    code = kPrecondition;
    out.doc = {{"command", command}, {"input", input_json}, {"error", {{"kind", "precondition"}, {"message", e.what()}}}};
  } catch (const ResourceError& e) {
    code = kResource;
    out.doc = {{"command", command}, {"input", input_json}, {"error", {{"kind", "resource"}, {"message", e.what()}}}};
  } catch (const InternalError& e) {
    code = kInternal;
    out.doc = {{"command", command}, {"input", input_json}, {"error", {{"kind", "internal"}, {"message", e.what()}}}};
  } catch (const std::exception& e) {
    code = kInternal;
    out.doc = {{"command", command}, {"input", input_json}, {"error", {{"kind", "internal"}, {"message", e.what()}}}};
  }
  std::cout << out.doc.dump(pretty ? 2 : -1) << '\n';
  if (code != kOk) std::cerr << "error: " << out.doc["error"]["message"].get<std::string>() << '\n';
  return code;
}
