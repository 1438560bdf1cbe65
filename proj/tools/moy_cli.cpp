// moy: command-line front end for MOY graph evaluations and generating series.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "moy/checks.hpp"
#include "moy/cycles.hpp"
#include "moy/diagram.hpp"
#include "moy/genseries.hpp"
#include "moy/homfly.hpp"
#include "moy/io.hpp"
#include "moy/statesum.hpp"

namespace {

using namespace moy;

constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kCheckFailed = 3;
constexpr int kInternal = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PlanarDiagram load(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
  }
  for (const std::string& name : builtin_names())
    if (name == arg) return builtin(name);
  throw InputError("no such file or builtin: " + arg);
}

std::string coloring_text(const Coloring& c) {
  const std::string s = format_coloring(c);
  return s.empty() ? "(empty)" : s;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int report_suite(const SuiteReport& r, bool json) {
  if (json) {
    Json lines = Json::array();
    for (const CheckLine& l : r.lines) lines.push_back({{"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
    print_json({{"suite", r.suite}, {"ok", r.ok()}, {"checks", lines}});
  } else {
    for (const CheckLine& l : r.lines)
      std::cout << (l.ok ? "PASS " : "FAIL ") << l.name << (l.detail.empty() ? "" : "  " + l.detail) << '\n';
    std::cout << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << '\n';
  }
  return r.ok() ? 0 : kCheckFailed;
}

template <class Table>
void print_table(const Table& t, bool json) {
  if (json) {
    print_json(table_to_json(t));
    return;
  }
  for (const Coloring& g : display_order(t)) {
    std::ostringstream value;
    if constexpr (std::is_same_v<typename Table::mapped_type, Integer>)
      value << t.at(g);
    else
      value << to_string(t.at(g));
    std::cout << coloring_text(g) << ": " << value.str() << '\n';
  }
}

int cmd_cycles(const PlanarDiagram& d, bool json) {
  const CycleSet cs = all_cycles(d);
  if (json) {
    print_json(cycles_to_json(cs));
    return 0;
  }
  auto ids = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s + "]";
  };
  for (std::size_t i = 0; i < cs.size(); ++i)
    std::cout << "C" << i << ": edges " << ids(cs[i].edges) << " circles " << ids(cs[i].circles) << " components "
              << cs[i].components.size() << " rot " << cs[i].rot << '\n';
  std::cout << "pairing (half-units):\n";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j)
      std::cout << (j ? " " : "") << std::setw(3) << intersection_pairing_halves(cs[i], cs[j]);
    std::cout << '\n';
  }
  return 0;
}

int cmd_homfly(const PlanarDiagram& d, int max_degree, int q_order, bool check, bool check_shift_flag, int specialize,
               bool json) {
  const DiagramAlgebras alg(d);
  const HomflySeries f = homfly_series(alg, max_degree, q_order);
  bool ok = true;
  Json out = {{"max_x_degree", max_degree}, {"q_order", q_order}, {"working_q", f.working_q}};
  Json rows = Json::array();
  std::ostringstream text;
  text << "max x-degree " << max_degree << ", coefficients through v^" << q_order << " (v = q^1/4), working bound v^"
       << f.working_q << '\n';
  for (const Coloring& g : display_order(f.table)) {
    rows.push_back({{"coloring", to_json(g)}, {"degree", f.degrees.at(g)}, {"value", to_json(f.table.at(g))}});
    text << "[" << f.degrees.at(g) << "] " << coloring_text(g) << ": " << to_string(f.table.at(g)) << '\n';
  }
  out["table"] = rows;
  Json reports = Json::array();
  auto residual = [&](const ResidualReport& r) {
    ok = ok && r.ok;
    reports.push_back({{"name", r.name}, {"ok", r.ok}, {"exact_to", r.exact_to}, {"nonzero", r.nonzero}});
    text << (r.ok ? "PASS " : "FAIL ") << r.name << "  exact to v^" << r.exact_to << '\n';
    for (const std::string& s : r.nonzero) text << "  nonzero at " << s << '\n';
  };
  if (check) residual(check_fphi(alg, max_degree, q_order));
  if (check_shift_flag) {
    const ShiftReport s = check_shift(alg, max_degree, q_order);
    residual(s.square3);
    residual(s.square4);
    residual(s.shift);
  }
  if (specialize > 0) {
    const SpecializationReport s = check_specialization(alg, f, specialize);
    ok = ok && s.ok();
    reports.push_back({{"name", "a = q^" + std::to_string(specialize)}, {"ok", s.ok()}, {"message", s.message()}});
    text << (s.ok() ? "PASS " : "FAIL ") << "a = q^" << specialize << "  " << s.message() << '\n';
  }
  out["reports"] = reports;
  if (json)
    print_json(out);
  else
    std::cout << text.str();
  return ok ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact MOY graph evaluations, cycle-polynomial series and HOMFLY generating series"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Structured output");

  std::string file;
  int n = 1;
  std::string color;
  bool check = false;
  bool check_shift_flag = false;
  int specialize = 0;
  int max_degree = 3;
  int q_order = 24;
  std::string suite;
  std::string name;

  auto* builtin_cmd = app.add_subcommand("builtin", "Print a builtin fixture as a diagram file");
  builtin_cmd->add_option("NAME", name, "unknot, theta or tetrahedron")->required();

  auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", file, "Diagram file or builtin name")->required(); };
  auto add_n = [&](CLI::App* sub, bool zero_ok) {
    sub->add_option("--N", n, "Rank N")->required()->check(CLI::Range(zero_ok ? 0 : 1, 64));
  };

  auto* cycles_cmd = app.add_subcommand("cycles", "List all cycles and the intersection pairing");
  add_file(cycles_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one coloring by the state sum");
  add_file(eval_cmd);
  add_n(eval_cmd, false);
  eval_cmd->add_option("--color", color, "Assignments such as e0=1,e1=2,c0=1")->required();

  auto* table_cmd = app.add_subcommand("table", "State-sum evaluation of every coloring with nonzero value");
  add_file(table_cmd);
  add_n(table_cmd, false);

  auto* classical_cmd = app.add_subcommand("classical", "Coefficients of the N-th power of the classical cycle polynomial");
  add_file(classical_cmd);
  add_n(classical_cmd, true);
  classical_cmd->add_flag("--check", check, "Compare with the classical evaluations");

  auto* series_cmd = app.add_subcommand("series", "Coefficients of the quantum Pochhammer product of length N");
  add_file(series_cmd);
  add_n(series_cmd, false);
  series_cmd->add_flag("--check", check, "Compare with the state sum");

  auto* homfly_cmd = app.add_subcommand("homfly", "Truncated HOMFLY generating series");
  add_file(homfly_cmd);
  homfly_cmd->add_option("--max-x-degree", max_degree, "Degree bound D")->required()->check(CLI::Range(0, 32));
  homfly_cmd->add_option("--q-order", q_order, "Keep v-exponents up to Q (v = q^1/4)")
      ->required()
      ->check(CLI::Range(0, 4096));
  homfly_cmd->add_flag("--check", check, "Check the inversion identity");
  homfly_cmd->add_flag("--check-shift", check_shift_flag, "Check the a -> q^2 a shift identity");
  homfly_cmd->add_option("--specialize", specialize, "Compare a = q^N with the state sum")->check(CLI::Range(1, 64));

  auto* check_cmd = app.add_subcommand("check", "Run an invariant suite");
  add_file(check_cmd);
  add_n(check_cmd, false);
  check_cmd->add_option("--suite", suite, "thm1, thm2, thm3, weights or mu")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "weights", "mu"}));
  check_cmd->add_option("--max-x-degree", max_degree, "Degree bound for thm3")->check(CLI::Range(0, 32));
  check_cmd->add_option("--q-order", q_order, "v-exponent bound for thm3")->check(CLI::Range(0, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*builtin_cmd) {
      std::cout << builtin_text(name);
      return 0;
    }
    const PlanarDiagram d = load(file);
    if (*cycles_cmd) return cmd_cycles(d, json);
    if (*eval_cmd) {
      const Coloring g = parse_coloring(d, color);
      const ColoringCheck v = validate_coloring(d, g);
      if (!v.ok()) throw std::invalid_argument(v.message());
      const QLaurent p = moy_eval(d, g, n);
      if (json)
        print_json({{"coloring", to_json(g)}, {"N", n}, {"value", to_json(p)}});
      else
        std::cout << to_string(p) << '\n';
      return 0;
    }
    if (*table_cmd) {
      print_table(eval_table(d, n), json);
      return 0;
    }
    if (*classical_cmd) {
      if (check) return report_suite(check_classical_series(d, n), json);
      print_table(classical_series(d, n), json);
      return 0;
    }
    if (*series_cmd) {
      if (check) return report_suite(check_pochhammer_series(d, n), json);
      print_table(generating_series_n(d, n), json);
      return 0;
    }
    if (*homfly_cmd) return cmd_homfly(d, max_degree, q_order, check, check_shift_flag, specialize, json);
    if (*check_cmd) {
      if (suite == "thm1") return report_suite(check_classical_series(d, n), json);
      if (suite == "thm2") return report_suite(check_pochhammer_series(d, n), json);
      if (suite == "thm3") return report_suite(check_homfly_identities(d, max_degree, q_order, n), json);
      if (suite == "weights") return report_suite(check_weights(d, n), json);
      return report_suite(check_mu(d), json);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
