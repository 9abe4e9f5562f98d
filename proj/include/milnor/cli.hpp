// Command-line front end, kept in the library so it can be driven in-process.
//
// Exit codes:
//   0   success; `equiv`: equivalent; `gamma`: no obstruction
//   1   `equiv`: not link-homotopic; `gamma`: braid-closure obstruction found
//   2   usage error            3  file I/O error       4  malformed input file
//   5   word error             6  invalid diagram      7  move not applicable
//   8   bad index / target     9  bad spun data        10 internal error
//   11  selftest property failure

#ifndef MILNOR_CLI_HPP_
#define MILNOR_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conj_aut.hpp"
#include "engine.hpp"
#include "error.hpp"
#include "gauss_diagram.hpp"
#include "moves.hpp"
#include "properties.hpp"
#include "random.hpp"
#include "spun.hpp"
#include "text.hpp"

namespace milnor::cli {

struct Command {
  std::string name;  // table, mu, phi, equiv, stack, realize, move, count, gamma, selftest, help
  std::vector<std::string> inputs;
  std::string output;
  std::optional<MilnorIndex> index;
  MoveKind kind = MoveKind::SV;
  std::string at;
  int strands = 0;
  std::uint64_t seed = 0;
  std::size_t iters = 0;
  std::string help;  // filled for `help`
};

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

// Throws Error(ErrorCode::Usage) on any command-line problem.
inline Command parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Link-homotopy invariants of welded string links", "milnor"};
  app.require_subcommand(1);
  Command c;

  std::string file_a, file_b, index_text, kind_text;
  auto* table = app.add_subcommand("table", "print every non-repeating mu invariant");
  table->add_option("diagram", file_a, "Gauss diagram (.gd)")->required();

  auto* mu = app.add_subcommand("mu", "print one mu invariant");
  mu->add_option("diagram", file_a, "Gauss diagram (.gd)")->required();
  mu->add_option("--index", index_text, "index digits, last = component")->required();

  auto* phi_cmd = app.add_subcommand("phi", "print the conjugating automorphism");
  phi_cmd->add_option("diagram", file_a, "Gauss diagram (.gd)")->required();

  auto* equiv = app.add_subcommand("equiv", "decide link-homotopy equivalence (exit 0 iff equivalent)");
  equiv->add_option("a", file_a, "Gauss diagram (.gd)")->required();
  equiv->add_option("b", file_b, "Gauss diagram (.gd)")->required();

  auto* stack_cmd = app.add_subcommand("stack", "stack a below b");
  stack_cmd->add_option("a", file_a, "bottom diagram (.gd)")->required();
  stack_cmd->add_option("b", file_b, "top diagram (.gd)")->required();
  stack_cmd->add_option("-o", c.output, "output diagram")->required();

  auto* realize_cmd = app.add_subcommand("realize", "build a diagram with prescribed reduced longitudes");
  realize_cmd->add_option("targets", file_a, "targets file (.targets)")->required();
  realize_cmd->add_option("-o", c.output, "output diagram")->required();

  auto* move = app.add_subcommand("move", "apply one welded move");
  move->add_option("diagram", file_a, "Gauss diagram (.gd)")->required();
  move->add_option("--kind", kind_text, "sv|r1+|r1-|r2+|r2-|r3|oc")->required();
  move->add_option("--at", c.at, "move location")->required();
  move->add_option("-o", c.output, "output diagram")->required();

  auto* count = app.add_subcommand("count", "number and rank of the invariants");
  count->add_option("--strands", c.strands, "strand count")->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "double-circle classes and braid-closure obstruction");
  gamma_cmd->add_option("data", file_a, "spun data (.sd)")->required();

  auto* selftest = app.add_subcommand("selftest", "run the randomized property suite");
  selftest->add_option("--seed", c.seed, "PRNG seed")->required();
  selftest->add_option("--iters", c.iters, "cases per property")->required();

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    c.name = "help";
    c.help = app.help();
    return c;
  } catch (const CLI::ParseError& e) {
    fail(ErrorCode::Usage, e.what());
  }

  c.name = app.get_subcommands().front()->get_name();
  if (c.name == "help")
    return c;
  for (const std::string& f : {file_a, file_b})
    if (!f.empty())
      c.inputs.push_back(f);
  if (c.name == "mu")
    c.index = parse_milnor_index(index_text);
  if (c.name == "move") {
    try {
      c.kind = parse_move_kind(kind_text);
    } catch (const Error& e) {
      fail(ErrorCode::Usage, e.what());
    }
  }
  if (c.name == "count" && c.strands < 1)
    fail(ErrorCode::Usage, "--strands must be at least 1");
  return c;
}

namespace detail {

inline GaussDiagram load_diagram(const std::string& path) { return parse_gauss(read_file(path)); }

inline void report_selftest(const Command& c, const std::vector<PropertyReport>& reports, Outcome& o) {
  std::size_t failed = 0;
  for (const PropertyReport& r : reports) {
    if (r.passed()) {
      o.out += "ok   " + r.name + " (" + std::to_string(r.cases) + " cases)\n";
    } else {
      ++failed;
      o.out += "FAIL " + r.name + ": " + *r.failure + "\n";
    }
  }
  o.out += "selftest seed=" + std::to_string(c.seed) + " iters=" + std::to_string(c.iters) + ": " +
           std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " passed\n";
  o.code = failed ? static_cast<int>(ErrorCode::SelfTest) : 0;
}

// Runs fn, turning any exception into an exit code and a one-line diagnostic.
template <class Fn>
void guarded(Outcome& o, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    o.code = e.exit_code();
    o.err = "milnor: " + std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    o.code = static_cast<int>(ErrorCode::Internal);
    o.err = "milnor: internal error: " + std::string(e.what()) + "\n";
  }
}

} // namespace detail

inline Outcome execute(const Command& c) {
  Outcome o;
  detail::guarded(o, [&] {
    if (c.name == "help") {
      o.out = c.help;
    } else if (c.name == "table") {
      o.out = format_mu_table(mu_table(detail::load_diagram(c.inputs[0])));
    } else if (c.name == "mu") {
      const GaussDiagram d = detail::load_diagram(c.inputs[0]);
      o.out = "mu " + c.index->to_string() + " = " + mu(d, *c.index).str() + "\n";
    } else if (c.name == "phi") {
      o.out = format_conj_aut_normalized(phi(detail::load_diagram(c.inputs[0])));
    } else if (c.name == "equiv") {
      const GaussDiagram a = detail::load_diagram(c.inputs[0]);
      const GaussDiagram b = detail::load_diagram(c.inputs[1]);
      if (lh_equivalent(a, b)) {
        o.out = "equivalent\n";
      } else {
        const MuTable ta = mu_table(a), tb = mu_table(b);
        for (const auto& [idx, v] : ta)
          if (tb.at(idx) != v) {
            o.out = "not equivalent: mu " + idx.to_string() + " = " + v.str() + " vs " +
                    tb.at(idx).str() + "\n";
            break;
          }
        o.code = 1;
      }
    } else if (c.name == "stack") {
      const GaussDiagram a = detail::load_diagram(c.inputs[0]);
      const GaussDiagram b = detail::load_diagram(c.inputs[1]);
      write_file(c.output, format_gauss(stack(a, b)));
    } else if (c.name == "realize") {
      write_file(c.output, format_gauss(realize(parse_targets(read_file(c.inputs[0])))));
    } else if (c.name == "move") {
      const GaussDiagram d = detail::load_diagram(c.inputs[0]);
      write_file(c.output, format_gauss(apply_move(d, parse_move_location(c.kind, c.at))));
    } else if (c.name == "count") {
      const InvariantCount k = invariant_count(c.strands);
      o.out = "invariants " + k.total.str() + "\nrank " + k.rank.str() + "\n";
    } else if (c.name == "gamma") {
      const SpunSurfaceData data = parse_spun(read_file(c.inputs[0]));
      const std::vector<int> ids = data.ids();
      for (int i : ids)
        for (int j : ids)
          if (i != j)
            o.out += "gamma " + std::to_string(i) + " " + std::to_string(j) + " = " +
                     format_z2(gamma(data, i, j)) + "\n";
      if (auto w = braid_closure_obstruction(data)) {
        o.out += "obstruction j=" + std::to_string(w->j) + " i=" + std::to_string(w->i) +
                 " i'=" + std::to_string(w->i_prime) + "\n";
        o.code = 1;
      } else {
        o.out += "obstruction none\n";
      }
    } else if (c.name == "selftest") {
      Rng rng(c.seed);
      detail::report_selftest(c, run_all_properties(rng, c.iters), o);
    } else {
      fail(ErrorCode::Usage, "unknown command '" + c.name + "'");
    }
  });
  return o;
}

// argv excludes the program name.
inline Outcome run(const std::vector<std::string>& argv) {
  Outcome o;
  Command c;
  detail::guarded(o, [&] { c = parse_args(argv); });
  return o.code ? o : execute(c);
}

} // namespace milnor::cli

#endif
