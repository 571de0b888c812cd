// qsr: command line front end for the joint RCC8 / rectangle solver.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsr/netfile.hpp"
#include "qsr/solver.hpp"

using namespace qsr;

namespace {

enum Exit { kSat = 0, kUnsat = 1, kUnknown = 2, kInputError = 3 };

int exit_of(Status s) {
  switch (s) {
    case Status::sat: return kSat;
    case Status::unsat: return kUnsat;
    default: return kUnknown;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool all_dir49(const JointNetwork& net) {
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j)
      if (!in_dir49(net.dir.at(i, j))) return false;
  return true;
}

bool all_basic(const JointNetwork& net) { return net.top.is_basic() && net.dir.is_basic(); }

// pc / biclose / bipath: the propagated network as text inside a small JSON
int print_propagated(const std::optional<JointNetwork>& out) {
  nlohmann::ordered_json j;
  j["status"] = out ? "consistent" : "inconsistent";
  j["network"] = out ? nlohmann::ordered_json(serialize_network(*out)) : nullptr;
  std::cout << j.dump(2) << "\n";
  return out ? kSat : kUnsat;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int dump_tables(const std::string& which) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  auto dump = [&](const Calculus& c) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b)
        rows.push_back({c.basic_name(a), c.basic_name(b),
                        c.compose_table(c.basic(a), c.basic(b)).to_string()});
    j[c.name()] = rows;
  };
  if (which == "ia" || which == "all") dump(ia_calculus());
  if (which == "rcc8" || which == "all") dump(rcc8_calculus());
  if (which == "ra" || which == "all") dump(ra_calculus());
  std::cout << j.dump(1) << "\n";
  return kSat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qualitative solver for joint RCC8 and rectangle networks"};
  app.require_subcommand(1);
  bool assume_h8 = false;
  app.add_flag("--assume-h8", assume_h8, "treat every RCC8 entry as tractable");

  std::string input = "-";
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("file", input, "network file, '-' for stdin");
    return sub;
  };
  auto* check = with_input(app.add_subcommand("check", "decide satisfiability"));
  auto* pc = with_input(app.add_subcommand("pc", "path-consistency on both components"));
  auto* biclose = with_input(app.add_subcommand("biclose", "bi-closure"));
  auto* bipath = with_input(app.add_subcommand("bipath", "bipath-consistency"));
  auto* solve = with_input(app.add_subcommand("solve", "decide a DIR49 network and build a witness"));
  auto* epsilon = with_input(app.add_subcommand("epsilon", "approximate solution of a basic network"));
  std::string eps_text = "1/100";
  epsilon->add_option("--eps", eps_text, "tolerance as a rational");
  auto* realize = with_input(app.add_subcommand("realize", "solve and draw the regions"));
  std::string svg_path;
  realize->add_option("--svg", svg_path, "output SVG path")->required();
  auto* gen = app.add_subcommand("gen", "random satisfiable basic instance");
  std::uint64_t seed = 1;
  std::size_t vars = 3;
  gen->add_option("--seed", seed);
  gen->add_option("--vars", vars)->check(CLI::Range(1, 64));
  auto* tables = app.add_subcommand("tables", "dump composition tables");
  std::string which = "ia";
  tables->add_option("--calculus", which)->check(CLI::IsMember({"ia", "rcc8", "ra", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  SolveOptions opts;
  opts.assume_h8 = assume_h8;

  try {
    if (gen->parsed()) {
      std::cout << format_instance(gen_instance(seed, vars));
      return kSat;
    }
    if (tables->parsed()) return dump_tables(which);

    const JointNetwork net = parse_network(read_input(input));

    if (pc->parsed()) {
      auto top = path_consistency(net.top);
      auto dir = top ? path_consistency(net.dir) : std::nullopt;
      if (!top || !dir) return print_propagated(std::nullopt);
      JointNetwork out = net;
      out.top = *top;
      out.dir = *dir;
      return print_propagated(out);
    }
    if (biclose->parsed()) return print_propagated(qsr::biclose(net));
    if (bipath->parsed()) return print_propagated(bipath_consistency(net));

    if (check->parsed()) {
      const Verdict v = check_general(net, opts);
      std::cout << verdict_json(v, net);
      return exit_of(v.status);
    }
    if (solve->parsed()) {
      if (!all_dir49(net)) {
        std::cerr << "qsr: solve needs every dir entry in DIR49; use check or epsilon\n";
        return kInputError;
      }
      const Verdict v = decide_dir49(net, opts);
      std::cout << verdict_json(v, net);
      return exit_of(v.status);
    }
    if (epsilon->parsed()) {
      Rational eps;
      try {
        eps = parse_rational(eps_text);
      } catch (const std::exception& e) {
        std::cerr << "qsr: bad --eps: " << e.what() << "\n";
        return kInputError;
      }
      try {
        const Verdict v = epsilon_solve(net, eps, opts);
        std::cout << verdict_json(v, net);
        return exit_of(v.status);
      } catch (const StageError& e) {
        std::cerr << "qsr: " << e.what() << "\n";
        if (e.stage() == "basic") return kInputError;
        nlohmann::ordered_json j;
        j["status"] = "unsat";
        j["stage"] = e.stage();
        std::cout << j.dump(2) << "\n";
        return kUnsat;
      }
    }
    if (realize->parsed()) {
      Verdict v;
      if (all_dir49(net)) {
        v = decide_dir49(net, opts);
      } else if (all_basic(net)) {
        v = epsilon_solve(net, parse_rational("1/100"), opts);
      } else {
        std::cerr << "qsr: realize needs a DIR49 or basic network\n";
        return kInputError;
      }
      if (v.witness) {
        write_file(svg_path, to_svg(v.witness->regions, v.witness->rects));
        std::cout << verdict_json(v, net, svg_path);
      } else {
        std::cout << verdict_json(v, net);
      }
      return exit_of(v.status);
    }
  } catch (const ParseError& e) {
    std::cerr << "qsr: " << e.what() << "\n";
    return kInputError;
  } catch (const StageError& e) {
    std::cerr << "qsr: " << e.what() << "\n";
    return e.stage() == "basic" ? kInputError : kUnsat;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qsr: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "qsr: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
