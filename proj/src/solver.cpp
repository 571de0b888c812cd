#include "qsr/solver.hpp"

#include <stdexcept>

namespace qsr {

const char* status_name(Status s) {
  switch (s) {
    case Status::sat:
      return "sat";
    case Status::unsat:
      return "unsat";
    case Status::unknown:
      return "unknown";
  }
  return "unknown";
}

std::optional<Network> path_consistency(const Network& net) {
  Network out = net;
  if (!enforce_path_consistency(out)) return std::nullopt;
  return out;
}

std::optional<JointNetwork> bipath_consistency(const JointNetwork& net) {
  JointNetwork cur = net;
  while (true) {
    auto closed = biclose(cur);
    if (!closed) return std::nullopt;
    if (!enforce_path_consistency(closed->top)) return std::nullopt;
    if (!enforce_path_consistency(closed->dir)) return std::nullopt;
    if (*closed == cur) return cur;
    cur = std::move(*closed);
  }
}

Network scenario_h8(const Network& top) {
  Network out(top.calculus(), top.size());
  const Calculus& c = top.calculus();
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t j = i + 1; j < top.size(); ++j) out.set(i, j, c.basic(h_refine(top.at(i, j))));
  return out;
}

Fragment classify(const JointNetwork& net, const SolveOptions& opts) {
  const H8Membership& h8 = opts.h8 ? *opts.h8 : active_h8();
  Fragment f;
  bool all_h8 = true;
  f.dir_in_dir49 = true;
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      if (!h8.contains(net.top.at(i, j))) all_h8 = false;
      if (!in_dir49(net.dir.at(i, j))) f.dir_in_dir49 = false;
    }
  if (opts.assume_h8 || all_h8)
    f.top_in_h8 = true;
  else if (h8.complete())
    f.top_in_h8 = false;
  return f;
}

namespace {

Relation tau_images() {
  using namespace ia;
  return ia_calculus().make({b, o, d, eq, di, oi, bi});
}

std::optional<Network> solve_ia(Network net) {
  if (!enforce_path_consistency(net)) return std::nullopt;
  const std::size_t n = net.size();
  std::size_t bi = 0, bj = 0, best = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t c = net.at(i, j).count();
      if (c > 1 && (best == 0 || c < best)) {
        best = c;
        bi = i;
        bj = j;
      }
    }
  if (best == 0) return net;
  const Calculus& calc = net.calculus();
  for (auto b : net.at(bi, bj).basics()) {
    Network next = net;
    next.set(bi, bj, calc.basic(b));
    if (auto s = solve_ia(std::move(next))) return s;
  }
  return std::nullopt;
}

std::optional<Network> solve_ra(Network net) {
  if (!enforce_path_consistency(net)) return std::nullopt;
  const std::size_t n = net.size();
  std::size_t bi = 0, bj = 0, best = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Relation& r = net.at(i, j);
      if (ra_is_product(r)) continue;
      const std::size_t c = ra_project(r, 0).count();
      if (best == 0 || c < best) {
        best = c;
        bi = i;
        bj = j;
      }
    }
  if (best != 0) {
    // split the entry into its x-slices, each of which is a product
    const Relation e = net.at(bi, bj);
    for (auto x : ra_project(e, 0).basics()) {
      Network next = net;
      next.set(bi, bj, e & ra_product(ia_calculus().basic(x), ia_calculus().universal()));
      if (auto s = solve_ra(std::move(next))) return s;
    }
    return std::nullopt;
  }
  // all entries are products: the axes are independent
  auto xs = solve_ia(axis_network(net, 0));
  if (!xs) return std::nullopt;
  auto ys = solve_ia(axis_network(net, 1));
  if (!ys) return std::nullopt;
  Network out(ra_calculus(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.set(i, j, ra_calculus().basic(ra_index(xs->at(i, j).first(), ys->at(i, j).first())));
  return out;
}

Verdict unsat_verdict(Verdict v, const std::string& why) {
  v.status = Status::unsat;
  v.trace.push_back(why);
  return v;
}

struct Dir49Search {
  const JointNetwork& input;
  const SolveOptions& opts;
  const H8Membership& h8;
  Verdict verdict;

  bool in_h8(const Relation& r) const { return opts.assume_h8 || h8.contains(r); }

  // top is path-consistent with every entry in the tractable set.
  bool fast_path(const Network& top) {
    JointNetwork joint = input;
    joint.top = top;
    // one biclose + pc round is not enough: pc can refine top again and
    // the new entry has to be pushed back through the pair tables
    auto closed = bipath_consistency(joint);
    if (!closed) {
      verdict.trace.push_back("bipath: empty entry");
      return false;
    }
    const Network& top2 = closed->top;
    Network dir_tau = closed->dir;
    const Relation t2 = ra_product(tau_images(), tau_images());
    for (std::size_t i = 0; i < dir_tau.size(); ++i)
      for (std::size_t j = i + 1; j < dir_tau.size(); ++j) dir_tau.refine(i, j, t2);
    if (!solve_ra(dir_tau)) {
      verdict.trace.push_back("biclosed dir: no scenario");
      return false;
    }
    verdict.status = Status::sat;
    verdict.trace.push_back("sat: biclosed top path-consistent, biclosed dir satisfiable");
    if (opts.construct) build_witness(top2, closed->dir);
    return true;
  }

  void build_witness(const Network& top2, const Network& dir) {
    try {
      Witness w;
      w.top = scenario_h8(top2);
      Network restricted = dir;
      const Relation t2 = ra_product(tau_images(), tau_images());
      for (std::size_t i = 0; i < dir.size(); ++i)
        for (std::size_t j = i + 1; j < dir.size(); ++j)
          restricted.refine(i, j, t2 & induced_era(w.top.at(i, j)));
      auto s = solve_ra(restricted);
      if (!s) throw std::logic_error("no tau-scenario compatible with the topological scenario");
      w.dir = *s;
      auto rects = rectangle_solution(w.dir);
      if (!rects) throw std::logic_error("rectangle solution failed");
      w.rects = *rects;
      w.regions = realize_regions(w.top, w.rects, input.names).regions;
      verdict.witness = std::move(w);
    } catch (const std::exception& e) {
      verdict.trace.push_back(std::string("witness construction failed: ") + e.what());
    }
  }

  bool search(const Network& top) {
    const std::size_t n = top.size();
    std::size_t bi = 0, bj = 0, best = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Relation& r = top.at(i, j);
        if (in_h8(r)) continue;
        if (best == 0 || r.count() < best) {
          best = r.count();
          bi = i;
          bj = j;
        }
      }
    if (best == 0) return fast_path(top);
    verdict.trace.push_back("split top(" + input.names[bi] + "," + input.names[bj] + ") " +
                            top.at(bi, bj).to_string());
    for (auto b : top.at(bi, bj).basics()) {
      Network next = top;
      next.set(bi, bj, top.calculus().basic(b));
      if (!enforce_path_consistency(next)) continue;
      if (search(next)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<Network> tau_scenario(const Network& dir) {
  Network net = dir;
  const Relation t2 = ra_product(tau_images(), tau_images());
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j) net.refine(i, j, t2);
  return solve_ra(std::move(net));
}

Verdict decide_dir49(const JointNetwork& net, const SolveOptions& opts) {
  Verdict v;
  v.fragment = classify(net, opts);
  if (!v.fragment.dir_in_dir49)
    throw std::invalid_argument(
        "decide_dir49: some directional constraint lies outside DIR49; use check_general");
  Network top = net.top;
  if (!enforce_path_consistency(top)) return unsat_verdict(std::move(v), "pc(top): inconsistent");
  v.trace.push_back("pc(top)");
  Dir49Search search{net, opts, opts.h8 ? *opts.h8 : active_h8(), std::move(v)};
  if (!search.search(top)) {
    search.verdict.status = Status::unsat;
    search.verdict.trace.push_back("unsat");
  }
  return std::move(search.verdict);
}

Verdict check_general(const JointNetwork& net, const SolveOptions& opts) {
  const Fragment f = classify(net, opts);
  if (f.dir_in_dir49) return decide_dir49(net, opts);
  Verdict v;
  v.fragment = f;
  auto bp = bipath_consistency(net);
  if (!bp) return unsat_verdict(std::move(v), "bipath: inconsistent");
  v.trace.push_back("bipath: fixpoint reached");
  JointNetwork gen = *bp;
  for (std::size_t i = 0; i < gen.size(); ++i)
    for (std::size_t j = i + 1; j < gen.size(); ++j)
      gen.dir.set(i, j, dir49_generalize(gen.dir.at(i, j)));
  SolveOptions inner = opts;
  inner.construct = false;
  const Verdict g = decide_dir49(gen, inner);
  if (g.status == Status::unsat) return unsat_verdict(std::move(v), "generalized network unsat");
  v.status = Status::unknown;
  v.trace.push_back("generalized network sat; original undecided");
  return v;
}

Verdict epsilon_solve(const JointNetwork& net, const Rational& eps, const SolveOptions& opts) {
  if (!(eps > 0 && eps < 1)) throw StageError("basic", "eps must lie in (0,1)");
  if (!net.top.is_basic() || !net.dir.is_basic())
    throw StageError("basic", "both component networks must be basic");
  Verdict v;
  v.fragment = classify(net, opts);
  JointNetwork cur = net;
  if (!is_biclosed(cur)) {
    auto closed = biclose(cur);
    if (!closed) throw StageError("biclose", "bi-closure empties a constraint");
    cur = std::move(*closed);
    v.trace.push_back("biclose");
  }
  if (!path_consistency(cur.top)) throw StageError("components", "topological network unsatisfiable");
  if (!rectangle_solution(cur.dir))
    throw StageError("components", "directional network unsatisfiable");

  JointNetwork gen = cur;
  for (std::size_t i = 0; i < gen.size(); ++i)
    for (std::size_t j = i + 1; j < gen.size(); ++j)
      gen.dir.set(i, j, dir49_generalize(gen.dir.at(i, j)));
  SolveOptions inner = opts;
  inner.construct = false;
  if (decide_dir49(gen, inner).status != Status::sat)
    throw StageError("generalization", "generalized joint network unsatisfiable");
  v.trace.push_back("generalized network sat");

  const std::size_t n = cur.size();
  const auto xs = epsilon_shift(axis_network(cur.dir, 0), eps);
  const auto ys = epsilon_shift(axis_network(cur.dir, 1), eps);
  Witness w;
  w.top = cur.top;
  w.dir = Network(ra_calculus(), n);
  for (std::size_t i = 0; i < n; ++i) w.rects.emplace_back(xs[i], ys[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t b = cur.dir.at(i, j).first();
      const std::size_t s = ra_index(tau(ra_x(b)), tau(ra_y(b)));
      w.dir.set(i, j, ra_calculus().basic(s));
      if (ra_relation_of(w.rects[i], w.rects[j]) != s)
        throw std::logic_error("epsilon_solve: shifted rectangles miss the tau-version");
      v.chi_report.push_back({i, j, 0, ra_x(b), chi(ra_x(b), xs[i], xs[j])});
      v.chi_report.push_back({i, j, 1, ra_y(b), chi(ra_y(b), ys[i], ys[j])});
      if (s != b) v.approximate = true;
    }
  if (auto bad = compatible(w.rects, w.top); !bad.empty())
    throw StageError("realize", "rectangles incompatible with topology at (" +
                                    cur.names[bad[0].i] + "," + cur.names[bad[0].j] +
                                    "): " + bad[0].clause);
  try {
    w.regions = realize_regions(w.top, w.rects, cur.names).regions;
  } catch (const std::invalid_argument& e) {
    throw StageError("realize", e.what());
  }
  const auto report = verify_regions(w.regions, w.top);
  if (!report.ok) throw StageError("realize", "constructed regions do not verify");
  v.witness = std::move(w);
  v.status = Status::sat;
  return v;
}

std::vector<std::string> recheck_witness(const JointNetwork& net, const Witness& w,
                                         bool approximate) {
  std::vector<std::string> problems;
  const std::size_t n = net.size();
  if (w.rects.size() != n || w.regions.size() != n) {
    problems.push_back("witness size mismatch");
    return problems;
  }
  const auto report = verify_regions(w.regions, net.top);
  if (!report.separated) problems.push_back("disk pieces at distinct centres meet");
  for (const auto& m : report.mismatches)
    problems.push_back("top(" + net.names[m.i] + "," + net.names[m.j] + ") observed " +
                       (m.observed ? rcc8_name(*m.observed) : std::string("undecided")));
  for (std::size_t i = 0; i < n; ++i)
    if (w.regions[i].computed_mbr() != w.rects[i])
      problems.push_back("MBR of " + net.names[i] + " differs from its rectangle");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t rel = ra_relation_of(w.rects[i], w.rects[j]);
      bool ok = false;
      if (!approximate) {
        ok = net.dir.at(i, j).test(rel);
      } else {
        for (auto b : net.dir.at(i, j).basics())
          if (ra_index(tau(ra_x(b)), tau(ra_y(b))) == rel) ok = true;
      }
      if (!ok)
        problems.push_back("dir(" + net.names[i] + "," + net.names[j] + ") observed " +
                           ra_name(rel));
    }
  return problems;
}

}  // namespace qsr
