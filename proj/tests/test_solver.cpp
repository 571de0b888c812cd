#include "doctest.h"
#include "oracle.hpp"
#include "qsr/solver.hpp"

using namespace qsr;
using namespace qsr::rcc;

namespace {

Relation ra(std::size_t x, std::size_t y) { return ra_calculus().basic(ra_index(x, y)); }
Relation top(std::size_t b) { return rcc8_calculus().basic(b); }

JointNetwork corners() {
  JointNetwork net(3);
  net.top.set(0, 1, top(EC));
  net.top.set(0, 2, top(EC));
  net.top.set(1, 2, top(DC));
  net.dir.set(0, 1, ra(ia::m, ia::m));
  net.dir.set(0, 2, ra(ia::m, ia::m));
  net.dir.set(1, 2, ra(ia::eq, ia::eq));
  return net;
}

JointNetwork ring() {
  JointNetwork net(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) net.top.set(i, j, top(DC));
  net.top.set(0, 2, top(EC));
  net.top.set(1, 3, top(EC));
  net.dir.set(0, 1, ra(ia::m, ia::eq));
  net.dir.set(0, 2, ra(ia::m, ia::mi));
  net.dir.set(0, 3, ra(ia::eq, ia::mi));
  net.dir.set(1, 2, ra(ia::eq, ia::mi));
  net.dir.set(1, 3, ra(ia::mi, ia::mi));
  net.dir.set(2, 3, ra(ia::mi, ia::eq));
  return net;
}

JointNetwork nested() {
  const Calculus& rc = rcc8_calculus();
  const Calculus& ic = ia_calculus();
  const Relation sdf = ic.make({ia::s, ia::d, ia::f}), sdfi = ic.make({ia::si, ia::di, ia::fi});
  JointNetwork net(3);
  net.top.set(0, 1, rc.make({NTPP, PO}));
  net.top.set(1, 2, rc.make({TPP, NTPPi}));
  net.top.set(0, 2, rc.make({DC, NTPP}));
  net.dir.set(0, 1, ra_product(ic.basic(ia::b), sdf) | ra(ia::eq, ia::eq));
  net.dir.set(1, 2, ra_product(ic.basic(ia::bi), sdfi) | ra(ia::eq, ia::eq));
  net.dir.set(0, 2, ra_product(sdf, sdf) | ra(ia::eq, ia::eq));
  return net;
}

JointNetwork generalized(JointNetwork net) {
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j) net.dir.set(i, j, dir49_generalize(net.dir.at(i, j)));
  return net;
}

}  // namespace

TEST_CASE("bipath leaves the two counterexamples unchanged") {
  for (const JointNetwork& net : {corners(), ring()}) {
    const auto out = bipath_consistency(net);
    REQUIRE(out);
    CHECK(*out == net);
  }
}

TEST_CASE("general check cannot settle the first counterexample") {
  const Verdict v = check_general(corners());
  CHECK(v.status == Status::unknown);
  CHECK_FALSE(v.fragment.dir_in_dir49);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("three-region DIR49 network is unsatisfiable") {
  CHECK_FALSE(bipath_consistency(nested()).has_value());
  const Verdict v = decide_dir49(nested());
  CHECK(v.status == Status::unsat);
  CHECK(v.fragment.dir_in_dir49);
  CHECK(check_general(nested()).status == Status::unsat);
  SolveOptions assume;
  assume.assume_h8 = true;
  CHECK(decide_dir49(nested(), assume).status == Status::unsat);
}

TEST_CASE("decide_dir49 rejects non-DIR49 input") {
  CHECK_THROWS_AS(decide_dir49(corners()), std::invalid_argument);
}

TEST_CASE("path-consistency helper and scenario extraction") {
  Network t(rcc8_calculus(), 3);
  t.set(0, 1, top(NTPP));
  t.set(1, 2, top(NTPP));
  const auto pc = path_consistency(t);
  REQUIRE(pc);
  CHECK(pc->at(0, 2) == top(NTPP));
  CHECK(path_consistency(*pc) == pc);
  Network u(rcc8_calculus(), 3);
  u.set(0, 1, rcc8_calculus().make({PO, NTPP}));
  const Network s = scenario_h8(*path_consistency(u));
  CHECK(s.is_basic());
  CHECK(s.at(0, 1) == top(PO));
  CHECK(path_consistency(s).has_value());
}

TEST_CASE("fragment classification") {
  const Fragment f = classify(corners());
  CHECK(f.top_in_h8 == std::optional<bool>(true));
  CHECK_FALSE(f.dir_in_dir49);
  SolveOptions assume;
  assume.assume_h8 = true;
  CHECK(classify(nested(), assume).top_in_h8 == std::optional<bool>(true));
  CHECK(classify(generalized(corners())).dir_in_dir49);
}

TEST_CASE("tau scenario uses only tau images") {
  Network d(ra_calculus(), 2);
  d.set(0, 1, dir49_generalize(ra(ia::m, ia::s)));
  const auto s = tau_scenario(d);
  REQUIRE(s);
  CHECK(s->at(0, 1) == ra(ia::o, ia::d));
  Network w(ra_calculus(), 2);
  w.set(0, 1, ra(ia::m, ia::m));
  CHECK_FALSE(tau_scenario(w).has_value());
}

TEST_CASE("decide_dir49 on generated instances builds checked witnesses") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto g = gen_instance(seed, 2 + seed % 5);
    const JointNetwork net = generalized(g.net);
    const Verdict v = decide_dir49(net);
    CAPTURE(seed);
    REQUIRE(v.status == Status::sat);
    REQUIRE(v.witness);
    CHECK(recheck_witness(net, *v.witness, false).empty());
  }
}

TEST_CASE("generated instances are bipath-consistent") {
  for (std::uint64_t seed = 20; seed < 30; ++seed) {
    const auto g = gen_instance(seed, 5);
    const auto out = bipath_consistency(g.net);
    REQUIRE(out);
    CHECK(*out == g.net);
  }
}

TEST_CASE("bipath output is a fixpoint") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    JointNetwork net(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (rng.chance(60)) net.top.set(i, j, rcc8_calculus().make(Bits(static_cast<unsigned long>(rng.uniform(1, 255)))));
        if (rng.chance(60)) net.dir.set(i, j, ra_product(ia_calculus().make(Bits(static_cast<unsigned long>(rng.uniform(1, 8191)))),
                                                         ia_calculus().make(Bits(static_cast<unsigned long>(rng.uniform(1, 8191))))));
      }
    const auto out = bipath_consistency(net);
    if (!out) continue;
    CHECK(out->top.refines(net.top));
    CHECK(out->dir.refines(net.dir));
    CHECK(is_biclosed(*out));
    CHECK(path_consistency(out->top) == out->top);
    CHECK(path_consistency(out->dir) == out->dir);
    CHECK(bipath_consistency(*out) == out);
  }
}

TEST_CASE("epsilon solve: disconnected regions meeting at a corner") {
  JointNetwork net(2);
  net.top.set(0, 1, top(DC));
  net.dir.set(0, 1, ra(ia::m, ia::m));
  const Rational eps(1, 100);
  const Verdict v = epsilon_solve(net, eps);
  REQUIRE(v.status == Status::sat);
  REQUIRE(v.witness);
  CHECK(v.approximate);
  CHECK(v.chi_report.size() == 2);
  for (const auto& c : v.chi_report) CHECK(c.value < eps);
  CHECK(ra_relation_of(v.witness->rects[0], v.witness->rects[1]) == ra_index(ia::o, ia::o));
  CHECK(recheck_witness(net, *v.witness, true).empty());
}

TEST_CASE("epsilon solve: tau-fixed input is solved exactly") {
  JointNetwork net(2);
  net.top.set(0, 1, top(DC));
  net.dir.set(0, 1, ra(ia::b, ia::b));
  const Verdict v = epsilon_solve(net, Rational(1, 10));
  REQUIRE(v.witness);
  CHECK_FALSE(v.approximate);
  for (const auto& c : v.chi_report) CHECK(c.value == 0);
  CHECK(recheck_witness(net, *v.witness, false).empty());
}

TEST_CASE("epsilon solve: first counterexample is met approximately") {
  const JointNetwork net = corners();
  const Rational eps(1, 1000);
  const Verdict v = epsilon_solve(net, eps);
  REQUIRE(v.witness);
  CHECK(v.approximate);
  for (const auto& c : v.chi_report) CHECK(c.value < eps);
  CHECK(recheck_witness(net, *v.witness, true).empty());
  const auto report = verify_regions(v.witness->regions, net.top);
  CHECK(report.ok);
}

TEST_CASE("epsilon solve names the failing stage") {
  auto stage_of = [](const JointNetwork& net) -> std::string {
    try {
      epsilon_solve(net, Rational(1, 10));
    } catch (const StageError& e) {
      return e.stage();
    }
    return "";
  };
  JointNetwork vague(2);
  CHECK(stage_of(vague) == "basic");
  JointNetwork clash(2);
  clash.top.set(0, 1, top(NTPP));
  clash.dir.set(0, 1, ra(ia::b, ia::b));
  CHECK(stage_of(clash) == "biclose");
  JointNetwork cyc(3);
  cyc.top.set(0, 1, top(DC));
  cyc.top.set(0, 2, top(DC));
  cyc.top.set(1, 2, top(DC));
  cyc.dir.set(0, 1, ra(ia::b, ia::b));
  cyc.dir.set(1, 2, ra(ia::b, ia::b));
  cyc.dir.set(0, 2, ra(ia::bi, ia::b));
  CHECK(stage_of(cyc) == "components");
  // the second counterexample passes every stage and comes back approximate
  CHECK(stage_of(ring()).empty());
}

TEST_CASE("witness recheck reports tampering") {
  const auto g = gen_instance(3, 3);
  const JointNetwork net = generalized(g.net);
  Verdict v = decide_dir49(net);
  REQUIRE(v.witness);
  Witness w = *v.witness;
  w.rects[0] = Rectangle::of(100, 101, 100, 101);
  CHECK_FALSE(recheck_witness(net, w, false).empty());
}
