#include "doctest.h"
#include "oracle.hpp"
#include "qsr/netfile.hpp"

using namespace qsr;
using namespace qsr::rcc;

namespace {

int error_line(const std::string& text) {
  try {
    parse_network(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse the first counterexample file") {
  const JointNetwork net = parse_network(
      "# comment line\n"
      "vars v1 v2 v3\n"
      "top v1 v2 EC\n"
      "top v1 v3 EC   # trailing comment\n"
      "top v2 v3 DC\n"
      "dir v1 v2 m*m\n"
      "dir v1 v3 m*m\n"
      "dir v2 v3 eq*eq\n");
  REQUIRE(net.size() == 3);
  CHECK(net.names[2] == "v3");
  CHECK(net.top.at(1, 0) == rcc8_calculus().basic(EC));
  CHECK(net.top.at(1, 2) == rcc8_calculus().basic(DC));
  CHECK(net.dir.at(1, 0) == ra_calculus().basic(ra_index(ia::mi, ia::mi)));
  CHECK(net.dir.at(1, 2) == ra_calculus().basic(ra_index(ia::eq, ia::eq)));
}

TEST_CASE("relation macros") {
  CHECK(parse_dir_relation("W") == cardinal('W'));
  CHECK(parse_dir_relation("W").count() == 13);
  CHECK(parse_dir_relation("T") == ra_calculus().universal());
  CHECK(parse_dir_relation("MO*SDFEQ").count() == 8);
  CHECK(parse_dir_relation("SDF*SDFI") ==
        ra_product(ia_calculus().make({ia::s, ia::d, ia::f}), ia_calculus().make({ia::si, ia::di, ia::fi})));
  CHECK(parse_dir_relation("MOI*b|bi, eq*eq").count() == 5);
  CHECK(parse_top_relation("DC, NTPP") == rcc8_calculus().make({DC, NTPP}));
  CHECK(parse_top_relation("T") == rcc8_calculus().universal());
  CHECK_THROWS(parse_dir_relation("m"));
  CHECK_THROWS(parse_dir_relation("m*m*m"));
  CHECK_THROWS(parse_dir_relation("zz*m"));
  CHECK_THROWS(parse_top_relation("XX"));
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_line("vars a b\ntop a b DC\ntop b a EC\n") == 3);
  CHECK(error_line("vars a b\ntop a b DC\ntop a b DC\n") == 3);
  CHECK(error_line("vars a b\ndir a c m*m\n") == 2);
  CHECK(error_line("vars a b\n\ntop a b QQ\n") == 3);
  CHECK(error_line("vars a b\ntop a a DC\n") == 2);
  CHECK(error_line("vars a b\ndir a a b*b\n") == 2);
  CHECK(error_line("top a b DC\n") == 1);
  CHECK(error_line("vars a a\n") == 1);
  CHECK(error_line("vars a b\nfoo a b\n") == 2);
  CHECK(error_line("# nothing\n") == 1);
  // consistent reverse lines and diagonal lines holding the identity are fine
  CHECK(error_line("vars a b\ntop a b TPP\ntop b a TPPi\ndir a a eq*eq,b*b\ntop b b EQ,DC\n") == 0);
}

TEST_CASE("serialization round trip") {
  const std::string text =
      "vars x y z\n"
      "top x y DC,EC\n"
      "top y z TPP\n"
      "dir x y b*T\n"
      "dir x z m|o*s|d|f,eq*eq\n";
  const JointNetwork net = parse_network(text);
  const std::string canon = serialize_network(net);
  CHECK(canon == text);
  CHECK(parse_network(canon) == net);
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    JointNetwork r(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (rng.chance(50)) r.top.set(i, j, rcc8_calculus().make(Bits(static_cast<unsigned long>(rng.uniform(1, 255)))));
        if (rng.chance(50)) {
          Bits b;
          for (std::size_t k = 0; k < kRaCount; ++k)
            if (rng.chance(10)) b.set(k);
          b.set(static_cast<std::size_t>(rng.uniform(0, 168)));
          r.dir.set(i, j, ra_calculus().make(b));
        }
      }
    const std::string s = serialize_network(r);
    const JointNetwork back = parse_network(s);
    CHECK(back == r);
    CHECK(serialize_network(back) == s);
  }
}

TEST_CASE("generator: determinism and ground truth") {
  CHECK(format_instance(gen_instance(1, 2)) == format_instance(gen_instance(1, 2)));
  CHECK(format_instance(gen_instance(1, 5)) != format_instance(gen_instance(2, 5)));
  const auto single = gen_instance(4, 1);
  CHECK(single.net.size() == 1);
  CHECK(serialize_network(single.net) == "vars v1\n");
  CHECK_THROWS(gen_instance(1, 0));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = gen_instance(seed, 6);
    CHECK(g.net.top.is_basic());
    CHECK(g.net.dir.is_basic());
    for (const auto& r : g.witness) {
      CHECK(r.pieces.size() >= 1);
      CHECK(r.pieces.size() <= 3);
    }
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) {
        CHECK(g.net.top.at(i, j).first() != EQ);
        const int w = 80;
        // shift into a nonnegative grid for the oracle
        auto shifted = [&](const RectUnionRegion& r) {
          std::vector<Rectangle> ps;
          for (const auto& p : r.pieces)
            ps.emplace_back(Interval(p.x.lo + 30, p.x.hi + 30), Interval(p.y.lo + 30, p.y.hi + 30));
          return oracle::grid_of(RectUnionRegion(ps), w);
        };
        CHECK(g.net.top.at(i, j).first() == oracle::rcc8_grid(shifted(g.witness[i]), shifted(g.witness[j])));
        CHECK(g.net.dir.at(i, j).first() == ra_relation_of(g.witness[i].mbr(), g.witness[j].mbr()));
      }
  }
}

TEST_CASE("verdict json layout") {
  const auto g = gen_instance(2, 3);
  JointNetwork net = g.net;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) net.dir.set(i, j, dir49_generalize(net.dir.at(i, j)));
  const Verdict v = decide_dir49(net);
  const std::string js = verdict_json(v, net, "out.svg");
  CHECK(js.find("\"status\": \"sat\"") != std::string::npos);
  CHECK(js.find("\"dir_in_dir49\": true") != std::string::npos);
  CHECK(js.find("\"svg_path\": \"out.svg\"") != std::string::npos);
  CHECK(js.find("\"rectangles\"") != std::string::npos);
  CHECK(js.find("/1\"") != std::string::npos);
  Verdict unknown;
  unknown.fragment.top_in_h8 = std::nullopt;
  const std::string ju = verdict_json(unknown, net);
  CHECK(ju.find("\"top_in_h8\": \"unknown\"") != std::string::npos);
  CHECK(ju.find("svg_path") == std::string::npos);
}
