#include "doctest.h"
#include "oracle.hpp"

using namespace qsr;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Interval iv(Rational a, Rational b) { return Interval(std::move(a), std::move(b)); }

Network chain(std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t>> rels,
              std::size_t n) {
  Network net(ia_calculus(), n);
  for (auto [i, j, r] : rels) net.set(i, j, ia_calculus().basic(r));
  return net;
}

}  // namespace

TEST_CASE("interval construction") {
  CHECK_THROWS_AS(Interval(q(1), q(1)), std::invalid_argument);
  CHECK_THROWS_AS(Interval(q(2), q(1)), std::invalid_argument);
  CHECK(Interval(q(1, 2), q(3, 4)).length() == q(1, 4));
}

TEST_CASE("relation of two intervals agrees with the endpoint oracle") {
  Rng rng(3);
  for (int t = 0; t < 5000; ++t) {
    const Interval a = oracle::random_interval(rng), b = oracle::random_interval(rng);
    CHECK(ia_relation_of(a, b) == oracle::allen(a, b));
  }
  CHECK(ia_relation_of(iv(0, 1), iv(1, 2)) == ia::m);
  CHECK(ia_relation_of(iv(0, 3), iv(1, 2)) == ia::di);
}

TEST_CASE("names parse back") {
  for (std::size_t a = 0; a < ia::kCount; ++a) CHECK(ia_parse(ia_name(a)) == a);
  CHECK_FALSE(ia_parse("x").has_value());
}

TEST_CASE("coarsening partitions") {
  for (int g : {3, 7}) {
    Bits seen;
    std::set<std::string> atoms;
    for (std::size_t a = 0; a < ia::kCount; ++a) {
      const Relation atom = coarsen(a, g);
      CHECK(atom.test(a));
      for (auto x : atom.basics()) CHECK(coarsen(x, g) == atom);
      atoms.insert(atom.to_string());
      seen |= atom.bits();
    }
    CHECK(seen.count() == ia::kCount);
    CHECK(atoms.size() == static_cast<std::size_t>(g));
  }
  CHECK_THROWS(coarsen(0, 5));
}

TEST_CASE("tau collapses meets, starts and finishes") {
  CHECK(tau(std::size_t{ia::m}) == ia::o);
  CHECK(tau(std::size_t{ia::s}) == ia::d);
  CHECK(tau(std::size_t{ia::f}) == ia::d);
  CHECK(tau(std::size_t{ia::si}) == ia::di);
  CHECK(tau(std::size_t{ia::fi}) == ia::di);
  CHECK(tau(std::size_t{ia::mi}) == ia::oi);
  for (std::size_t a : {ia::b, ia::o, ia::d, ia::eq, ia::di, ia::oi, ia::bi}) CHECK(tau(a) == a);
  const Calculus& c = ia_calculus();
  CHECK(tau(c.make({ia::m, ia::s, ia::b})) == c.make({ia::o, ia::d, ia::b}));
}

TEST_CASE("canonical solution of a meets chain") {
  const Network net = chain({{0, 1, ia::m}, {1, 2, ia::m}, {0, 2, ia::b}}, 3);
  const auto sol = canonical_solution(net);
  REQUIRE(sol);
  CHECK((*sol)[0] == iv(0, 1));
  CHECK((*sol)[1] == iv(1, 2));
  CHECK((*sol)[2] == iv(2, 3));
}

TEST_CASE("canonical solution: eq classes share an interval, endpoints are gap free") {
  const Network net = chain({{0, 1, ia::eq}, {0, 2, ia::d}, {1, 2, ia::d}}, 3);
  const auto sol = canonical_solution(net);
  REQUIRE(sol);
  CHECK((*sol)[0] == (*sol)[1]);
  CHECK((*sol)[2] == iv(0, 3));
  CHECK((*sol)[0] == iv(1, 2));
}

TEST_CASE("canonical solution re-derives the network it came from") {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    std::vector<Interval> w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(oracle::random_interval(rng));
    Network net(ia_calculus(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) net.set(i, j, ia_calculus().basic(oracle::allen(w[i], w[j])));
    const auto sol = canonical_solution(net);
    REQUIRE(sol);
    std::set<Rational> ends;
    for (const auto& s : *sol) {
      ends.insert(s.lo);
      ends.insert(s.hi);
    }
    // levels 0..2k-1 with no gaps
    long level = 0;
    for (const auto& e : ends) CHECK(e == Rational(level++));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(net.at(i, j).test(oracle::allen((*sol)[i], (*sol)[j])));
  }
}

TEST_CASE("canonical solution of inconsistent or non-basic input") {
  Network bad = chain({{0, 1, ia::b}, {1, 2, ia::b}, {0, 2, ia::bi}}, 3);
  CHECK_FALSE(canonical_solution(bad).has_value());
  Network vague(ia_calculus(), 2);
  CHECK_THROWS_AS(canonical_solution(vague), std::invalid_argument);
}

TEST_CASE("chi values") {
  CHECK(chi(ia::m, iv(0, 2), iv(1, 3)) == q(1, 2));
  CHECK(chi(ia::b, iv(0, 1), iv(2, 3)) == 0);
  CHECK(chi(ia::s, iv(1, 2), iv(q(9, 10), 3)) == q(1, 10));
  CHECK(chi(ia::f, iv(1, 2), iv(0, q(21, 10))) == q(1, 10));
  // converse basics swap the arguments
  CHECK(chi(ia::mi, iv(1, 3), iv(0, 2)) == q(1, 2));
  CHECK(chi(ia::si, iv(q(9, 10), 3), iv(1, 2)) == q(1, 10));
  CHECK_THROWS_AS(chi(ia::m, iv(0, 1), iv(2, 3)), std::invalid_argument);
}

TEST_CASE("epsilon shift of a single meet") {
  const Network net = chain({{0, 1, ia::m}}, 2);
  const auto out = epsilon_shift(net, q(8, 100));
  REQUIRE(out.size() == 2);
  CHECK(out[0] == iv(0, q(102, 100)));
  CHECK(out[1] == iv(q(101, 100), q(203, 100)));
  CHECK(ia_relation_of(out[0], out[1]) == ia::o);
  const Rational x = chi(ia::m, out[0], out[1]);
  CHECK(x < q(8, 100));
  CHECK(x == q(1, 102));
}

TEST_CASE("epsilon shift keeps tau-fixed relations exact") {
  const Network net = chain({{0, 1, ia::b}}, 2);
  const auto out = epsilon_shift(net, q(1, 3));
  CHECK(ia_relation_of(out[0], out[1]) == ia::b);
  CHECK(chi(ia::b, out[0], out[1]) == 0);
}

TEST_CASE("epsilon shift of a meets chain") {
  const Network net = chain({{0, 1, ia::m}, {1, 2, ia::m}, {0, 2, ia::b}}, 3);
  for (const Rational& eps : {q(1, 2), q(1, 10), q(1, 1000)}) {
    const auto out = epsilon_shift(net, eps);
    CHECK(chi(ia::m, out[0], out[1]) < eps);
    CHECK(chi(ia::m, out[1], out[2]) < eps);
    CHECK(ia_relation_of(out[0], out[2]) == ia::b);
  }
}

TEST_CASE("epsilon shift on random networks") {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    std::vector<Interval> w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(oracle::random_interval(rng, 4, 1));
    Network net(ia_calculus(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) net.set(i, j, ia_calculus().basic(oracle::allen(w[i], w[j])));
    const Rational eps(1, 50);
    const auto out = epsilon_shift(net, eps);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::size_t beta = net.at(i, j).first();
        CHECK(oracle::allen(out[i], out[j]) == tau(beta));
        CHECK(chi(beta, out[i], out[j]) < eps);
      }
  }
}

TEST_CASE("epsilon shift rejects bad arguments") {
  const Network net = chain({{0, 1, ia::m}}, 2);
  CHECK_THROWS_AS(epsilon_shift(net, q(0)), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_shift(net, q(1)), std::invalid_argument);
  const Network bad = chain({{0, 1, ia::b}, {1, 2, ia::b}, {0, 2, ia::bi}}, 3);
  CHECK_THROWS_AS(epsilon_shift(bad, q(1, 10)), std::invalid_argument);
}
