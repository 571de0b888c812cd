#include "doctest.h"
#include "oracle.hpp"

using namespace qsr;

namespace {

std::size_t class_of_rcc(std::size_t rel) {
  switch (rel) {
    case rcc::DC: return mrcc::MDC;
    case rcc::EC: return mrcc::MEC;
    case rcc::PO: return mrcc::MPO;
    case rcc::TPP: return mrcc::MTPP;
    case rcc::NTPP: return mrcc::MNTPP;
    case rcc::TPPi: return mrcc::MTPPi;
    case rcc::NTPPi: return mrcc::MNTPPi;
    default: return mrcc::MEQ;
  }
}

Rectangle random_rect(Rng& rng) {
  return Rectangle(oracle::random_interval(rng, 5, 2), oracle::random_interval(rng, 5, 2));
}

}  // namespace

TEST_CASE("rectangle basics and names") {
  CHECK(kRaCount == 169);
  CHECK(ra_index(ia::m, ia::eq) == 1 * 13 + 6);
  CHECK(ra_name(ra_index(ia::m, ia::eq)) == "m*eq");
  CHECK(ra_calculus().converse_of(ra_index(ia::m, ia::o)) == ra_index(ia::mi, ia::oi));
  CHECK(ra_calculus().identity() == ra_calculus().basic(ra_index(ia::eq, ia::eq)));
}

TEST_CASE("relation of two boxes is the pair of axis relations") {
  Rng rng(41);
  for (int t = 0; t < 2000; ++t) {
    const Rectangle a = random_rect(rng), b = random_rect(rng);
    const std::size_t r = ra_relation_of(a, b);
    CHECK(ra_x(r) == oracle::allen(a.x, b.x));
    CHECK(ra_y(r) == oracle::allen(a.y, b.y));
  }
}

TEST_CASE("products and projections") {
  const Calculus& ia = ia_calculus();
  const Relation x = ia.make({ia::b, ia::m}), y = ia.make({ia::eq, ia::d, ia::s});
  const Relation p = ra_product(x, y);
  CHECK(p.count() == 6);
  CHECK(ra_project(p, 0) == x);
  CHECK(ra_project(p, 1) == y);
  CHECK(ra_is_product(p));
  const Relation q = p | ra_calculus().basic(ra_index(ia::bi, ia::bi));
  CHECK_FALSE(ra_is_product(q));
}

TEST_CASE("rectangle composition is the product of axis compositions on products") {
  const Calculus& ia = ia_calculus();
  Rng rng(9);
  for (int t = 0; t < 300; ++t) {
    Bits bx1, by1, bx2, by2;
    for (std::size_t k = 0; k < 13; ++k) {
      if (rng.chance(20)) bx1.set(k);
      if (rng.chance(20)) by1.set(k);
      if (rng.chance(20)) bx2.set(k);
      if (rng.chance(20)) by2.set(k);
    }
    bx1.set(static_cast<std::size_t>(rng.uniform(0, 12)));
    by1.set(static_cast<std::size_t>(rng.uniform(0, 12)));
    bx2.set(static_cast<std::size_t>(rng.uniform(0, 12)));
    by2.set(static_cast<std::size_t>(rng.uniform(0, 12)));
    const Relation x1 = ia.make(bx1), y1 = ia.make(by1), x2 = ia.make(bx2), y2 = ia.make(by2);
    CHECK(ra_compose(ra_product(x1, y1), ra_product(x2, y2)) ==
          ra_product(ia.compose(x1, x2), ia.compose(y1, y2)));
  }
}

TEST_CASE("MRCC8 classes agree with grid rectangles") {
  std::vector<std::size_t> count(kMrcc8Count, 0);
  for (std::size_t r = 0; r < kRaCount; ++r) {
    CAPTURE(ra_name(r));
    CHECK(mrcc8_class(r) == class_of_rcc(oracle::mbr_rcc8_of(r)));
    ++count[mrcc8_class(r)];
  }
  CHECK(count[mrcc::MDC] == 48);
  CHECK(count[mrcc::MEC] == 40);
  CHECK(count[mrcc::MEQ] == 1);
  CHECK(count[mrcc::MNTPP] == 1);
  CHECK(count[mrcc::MNTPPi] == 1);
  std::size_t total = 0;
  for (auto c : count) total += c;
  CHECK(total == 169);
}

TEST_CASE("cardinal directions") {
  const Relation w = cardinal('W');
  CHECK(w.count() == 13);
  for (std::size_t y = 0; y < 13; ++y) CHECK(w.test(ra_index(ia::b, y)));
  CHECK(cardinal('E') == ra_calculus().converse(w));
  CHECK(cardinal('S').test(ra_index(ia::o, ia::b)));
  CHECK(cardinal('N') == ra_calculus().converse(cardinal('S')));
  CHECK_THROWS(cardinal('Q'));
}

TEST_CASE("DIR49 generalization") {
  const Calculus& ra = ra_calculus();
  const Relation mm = ra.basic(ra_index(ia::m, ia::m));
  const Relation g = dir49_generalize(mm);
  CHECK(g.count() == 4);  // {m,o} x {m,o}
  CHECK(g.test(ra_index(ia::o, ia::o)));
  CHECK(in_dir49(g));
  CHECK_FALSE(in_dir49(mm));
  CHECK(in_dir49(ra.basic(ra_index(ia::eq, ia::eq))));
  CHECK(in_dir49(cardinal('W')));
  CHECK_THROWS_AS(dir49_generalize(ra.empty()), std::invalid_argument);
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    Bits bits;
    for (std::size_t k = 0; k < kRaCount; ++k)
      if (rng.chance(2)) bits.set(k);
    bits.set(static_cast<std::size_t>(rng.uniform(0, 168)));
    const Relation r = ra.make(bits);
    const Relation gr = dir49_generalize(r);
    CHECK(gr.contains(r));
    CHECK(dir49_generalize(gr) == gr);
    CHECK(in_dir49(gr));
    CHECK(in_dir49(r) == (gr == r));
  }
}

TEST_CASE("rectangle solution of a basic network") {
  Rng rng(77);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    std::vector<Rectangle> w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(random_rect(rng));
    Network net(ra_calculus(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) net.set(i, j, ra_calculus().basic(ra_relation_of(w[i], w[j])));
    const auto sol = rectangle_solution(net);
    REQUIRE(sol);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(net.at(i, j).test(ra_relation_of((*sol)[i], (*sol)[j])));
    const Network xs = axis_network(net, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(xs.at(i, j).first() == oracle::allen(w[i].x, w[j].x));
  }
  Network bad(ra_calculus(), 3);
  bad.set(0, 1, ra_calculus().basic(ra_index(ia::b, ia::eq)));
  bad.set(1, 2, ra_calculus().basic(ra_index(ia::b, ia::eq)));
  bad.set(0, 2, ra_calculus().basic(ra_index(ia::bi, ia::eq)));
  CHECK_FALSE(rectangle_solution(bad).has_value());
}
