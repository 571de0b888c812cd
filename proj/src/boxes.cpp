#include "qsr/boxes.hpp"

#include <array>
#include <memory>
#include <stdexcept>

namespace qsr {

namespace {

std::unique_ptr<Calculus> build_ra() {
  const Calculus& ia_c = ia_calculus();
  std::vector<std::string> names(kRaCount);
  std::vector<std::size_t> conv(kRaCount);
  for (std::size_t i = 0; i < kRaCount; ++i) {
    names[i] = ra_name(i);
    conv[i] = ra_index(ia_c.converse_of(ra_x(i)), ia_c.converse_of(ra_y(i)));
  }
  std::vector<Bits> table(kRaCount * kRaCount);
  for (std::size_t a = 0; a < kRaCount; ++a)
    for (std::size_t b = 0; b < kRaCount; ++b) {
      const Bits& cx = ia_c.compose_basic(ra_x(a), ra_x(b));
      const Bits& cy = ia_c.compose_basic(ra_y(a), ra_y(b));
      Bits& out = table[a * kRaCount + b];
      for (std::size_t x = 0; x < ia::kCount; ++x) {
        if (!cx.test(x)) continue;
        for (std::size_t y = 0; y < ia::kCount; ++y)
          if (cy.test(y)) out.set(ra_index(x, y));
      }
    }
  Bits id;
  id.set(ra_index(ia::eq, ia::eq));
  auto calc =
      std::make_unique<Calculus>("RA", std::move(names), std::move(conv), std::move(table), id);
  calc->set_product_factor(&ia_c);
  return calc;
}

const std::array<std::string, kMrcc8Count> kMrccNames = {"MDC",  "MEC",   "MPO",   "MEQ",
                                                           "MTPP", "MNTPP", "MTPPi", "MNTPPi"};

bool among(std::size_t a, std::initializer_list<std::size_t> set) {
  for (auto s : set)
    if (s == a) return true;
  return false;
}

}  // namespace

const Calculus& ra_calculus() {
  static const std::unique_ptr<Calculus> calc = build_ra();
  return *calc;
}

std::string ra_name(std::size_t basic) {
  return ia_name(ra_x(basic)) + "*" + ia_name(ra_y(basic));
}

std::size_t ra_relation_of(const Rectangle& a, const Rectangle& b) {
  return ra_index(ia_relation_of(a.x, b.x), ia_relation_of(a.y, b.y));
}

Relation ra_product(const Relation& x, const Relation& y) {
  Bits out;
  for (auto a : x.basics())
    for (auto b : y.basics()) out.set(ra_index(a, b));
  return Relation(ra_calculus(), out);
}

Relation ra_project(const Relation& r, int axis) {
  Bits out;
  for (auto b : r.basics()) out.set(axis == 0 ? ra_x(b) : ra_y(b));
  return Relation(ia_calculus(), out);
}

bool ra_is_product(const Relation& r) {
  return ra_product(ra_project(r, 0), ra_project(r, 1)) == r;
}

Relation ra_compose(const Relation& r1, const Relation& r2) { return weak_compose(r1, r2); }

const std::string& mrcc8_name(std::size_t cls) { return kMrccNames.at(cls); }

std::size_t mrcc8_class(std::size_t basic) {
  using namespace ia;
  const std::size_t x = ra_x(basic), y = ra_y(basic);
  if (x == eq && y == eq) return mrcc::MEQ;
  if (x == d && y == d) return mrcc::MNTPP;
  if (x == di && y == di) return mrcc::MNTPPi;
  if (among(x, {s, d, f, eq}) && among(y, {s, d, f, eq})) return mrcc::MTPP;
  if (among(x, {si, di, fi, eq}) && among(y, {si, di, fi, eq})) return mrcc::MTPPi;
  if (among(x, {b, bi}) || among(y, {b, bi})) return mrcc::MDC;
  if (among(x, {m, mi}) || among(y, {m, mi})) return mrcc::MEC;
  return mrcc::MPO;
}

Relation cardinal(char name) {
  const Calculus& ia_c = ia_calculus();
  switch (name) {
    case 'W':
      return ra_product(ia_c.basic(ia::b), ia_c.universal());
    case 'E':
      return ra_product(ia_c.basic(ia::bi), ia_c.universal());
    case 'S':
      return ra_product(ia_c.universal(), ia_c.basic(ia::b));
    case 'N':
      return ra_product(ia_c.universal(), ia_c.basic(ia::bi));
    default:
      throw std::invalid_argument(std::string("unknown cardinal direction '") + name + "'");
  }
}

Relation dir49_generalize(const Relation& delta) {
  if (delta.empty()) throw std::invalid_argument("dir49_generalize: empty relation");
  Relation out = ra_calculus().empty();
  for (auto b : delta.basics()) out |= ra_product(coarsen(ra_x(b), 7), coarsen(ra_y(b), 7));
  return out;
}

bool in_dir49(const Relation& delta) { return !delta.empty() && dir49_generalize(delta) == delta; }

Network axis_network(const Network& ra_net, int axis) {
  Network out(ia_calculus(), ra_net.size());
  for (std::size_t i = 0; i < ra_net.size(); ++i)
    for (std::size_t j = i + 1; j < ra_net.size(); ++j)
      out.set(i, j, ra_project(ra_net.at(i, j), axis));
  return out;
}

std::optional<std::vector<Rectangle>> rectangle_solution(const Network& ra_net) {
  if (&ra_net.calculus() != &ra_calculus())
    throw std::invalid_argument("rectangle_solution: not an RA network");
  if (!ra_net.is_basic()) throw std::invalid_argument("rectangle_solution: non-basic constraint");
  const auto xs = canonical_solution(axis_network(ra_net, 0));
  if (!xs) return std::nullopt;
  const auto ys = canonical_solution(axis_network(ra_net, 1));
  if (!ys) return std::nullopt;
  std::vector<Rectangle> out;
  out.reserve(ra_net.size());
  for (std::size_t i = 0; i < ra_net.size(); ++i) out.emplace_back((*xs)[i], (*ys)[i]);
  return out;
}

}  // namespace qsr
