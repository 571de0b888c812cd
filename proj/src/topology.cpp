#include "qsr/topology.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "qsr/interaction.hpp"

namespace qsr {

namespace {

const std::array<std::string, rcc::kCount> kNames = {"DC",   "EC",   "PO",    "TPP",
                                                       "NTPP", "TPPi", "NTPPi", "EQ"};

using namespace rcc;

// Row: relation(a,b); column: relation(b,c).
const std::vector<std::vector<std::vector<std::size_t>>> kTable = {
    // DC
    {{DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ},
     {DC, EC, PO, TPP, NTPP},
     {DC, EC, PO, TPP, NTPP},
     {DC, EC, PO, TPP, NTPP},
     {DC, EC, PO, TPP, NTPP},
     {DC},
     {DC},
     {DC}},
    // EC
    {{DC, EC, PO, TPPi, NTPPi},
     {DC, EC, PO, TPP, TPPi, EQ},
     {DC, EC, PO, TPP, NTPP},
     {EC, PO, TPP, NTPP},
     {PO, TPP, NTPP},
     {DC, EC},
     {DC},
     {EC}},
    // PO
    {{DC, EC, PO, TPPi, NTPPi},
     {DC, EC, PO, TPPi, NTPPi},
     {DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ},
     {PO, TPP, NTPP},
     {PO, TPP, NTPP},
     {DC, EC, PO, TPPi, NTPPi},
     {DC, EC, PO, TPPi, NTPPi},
     {PO}},
    // TPP
    {{DC},
     {DC, EC},
     {DC, EC, PO, TPP, NTPP},
     {TPP, NTPP},
     {NTPP},
     {DC, EC, PO, TPP, TPPi, EQ},
     {DC, EC, PO, TPPi, NTPPi},
     {TPP}},
    // NTPP
    {{DC},
     {DC},
     {DC, EC, PO, TPP, NTPP},
     {NTPP},
     {NTPP},
     {DC, EC, PO, TPP, NTPP},
     {DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ},
     {NTPP}},
    // TPPi
    {{DC, EC, PO, TPPi, NTPPi},
     {EC, PO, TPPi, NTPPi},
     {PO, TPPi, NTPPi},
     {PO, TPP, TPPi, EQ},
     {PO, TPP, NTPP},
     {TPPi, NTPPi},
     {NTPPi},
     {TPPi}},
    // NTPPi
    {{DC, EC, PO, TPPi, NTPPi},
     {PO, TPPi, NTPPi},
     {PO, TPPi, NTPPi},
     {PO, TPPi, NTPPi},
     {PO, TPP, NTPP, TPPi, NTPPi, EQ},
     {NTPPi},
     {NTPPi},
     {NTPPi}},
    // EQ
    {{DC}, {EC}, {PO}, {TPP}, {NTPP}, {TPPi}, {NTPPi}, {EQ}},
};

std::unique_ptr<Calculus> build_rcc8() {
  std::vector<std::string> names(kNames.begin(), kNames.end());
  std::vector<std::size_t> conv = {DC, EC, PO, TPPi, NTPPi, TPP, NTPP, EQ};
  std::vector<Bits> table(kCount * kCount);
  for (std::size_t a = 0; a < kCount; ++a)
    for (std::size_t b = 0; b < kCount; ++b)
      for (auto c : kTable[a][b]) table[a * kCount + b].set(c);
  Bits id;
  id.set(EQ);
  return std::make_unique<Calculus>("RCC8", std::move(names), std::move(conv), std::move(table),
                                    id);
}

unsigned converse_mask(unsigned m) {
  const Calculus& c = rcc8_calculus();
  return rcc8_mask(c.converse(rcc8_from_mask(m)));
}

unsigned compose_mask(unsigned a, unsigned b) {
  const Calculus& c = rcc8_calculus();
  return rcc8_mask(c.compose(rcc8_from_mask(a), rcc8_from_mask(b)));
}

}  // namespace

const Calculus& rcc8_calculus() {
  static const std::unique_ptr<Calculus> calc = build_rcc8();
  return *calc;
}

const std::string& rcc8_name(std::size_t basic) { return kNames.at(basic); }

std::optional<std::size_t> rcc8_parse(const std::string& token) {
  for (std::size_t i = 0; i < kCount; ++i)
    if (kNames[i] == token) return i;
  return std::nullopt;
}

unsigned rcc8_mask(const Relation& r) {
  return static_cast<unsigned>((r.bits() & Bits(0xFF)).to_ulong());
}

Relation rcc8_from_mask(unsigned mask) {
  if (mask > 0xFF) throw std::invalid_argument("rcc8 mask out of range");
  return rcc8_calculus().make(Bits(mask));
}

std::size_t h_refine(const Relation& theta) {
  if (theta.empty()) throw std::invalid_argument("h_refine: empty relation");
  for (std::size_t b : {DC, EC, PO, TPP, TPPi})
    if (theta.test(b)) return b;
  if (!theta.is_basic())
    throw std::invalid_argument("h_refine: " + theta.to_string() + " outside mapping domain");
  return theta.first();
}

RectUnionRegion::RectUnionRegion(std::vector<Rectangle> p) : pieces(std::move(p)) {
  if (pieces.empty()) throw std::invalid_argument("region needs at least one rectangle");
}

Rectangle RectUnionRegion::mbr() const {
  if (pieces.empty()) throw std::logic_error("mbr of empty region");
  Rational x0 = pieces[0].x.lo, x1 = pieces[0].x.hi, y0 = pieces[0].y.lo, y1 = pieces[0].y.hi;
  for (const auto& r : pieces) {
    if (r.x.lo < x0) x0 = r.x.lo;
    if (r.x.hi > x1) x1 = r.x.hi;
    if (r.y.lo < y0) y0 = r.y.lo;
    if (r.y.hi > y1) y1 = r.y.hi;
  }
  return Rectangle(Interval(x0, x1), Interval(y0, y1));
}

namespace {

struct Grid {
  std::vector<Rational> xs, ys;
  std::size_t nx() const { return xs.size() - 1; }
  std::size_t ny() const { return ys.size() - 1; }

  std::vector<char> cover(const RectUnionRegion& r) const {
    std::vector<char> out(nx() * ny(), 0);
    for (const auto& p : r.pieces) {
      const auto x0 = std::lower_bound(xs.begin(), xs.end(), p.x.lo) - xs.begin();
      const auto x1 = std::lower_bound(xs.begin(), xs.end(), p.x.hi) - xs.begin();
      const auto y0 = std::lower_bound(ys.begin(), ys.end(), p.y.lo) - ys.begin();
      const auto y1 = std::lower_bound(ys.begin(), ys.end(), p.y.hi) - ys.begin();
      for (auto i = x0; i < x1; ++i)
        for (auto j = y0; j < y1; ++j) out[static_cast<std::size_t>(i) * ny() + j] = 1;
    }
    return out;
  }
};

bool covered(const std::vector<char>& c, const Grid& g, long i, long j) {
  if (i < 0 || j < 0 || i >= static_cast<long>(g.nx()) || j >= static_cast<long>(g.ny()))
    return false;
  return c[static_cast<std::size_t>(i) * g.ny() + static_cast<std::size_t>(j)] != 0;
}

bool part_of(const std::vector<char>& a, const std::vector<char>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && !b[k]) return false;
  return true;
}

// Every closed cell of a lies in the interior of b: b covers the 3x3 block
// around each cell of a.
bool in_interior(const std::vector<char>& a, const std::vector<char>& b, const Grid& g) {
  for (long i = 0; i < static_cast<long>(g.nx()); ++i)
    for (long j = 0; j < static_cast<long>(g.ny()); ++j) {
      if (!covered(a, g, i, j)) continue;
      for (long di = -1; di <= 1; ++di)
        for (long dj = -1; dj <= 1; ++dj)
          if (!covered(b, g, i + di, j + dj)) return false;
    }
  return true;
}

}  // namespace

std::size_t rcc8_of_regions(const RectUnionRegion& a, const RectUnionRegion& b) {
  bool touch = false;
  for (const auto& p : a.pieces)
    for (const auto& q : b.pieces)
      if (closed_intersect(p, q)) touch = true;
  if (!touch) return DC;

  Grid g;
  for (const auto* reg : {&a, &b})
    for (const auto& p : reg->pieces) {
      g.xs.push_back(p.x.lo);
      g.xs.push_back(p.x.hi);
      g.ys.push_back(p.y.lo);
      g.ys.push_back(p.y.hi);
    }
  for (auto* v : {&g.xs, &g.ys}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  const auto ca = g.cover(a);
  const auto cb = g.cover(b);
  bool overlap = false;
  for (std::size_t k = 0; k < ca.size(); ++k)
    if (ca[k] && cb[k]) overlap = true;
  if (!overlap) return EC;
  const bool ab = part_of(ca, cb);
  const bool ba = part_of(cb, ca);
  if (ab && ba) return EQ;
  if (ab) return in_interior(ca, cb, g) ? NTPP : TPP;
  if (ba) return in_interior(cb, ca, g) ? NTPPi : TPPi;
  return PO;
}

const H8Membership& H8Membership::certified() {
  static const H8Membership data = [] {
    H8Membership h;
    std::vector<unsigned> members;
    auto add = [&](unsigned m) {
      if (m == 0 || h.set_.test(m)) return false;
      h.set_.set(m);
      members.push_back(m);
      return true;
    };
    for (unsigned b = 0; b < kCount; ++b) add(1u << b);
    add(0xFF);
    // every relation induced by a rectangle relation is a union of the
    // eight class relations
    std::vector<unsigned> classes;
    for (std::size_t c = 0; c < kMrcc8Count; ++c) classes.push_back(rcc8_mask(induced_rcc_of_class(c)));
    for (unsigned sub = 1; sub < (1u << classes.size()); ++sub) {
      unsigned m = 0;
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (sub & (1u << c)) m |= classes[c];
      add(m);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<unsigned> snapshot = members;
      for (unsigned x : snapshot) {
        grew |= add(converse_mask(x));
        for (unsigned y : snapshot) {
          grew |= add(x & y);
          grew |= add(compose_mask(x, y));
        }
      }
    }
    return h;
  }();
  return data;
}

H8Membership H8Membership::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open membership file " + path);
  H8Membership h;
  h.complete_ = true;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) continue;
    unsigned m = 0;
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto b = rcc8_parse(tok);
      if (!b)
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown token '" + tok +
                                 "'");
      m |= 1u << *b;
    }
    h.set_.set(m);
  }
  for (unsigned b = 0; b < kCount; ++b)
    if (!h.set_.test(1u << b)) throw std::runtime_error(path + ": missing basic " + kNames[b]);
  for (unsigned x = 1; x < 256; ++x) {
    if (!h.set_.test(x)) continue;
    if (!h.set_.test(converse_mask(x))) throw std::runtime_error(path + ": not closed under converse");
    for (unsigned y = 1; y < 256; ++y)
      if (h.set_.test(y) && (x & y) && !h.set_.test(x & y))
        throw std::runtime_error(path + ": not closed under intersection");
  }
  return h;
}

const H8Membership& active_h8() {
  static const H8Membership data = [] {
    if (const char* p = std::getenv("QSR_H8_TABLE"); p != nullptr && *p != '\0')
      return H8Membership::load(p);
    return H8Membership::certified();
  }();
  return data;
}

}  // namespace qsr
