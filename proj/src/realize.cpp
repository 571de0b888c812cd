#include "qsr/realize.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qsr/boxes.hpp"

namespace qsr {

using namespace rcc;

const char* cut_name(Cut c) {
  switch (c) {
    case Cut::none:
      return "none";
    case Cut::left:
      return "left";
    case Cut::right:
      return "right";
    case Cut::lower:
      return "lower";
    case Cut::upper:
      return "upper";
  }
  return "none";
}

Rectangle DiskPiece::bounds() const {
  const Point& c = centre;
  Rational x0 = c.x - radius, x1 = c.x + radius, y0 = c.y - radius, y1 = c.y + radius;
  switch (cut) {
    case Cut::left:
      x1 = c.x;
      break;
    case Cut::right:
      x0 = c.x;
      break;
    case Cut::lower:
      y1 = c.y;
      break;
    case Cut::upper:
      y0 = c.y;
      break;
    case Cut::none:
      break;
  }
  return Rectangle(Interval(x0, x1), Interval(y0, y1));
}

Rectangle SymbolicRegion::computed_mbr() const {
  std::vector<Rectangle> all = boxes;
  for (const auto& d : disks) all.push_back(d.bounds());
  if (all.empty()) throw std::logic_error("region " + owner + " has no primitives");
  return RectUnionRegion(all).mbr();
}

SymbolicRegion region_from_boxes(const std::string& owner, const RectUnionRegion& r) {
  SymbolicRegion out;
  out.owner = owner;
  out.boxes = r.pieces;
  out.mbr = r.mbr();
  return out;
}

std::vector<Violation> compatible(const std::vector<Rectangle>& rects, const Network& top) {
  if (rects.size() != top.size())
    throw std::invalid_argument("compatible: rectangle count does not match network size");
  std::vector<Violation> out;
  const std::size_t n = rects.size();
  auto is_one_of = [](std::size_t rel, std::initializer_list<std::size_t> set) {
    return std::find(set.begin(), set.end(), rel) != set.end();
  };
  const std::size_t dd = ra_index(ia::d, ia::d), deq = ra_index(ia::d, ia::eq),
                    eqd = ra_index(ia::eq, ia::d), eqeq = ra_index(ia::eq, ia::eq);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Relation& t = top.at(i, j);
      if (!t.is_basic()) {
        out.push_back({i, j, "constraint is not basic"});
        continue;
      }
      const std::size_t theta = t.first();
      const std::size_t rel = ra_relation_of(rects[i], rects[j]);
      if (theta != DC && !interiors_intersect(rects[i], rects[j]))
        out.push_back({i, j, "interior of ri and rj must meet"});
      if (theta == TPP && !is_one_of(rel, {deq, dd, eqd, eqeq}))
        out.push_back({i, j, "TPP needs ri in d*eq, d*d, eq*d or eq*eq with rj"});
      if (theta == NTPP && rel != dd)
        out.push_back({i, j, "NTPP needs ri inside the interior of rj"});
      if (theta == EQ && rects[i] != rects[j]) out.push_back({i, j, "EQ needs ri = rj"});
    }
  return out;
}

namespace {

Rational max_abs(const Rational& a, const Rational& b) {
  const Rational x = abs_value(a), y = abs_value(b);
  return x < y ? y : x;
}

// Midpoint of the widest gap of (lo, hi) left by the blocked values.
Rational pick(const Rational& lo, const Rational& hi, const std::set<Rational>& blocked) {
  std::vector<Rational> cuts{lo};
  for (auto it = blocked.upper_bound(lo); it != blocked.end() && *it < hi; ++it) cuts.push_back(*it);
  cuts.push_back(hi);
  std::size_t best = 0;
  for (std::size_t k = 1; k + 1 < cuts.size(); ++k)
    if (cuts[best + 1] - cuts[best] < cuts[k + 1] - cuts[k]) best = k;
  return (cuts[best] + cuts[best + 1]) / 2;
}

// Lower bound on the Euclidean distance from p to an axis-parallel segment.
Rational segment_gap(const Point& p, const Point& a, const Point& b) {
  Rational dx = 0, dy = 0;
  const Rational& x0 = a.x < b.x ? a.x : b.x;
  const Rational& x1 = a.x < b.x ? b.x : a.x;
  const Rational& y0 = a.y < b.y ? a.y : b.y;
  const Rational& y1 = a.y < b.y ? b.y : a.y;
  if (p.x < x0) dx = x0 - p.x;
  if (p.x > x1) dx = p.x - x1;
  if (p.y < y0) dy = y0 - p.y;
  if (p.y > y1) dy = p.y - y1;
  return dx < dy ? dy : dx;
}

struct Site {
  Point at;
};

struct BasePiece {
  std::size_t site;
  Cut cut;
};

}  // namespace

Realization realize_regions(const Network& top, const std::vector<Rectangle>& rects,
                            const std::vector<std::string>& names_in) {
  const std::size_t n_all = top.size();
  if (&top.calculus() != &rcc8_calculus())
    throw std::invalid_argument("realize_regions: not an RCC8 network");
  if (!top.is_basic()) throw std::invalid_argument("realize_regions: network is not basic");
  {
    Network probe = top;
    if (!enforce_path_consistency(probe))
      throw std::invalid_argument("realize_regions: network fails path-consistency");
  }
  if (auto bad = compatible(rects, top); !bad.empty())
    throw std::invalid_argument("realize_regions: rectangles incompatible at (" +
                                std::to_string(bad[0].i) + "," + std::to_string(bad[0].j) +
                                "): " + bad[0].clause);
  std::vector<std::string> names = names_in;
  if (names.empty())
    for (std::size_t i = 0; i < n_all; ++i) names.push_back("v" + std::to_string(i + 1));
  if (names.size() != n_all) throw std::invalid_argument("realize_regions: name count mismatch");

  // Collapse EQ classes onto their lowest member.
  std::vector<std::size_t> rep_of(n_all);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n_all; ++i) {
    rep_of[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (top.at(i, j).test(EQ)) {
        rep_of[i] = rep_of[j];
        break;
      }
    if (rep_of[i] == i) reps.push_back(i);
  }
  const std::size_t n = reps.size();
  auto theta = [&](std::size_t a, std::size_t b) { return top.at(reps[a], reps[b]).first(); };
  auto rect = [&](std::size_t a) -> const Rectangle& { return rects[reps[a]]; };

  // ntp-levels
  std::vector<int> level(n, 0);
  std::vector<char> busy(n, 0);
  std::function<int(std::size_t)> level_of = [&](std::size_t i) -> int {
    if (level[i] != 0) return level[i];
    if (busy[i]) throw std::invalid_argument("realize_regions: cyclic NTPP chain");
    busy[i] = 1;
    int l = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && theta(j, i) == NTPP) l = std::max(l, level_of(j) + 1);
    busy[i] = 0;
    return level[i] = l;
  };
  for (std::size_t i = 0; i < n; ++i) level_of(i);

  // Points: one per edge, then one per EC/PO pair, each with a fresh
  // coordinate so that all points are distinct and off foreign edge lines.
  std::set<Rational> block_x, block_y;
  for (std::size_t a = 0; a < n; ++a) {
    block_x.insert(rect(a).x.lo);
    block_x.insert(rect(a).x.hi);
    block_y.insert(rect(a).y.lo);
    block_y.insert(rect(a).y.hi);
  }
  std::vector<Site> sites;
  std::vector<std::vector<BasePiece>> base(n);
  std::vector<std::vector<Tangency>> tangencies(n);
  auto add_site = [&](Point p) {
    block_x.insert(p.x);
    block_y.insert(p.y);
    sites.push_back({std::move(p)});
    return sites.size() - 1;
  };
  for (std::size_t a = 0; a < n; ++a) {
    const Rectangle& r = rect(a);
    base[a].push_back({add_site({r.x.lo, pick(r.y.lo, r.y.hi, block_y)}), Cut::right});
    base[a].push_back({add_site({r.x.hi, pick(r.y.lo, r.y.hi, block_y)}), Cut::left});
    base[a].push_back({add_site({pick(r.x.lo, r.x.hi, block_x), r.y.lo}), Cut::upper});
    base[a].push_back({add_site({pick(r.x.lo, r.x.hi, block_x), r.y.hi}), Cut::lower});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t t = theta(a, b);
      if (t != EC && t != PO) continue;
      const Rectangle& ra = rect(a);
      const Rectangle& rb = rect(b);
      const Rational x0 = ra.x.lo < rb.x.lo ? rb.x.lo : ra.x.lo;
      const Rational x1 = ra.x.hi < rb.x.hi ? ra.x.hi : rb.x.hi;
      const Rational y0 = ra.y.lo < rb.y.lo ? rb.y.lo : ra.y.lo;
      const Rational y1 = ra.y.hi < rb.y.hi ? ra.y.hi : rb.y.hi;
      const Rational qx = pick(x0, x1, block_x);
      const Rational qy = pick(y0, y1, block_y);
      const std::size_t s = add_site({qx, qy});
      if (t == EC) {
        base[a].push_back({s, Cut::left});
        base[b].push_back({s, Cut::right});
        tangencies[a].push_back({names[reps[b]], sites[s].at});
      } else {
        base[a].push_back({s, Cut::none});
        base[b].push_back({s, Cut::none});
      }
    }

  RealizationParams params;
  bool first = true;
  for (std::size_t p = 0; p < sites.size(); ++p)
    for (std::size_t q = p + 1; q < sites.size(); ++q) {
      const Rational d = max_abs(sites[p].at.x - sites[q].at.x, sites[p].at.y - sites[q].at.y);
      if (first || d < params.delta1) params.delta1 = d;
      first = false;
    }
  if (first) params.delta1 = 1;
  first = true;
  for (const auto& s : sites)
    for (std::size_t a = 0; a < n; ++a) {
      const Rectangle& r = rect(a);
      const std::array<std::pair<Point, Point>, 4> edges = {{
          {{r.x.lo, r.y.lo}, {r.x.lo, r.y.hi}},
          {{r.x.hi, r.y.lo}, {r.x.hi, r.y.hi}},
          {{r.x.lo, r.y.lo}, {r.x.hi, r.y.lo}},
          {{r.x.lo, r.y.hi}, {r.x.hi, r.y.hi}},
      }};
      for (const auto& [e0, e1] : edges) {
        const Rational g = segment_gap(s.at, e0, e1);
        if (g == 0) continue;
        if (first || g < params.delta2) params.delta2 = g;
        first = false;
      }
    }
  if (first) params.delta2 = params.delta1;
  params.delta = (params.delta1 < params.delta2 ? params.delta1 : params.delta2) / 2;
  for (std::size_t k = 1; k <= n; ++k)
    params.radii.push_back(params.delta / 4 * Rational(static_cast<long>(k)) /
                           Rational(static_cast<long>(n + 1)));
  params.ntp_level = std::vector<int>(n_all, 1);
  for (std::size_t i = 0; i < n_all; ++i) {
    const auto it = std::find(reps.begin(), reps.end(), rep_of[i]);
    params.ntp_level[i] = level[static_cast<std::size_t>(it - reps.begin())];
  }
  for (const auto& s : sites) params.points.push_back(s.at);

  // a''_i: own pieces plus those of every region placed inside i.
  std::vector<std::vector<BasePiece>> inner(n);
  for (std::size_t i = 0; i < n; ++i) {
    inner[i] = base[i];
    for (std::size_t k = 0; k < n; ++k)
      if (k != i && (theta(k, i) == TPP || theta(k, i) == NTPP))
        inner[i].insert(inner[i].end(), base[k].begin(), base[k].end());
  }

  std::vector<SymbolicRegion> rep_regions(n);
  for (std::size_t i = 0; i < n; ++i) {
    SymbolicRegion& reg = rep_regions[i];
    reg.mbr = rect(i);
    std::set<std::pair<std::size_t, int>> seen;
    for (const auto& bp : inner[i]) {
      if (!seen.insert({bp.site, static_cast<int>(bp.cut)}).second) continue;
      reg.disks.push_back({sites[bp.site].at, params.radii[0], bp.cut});
    }
    // Concentric disks one level up around everything strictly inside.
    std::set<std::size_t> wrapped;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || theta(j, i) != NTPP) continue;
      for (const auto& bp : inner[j]) {
        if (!wrapped.insert(bp.site).second) continue;
        reg.disks.push_back(
            {sites[bp.site].at, params.radii[static_cast<std::size_t>(level[i] - 1)], Cut::none});
      }
    }
    reg.tangencies = tangencies[i];
  }

  Realization out;
  out.params = std::move(params);
  for (std::size_t v = 0; v < n_all; ++v) {
    const auto it = std::find(reps.begin(), reps.end(), rep_of[v]);
    SymbolicRegion reg = rep_regions[static_cast<std::size_t>(it - reps.begin())];
    reg.owner = names[v];
    for (std::size_t k = 0; k < n_all; ++k)
      if (k != v && (top.at(k, v).test(TPP) || top.at(k, v).test(NTPP)))
        reg.contains.push_back(names[k]);
    out.regions.push_back(std::move(reg));
  }
  return out;
}

namespace {

// Angular atoms around a centre: open quadrants NE, NW, SW, SE, then the
// rays E, N, W, S.
constexpr std::size_t kNE = 0, kNW = 1, kSW = 2, kSE = 3, kE = 4, kN = 5, kW = 6, kS = 7;
constexpr std::array<std::array<std::size_t, 2>, 4> kRayQuadrants = {
    {{kNE, kSE}, {kNE, kNW}, {kNW, kSW}, {kSW, kSE}}};

std::vector<std::size_t> atoms_of(Cut c) {
  switch (c) {
    case Cut::none:
      return {kNE, kNW, kSW, kSE, kE, kN, kW, kS};
    case Cut::left:
      return {kNW, kSW, kW, kN, kS};
    case Cut::right:
      return {kNE, kSE, kE, kN, kS};
    case Cut::lower:
      return {kSW, kSE, kS, kE, kW};
    case Cut::upper:
      return {kNE, kNW, kN, kE, kW};
  }
  return {};
}

using Profile = std::array<Rational, 8>;

struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

std::map<Point, Profile, PointLess> profiles(const SymbolicRegion& r) {
  std::map<Point, Profile, PointLess> out;
  for (const auto& d : r.disks) {
    auto [it, fresh] = out.try_emplace(d.centre);
    if (fresh) it->second.fill(Rational(0));
    for (auto a : atoms_of(d.cut))
      if (it->second[a] < d.radius) it->second[a] = d.radius;
  }
  return out;
}

bool local_subset(const Profile& a, const Profile& b) {
  for (std::size_t k = 0; k < 8; ++k)
    if (b[k] < a[k]) return false;
  return true;
}

bool local_interior(const Profile& a, const Profile& b) {
  for (std::size_t q = 0; q < 4; ++q) {
    if (b[q] == 0) return false;
    if (a[q] > 0 && !(a[q] < b[q])) return false;
  }
  for (std::size_t r = 0; r < 4; ++r) {
    const Rational& ar = a[4 + r];
    if (ar == 0) continue;
    const auto& adj = kRayQuadrants[r];
    if (!(ar < b[adj[0]]) || !(ar < b[adj[1]])) return false;
  }
  return true;
}

bool local_overlap(const Profile& a, const Profile& b) {
  for (std::size_t q = 0; q < 4; ++q)
    if (a[q] > 0 && b[q] > 0) return true;
  return false;
}

}  // namespace

bool disks_separated(const std::vector<SymbolicRegion>& regions) {
  std::map<Point, Rational, PointLess> reach;
  for (const auto& r : regions)
    for (const auto& d : r.disks) {
      auto [it, fresh] = reach.try_emplace(d.centre, d.radius);
      if (!fresh && it->second < d.radius) it->second = d.radius;
    }
  for (auto p = reach.begin(); p != reach.end(); ++p)
    for (auto q = std::next(p); q != reach.end(); ++q) {
      const Rational dx = p->first.x - q->first.x, dy = p->first.y - q->first.y;
      const Rational sum = p->second + q->second;
      if (!(dx * dx + dy * dy > sum * sum)) return false;
    }
  return true;
}

std::optional<std::size_t> rcc8_of_symbolic(const SymbolicRegion& a, const SymbolicRegion& b) {
  const bool a_boxes = a.disks.empty(), b_boxes = b.disks.empty();
  if (a_boxes && b_boxes) {
    if (a.boxes.empty() || b.boxes.empty()) return std::nullopt;
    return rcc8_of_regions(RectUnionRegion(a.boxes), RectUnionRegion(b.boxes));
  }
  if (!a.boxes.empty() || !b.boxes.empty()) return std::nullopt;
  const auto pa = profiles(a);
  const auto pb = profiles(b);
  bool touch = false, overlap = false, ab = true, ab_int = true, ba = true, ba_int = true;
  for (const auto& [c, prof] : pa) {
    auto it = pb.find(c);
    if (it == pb.end()) {
      ab = ab_int = false;
      continue;
    }
    touch = true;
    overlap = overlap || local_overlap(prof, it->second);
    ab = ab && local_subset(prof, it->second);
    ab_int = ab_int && local_interior(prof, it->second);
  }
  for (const auto& [c, prof] : pb) {
    auto it = pa.find(c);
    if (it == pa.end()) {
      ba = ba_int = false;
      continue;
    }
    ba = ba && local_subset(prof, it->second);
    ba_int = ba_int && local_interior(prof, it->second);
  }
  if (!touch) return DC;
  if (!overlap) return EC;
  if (ab && ba) return EQ;
  if (ab) return ab_int ? NTPP : TPP;
  if (ba) return ba_int ? NTPPi : TPPi;
  return PO;
}

VerifyReport verify_regions(const std::vector<SymbolicRegion>& regions, const Network& top) {
  if (regions.size() != top.size())
    throw std::invalid_argument("verify_regions: region count does not match network size");
  const std::size_t n = regions.size();
  VerifyReport rep;
  rep.separated = disks_separated(regions);
  if (!rep.separated) rep.ok = false;
  rep.observed.assign(n, std::vector<std::size_t>(n, kUndecided));
  rep.mbr_relation.assign(n, std::vector<std::size_t>(n, 0));
  std::vector<Rectangle> mbrs;
  for (std::size_t i = 0; i < n; ++i) {
    mbrs.push_back(regions[i].computed_mbr());
    if (mbrs.back() != regions[i].mbr) {
      rep.mbr_mismatch.push_back(i);
      rep.ok = false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    rep.observed[i][i] = EQ;
    for (std::size_t j = 0; j < n; ++j) rep.mbr_relation[i][j] = ra_relation_of(mbrs[i], mbrs[j]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto obs = rcc8_of_symbolic(regions[i], regions[j]);
      const std::size_t expected = top.at(i, j).is_basic() ? top.at(i, j).first() : kUndecided;
      if (obs) {
        rep.observed[i][j] = *obs;
        rep.observed[j][i] = rcc8_calculus().converse_of(*obs);
      }
      if (!obs || !rep.separated || !top.at(i, j).test(*obs)) {
        rep.mismatches.push_back({i, j, obs, expected});
        rep.ok = false;
      }
    }
  return rep;
}

namespace {

const std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

}  // namespace

std::string to_svg(const std::vector<SymbolicRegion>& regions,
                   const std::vector<Rectangle>& rects) {
  std::ostringstream out;
  const char* header = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::vector<Rectangle> frames = rects;
  if (frames.empty())
    for (const auto& r : regions) frames.push_back(r.mbr);
  if (regions.empty() && frames.empty()) {
    out << header
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"100\" "
           "height=\"100\" viewBox=\"0 0 100 100\">\n</svg>\n";
    return out.str();
  }
  const Rectangle box = RectUnionRegion(frames).mbr();
  const Rational side = box.x.length() < box.y.length() ? box.y.length() : box.x.length();
  const Rational scale = Rational(800) / side;
  const Rational pad = 20;
  auto fx = [&](const Rational& x) { return decimal_string(pad + (x - box.x.lo) * scale); };
  auto fy = [&](const Rational& y) { return decimal_string(pad + (box.y.hi - y) * scale); };
  auto fl = [&](const Rational& l) { return decimal_string(l * scale); };
  const std::string width = decimal_string(pad * 2 + box.x.length() * scale);
  const std::string height = decimal_string(pad * 2 + box.y.length() * scale);

  out << header << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const auto& reg = regions[i];
    const char* colour = kPalette[i % kPalette.size()];
    out << "  <g id=\"region-" << reg.owner << "\" class=\"region\" fill=\"" << colour
        << "\" fill-opacity=\"0.45\" stroke=\"" << colour << "\" stroke-width=\"0.5\">\n";
    const Rectangle& frame = i < rects.size() ? rects[i] : reg.mbr;
    out << "    <rect class=\"mbr\" x=\"" << fx(frame.x.lo) << "\" y=\"" << fy(frame.y.hi)
        << "\" width=\"" << fl(frame.x.length()) << "\" height=\"" << fl(frame.y.length())
        << "\" fill=\"none\" stroke-dasharray=\"6 3\"/>\n";
    for (const auto& b : reg.boxes)
      out << "    <rect class=\"piece\" x=\"" << fx(b.x.lo) << "\" y=\"" << fy(b.y.hi)
          << "\" width=\"" << fl(b.x.length()) << "\" height=\"" << fl(b.y.length()) << "\"/>\n";
    for (const auto& d : reg.disks) {
      const Point& c = d.centre;
      const Rational& r = d.radius;
      const std::string rr = fl(r);
      auto arc = [&](const Rational& x0, const Rational& y0, const Rational& x1,
                     const Rational& y1) {
        out << "    <path class=\"piece\" d=\"M " << fx(x0) << " " << fy(y0) << " A " << rr << " "
            << rr << " 0 0 1 " << fx(x1) << " " << fy(y1) << " Z\"/>\n";
      };
      switch (d.cut) {
        case Cut::none:
          out << "    <circle class=\"piece\" cx=\"" << fx(c.x) << "\" cy=\"" << fy(c.y)
              << "\" r=\"" << rr << "\"/>\n";
          break;
        case Cut::right:
          arc(c.x, c.y + r, c.x, c.y - r);
          break;
        case Cut::left:
          arc(c.x, c.y - r, c.x, c.y + r);
          break;
        case Cut::upper:
          arc(c.x - r, c.y, c.x + r, c.y);
          break;
        case Cut::lower:
          arc(c.x + r, c.y, c.x - r, c.y);
          break;
      }
    }
    for (const auto& t : reg.tangencies)
      out << "    <circle class=\"tangency\" data-other=\"" << t.other << "\" cx=\"" << fx(t.at.x)
          << "\" cy=\"" << fy(t.at.y) << "\" r=\"3\" fill=\"black\" stroke=\"none\"/>\n";
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace qsr
