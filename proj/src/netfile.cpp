#include "qsr/netfile.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qsr {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

Relation ia_term(const std::string& text) {
  using namespace ia;
  const Calculus& c = ia_calculus();
  if (text.empty()) throw std::invalid_argument("empty interval term");
  Relation out = c.empty();
  for (const auto& tok : split(text, '|')) {
    if (tok == "T") {
      out |= c.universal();
    } else if (tok == "MO") {
      out |= c.make({m, o});
    } else if (tok == "MOI") {
      out |= c.make({mi, oi});
    } else if (tok == "SDF") {
      out |= c.make({s, d, f});
    } else if (tok == "SDFI") {
      out |= c.make({si, di, fi});
    } else if (tok == "SDFEQ") {
      out |= c.make({s, d, f, eq});
    } else if (auto b = ia_parse(tok)) {
      out |= c.basic(*b);
    } else {
      throw std::invalid_argument("unknown interval token '" + tok + "'");
    }
  }
  return out;
}

std::string ia_term_text(const Bits& bits) {
  if (bits.count() == ia::kCount) return "T";
  std::string out;
  for (std::size_t b = 0; b < ia::kCount; ++b)
    if (bits.test(b)) {
      if (!out.empty()) out += "|";
      out += ia_name(b);
    }
  return out;
}

}  // namespace

Relation parse_top_relation(const std::string& text) {
  const Calculus& c = rcc8_calculus();
  const std::string t = strip_spaces(text);
  if (t.empty()) throw std::invalid_argument("missing relation");
  if (t == "T") return c.universal();
  Relation out = c.empty();
  for (const auto& tok : split(t, ',')) {
    auto b = rcc8_parse(tok);
    if (!b) throw std::invalid_argument("unknown RCC8 token '" + tok + "'");
    out |= c.basic(*b);
  }
  return out;
}

Relation parse_dir_relation(const std::string& text) {
  const std::string t = strip_spaces(text);
  if (t.empty()) throw std::invalid_argument("missing relation");
  Relation out = ra_calculus().empty();
  for (const auto& term : split(t, ',')) {
    if (term == "T") {
      out |= ra_calculus().universal();
    } else if (term.size() == 1 && std::string("WENS").find(term[0]) != std::string::npos) {
      out |= cardinal(term[0]);
    } else {
      const auto star = term.find('*');
      if (star == std::string::npos || term.find('*', star + 1) != std::string::npos)
        throw std::invalid_argument("rectangle term '" + term + "' must have the form X*Y");
      out |= ra_product(ia_term(term.substr(0, star)), ia_term(term.substr(star + 1)));
    }
  }
  return out;
}

std::string format_top_relation(const Relation& r) {
  if (r.empty()) throw std::invalid_argument("cannot format an empty relation");
  if (r == rcc8_calculus().universal()) return "T";
  return r.to_string();
}

std::string format_dir_relation(const Relation& r) {
  if (r.empty()) throw std::invalid_argument("cannot format an empty relation");
  if (r == ra_calculus().universal()) return "T";
  // group x-basics sharing the same set of y-basics
  std::vector<std::pair<Bits, Bits>> groups;  // (xs, ys)
  for (std::size_t x = 0; x < ia::kCount; ++x) {
    Bits ys;
    for (std::size_t y = 0; y < ia::kCount; ++y)
      if (r.test(ra_index(x, y))) ys.set(y);
    if (ys.none()) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.second == ys; });
    if (it == groups.end())
      groups.push_back({Bits().set(x), ys});
    else
      it->first.set(x);
  }
  std::string out;
  for (const auto& [xs, ys] : groups) {
    if (!out.empty()) out += ",";
    out += ia_term_text(xs) + "*" + ia_term_text(ys);
  }
  return out;
}

JointNetwork parse_network(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_vars = false;
  JointNetwork net;
  std::map<std::string, std::size_t> index;
  std::set<std::tuple<std::string, std::size_t, std::size_t>> given;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "vars") {
      if (have_vars) throw ParseError(lineno, "second vars line");
      std::vector<std::string> names;
      std::string nm;
      while (ls >> nm) {
        if (!valid_name(nm)) throw ParseError(lineno, "bad variable name '" + nm + "'");
        if (index.count(nm)) throw ParseError(lineno, "variable '" + nm + "' listed twice");
        index[nm] = names.size();
        names.push_back(nm);
      }
      net = JointNetwork(names);
      have_vars = true;
      continue;
    }
    if (kw != "top" && kw != "dir") throw ParseError(lineno, "unknown statement '" + kw + "'");
    if (!have_vars) throw ParseError(lineno, "constraint before vars line");
    std::string a, b;
    if (!(ls >> a >> b)) throw ParseError(lineno, "expected two variables");
    std::string rest;
    std::getline(ls, rest);
    if (!index.count(a)) throw ParseError(lineno, "unknown variable '" + a + "'");
    if (!index.count(b)) throw ParseError(lineno, "unknown variable '" + b + "'");
    const std::size_t i = index[a], j = index[b];
    Relation rel;
    try {
      rel = kw == "top" ? parse_top_relation(rest) : parse_dir_relation(rest);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    Network& target = kw == "top" ? net.top : net.dir;
    if (i == j) {
      if (!rel.contains(target.calculus().identity()))
        throw ParseError(lineno, "diagonal conflict: " + a + " must be related to itself by " +
                                     target.calculus().identity().to_string());
      continue;
    }
    if (!given.insert({kw, i, j}).second)
      throw ParseError(lineno, "duplicate constraint " + kw + " " + a + " " + b);
    if (given.count({kw, j, i})) {
      if (target.at(i, j) != rel)
        throw ParseError(lineno, "converse conflict with the earlier " + kw + " " + b + " " + a +
                                     " line");
      continue;
    }
    target.set(i, j, rel);
  }
  if (!have_vars) throw ParseError(lineno, "missing vars line");
  return net;
}

std::string serialize_network(const JointNetwork& net) {
  std::ostringstream out;
  out << "vars";
  for (const auto& nm : net.names) out << " " << nm;
  out << "\n";
  const std::size_t n = net.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (net.top.at(i, j) != rcc8_calculus().universal())
        out << "top " << net.names[i] << " " << net.names[j] << " "
            << format_top_relation(net.top.at(i, j)) << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (net.dir.at(i, j) != ra_calculus().universal())
        out << "dir " << net.names[i] << " " << net.names[j] << " "
            << format_dir_relation(net.dir.at(i, j)) << "\n";
  return out.str();
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

namespace {

Rectangle random_box(Rng& rng, long x, long y, long max_side) {
  const long w = rng.uniform(1, max_side), h = rng.uniform(1, max_side);
  return Rectangle::of(x, x + w, y, y + h);
}

Rectangle first_piece_shape(Rng& rng, const std::vector<RectUnionRegion>& prev) {
  const long mode = prev.empty() ? 0 : rng.uniform(0, 3);
  if (mode == 0) return random_box(rng, rng.uniform(0, 16), rng.uniform(0, 16), 6);
  const auto& reg = prev[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(prev.size()) - 1))];
  const Rectangle& p = reg.pieces[static_cast<std::size_t>(
      rng.uniform(0, static_cast<long>(reg.pieces.size()) - 1))];
  const long x0 = p.x.lo.get_num().get_si(), x1 = p.x.hi.get_num().get_si();
  const long y0 = p.y.lo.get_num().get_si(), y1 = p.y.hi.get_num().get_si();
  if (mode == 1 && x1 - x0 >= 2 && y1 - y0 >= 2) {
    // inside the chosen piece, possibly touching its boundary
    const long a = rng.uniform(x0, x1 - 1), b = rng.uniform(a + 1, x1);
    const long c = rng.uniform(y0, y1 - 1), d = rng.uniform(c + 1, y1);
    return Rectangle::of(a, b, c, d);
  }
  if (mode == 2) {
    return Rectangle::of(x0 - rng.uniform(0, 2), x1 + rng.uniform(0, 2), y0 - rng.uniform(0, 2),
                         y1 + rng.uniform(0, 2));
  }
  // sharing the right or top edge of the chosen piece
  if (rng.chance(50)) {
    const long c = rng.uniform(y0 - 2, y1 - 1);
    return Rectangle::of(x1, x1 + rng.uniform(1, 4), c, c + rng.uniform(1, 4));
  }
  const long a = rng.uniform(x0 - 2, x1 - 1);
  return Rectangle::of(a, a + rng.uniform(1, 4), y1, y1 + rng.uniform(1, 4));
}

RectUnionRegion sample_region(Rng& rng, const std::vector<RectUnionRegion>& prev) {
  std::vector<Rectangle> pieces{first_piece_shape(rng, prev)};
  const long extra = rng.uniform(0, 2);
  for (long k = 0; k < extra; ++k) {
    const Rectangle& base = pieces[0];
    const long x = base.x.lo.get_num().get_si() + rng.uniform(-3, 3);
    const long y = base.y.lo.get_num().get_si() + rng.uniform(-3, 3);
    pieces.push_back(random_box(rng, x, y, 3));
  }
  return RectUnionRegion(std::move(pieces));
}

}  // namespace

GeneratedInstance gen_instance(std::uint64_t seed, std::size_t n) {
  if (n == 0) throw std::invalid_argument("gen_instance: need at least one variable");
  Rng rng(seed * 1000003ULL + n);
  GeneratedInstance g;
  for (std::size_t k = 0; k < n; ++k) {
    RectUnionRegion r;
    for (int attempt = 0;; ++attempt) {
      r = sample_region(rng, g.witness);
      bool clash = false;
      for (const auto& p : g.witness)
        if (rcc8_of_regions(r, p) == rcc::EQ) clash = true;
      if (!clash) break;
      if (attempt > 1000) throw std::logic_error("gen_instance: cannot avoid equal regions");
    }
    g.witness.push_back(std::move(r));
  }
  g.net = JointNetwork(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      g.net.top.set(i, j, rcc8_calculus().basic(rcc8_of_regions(g.witness[i], g.witness[j])));
      g.net.dir.set(i, j, ra_calculus().basic(
                              ra_relation_of(g.witness[i].mbr(), g.witness[j].mbr())));
    }
  return g;
}

std::string format_instance(const GeneratedInstance& g) {
  std::string out = serialize_network(g.net);
  for (std::size_t i = 0; i < g.witness.size(); ++i) {
    out += "# witness " + g.net.names[i];
    for (const auto& p : g.witness[i].pieces) out += " " + to_string(p);
    out += "\n";
  }
  return out;
}

std::string verdict_json(const Verdict& v, const JointNetwork& net, const std::string& svg_path) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["status"] = status_name(v.status);
  ordered_json frag;
  if (v.fragment.top_in_h8)
    frag["top_in_h8"] = *v.fragment.top_in_h8;
  else
    frag["top_in_h8"] = "unknown";
  frag["dir_in_dir49"] = v.fragment.dir_in_dir49;
  j["fragment"] = frag;
  j["approximate"] = v.approximate;
  if (v.witness) {
    const Witness& w = *v.witness;
    ordered_json top = ordered_json::array(), dir = ordered_json::array();
    for (std::size_t a = 0; a < net.size(); ++a)
      for (std::size_t b = a + 1; b < net.size(); ++b) {
        top.push_back({net.names[a], net.names[b], format_top_relation(w.top.at(a, b))});
        dir.push_back({net.names[a], net.names[b], format_dir_relation(w.dir.at(a, b))});
      }
    j["scenario_top"] = top;
    j["scenario_dir"] = dir;
    ordered_json rects = ordered_json::object();
    for (std::size_t a = 0; a < net.size(); ++a) {
      const Rectangle& r = w.rects[a];
      rects[net.names[a]] = {{"x", {rational_string(r.x.lo), rational_string(r.x.hi)}},
                             {"y", {rational_string(r.y.lo), rational_string(r.y.hi)}}};
    }
    j["rectangles"] = rects;
  } else {
    j["scenario_top"] = nullptr;
    j["scenario_dir"] = nullptr;
    j["rectangles"] = nullptr;
  }
  ordered_json chi = ordered_json::array();
  for (const auto& c : v.chi_report)
    chi.push_back({{"i", net.names[c.i]},
                   {"j", net.names[c.j]},
                   {"axis", c.axis == 0 ? "x" : "y"},
                   {"basic", ia_name(c.basic)},
                   {"chi", rational_string(c.value)}});
  j["chi_report"] = chi;
  j["trace"] = v.trace;
  if (!svg_path.empty()) j["svg_path"] = svg_path;
  return j.dump(2) + "\n";
}

}  // namespace qsr
