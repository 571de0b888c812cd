#include "qsr/interval.hpp"

#include <array>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qsr {

namespace {

const std::array<std::string, ia::kCount> kNames = {"b",  "m",  "o",  "s",  "d",  "f", "eq",
                                                      "fi", "di", "si", "oi", "mi", "bi"};

int sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

std::size_t relation_of_ints(int xl, int xh, int yl, int yh) {
  return ia_relation_of(Interval(xl, xh), Interval(yl, yh));
}

std::unique_ptr<Calculus> build_ia() {
  std::vector<std::string> names(kNames.begin(), kNames.end());
  std::vector<std::size_t> conv(ia::kCount);
  for (std::size_t i = 0; i < ia::kCount; ++i) conv[i] = ia::kCount - 1 - i;
  std::vector<Bits> table(ia::kCount * ia::kCount);
  for (int a = 0; a < 6; ++a)
    for (int a2 = a + 1; a2 < 6; ++a2)
      for (int b = 0; b < 6; ++b)
        for (int b2 = b + 1; b2 < 6; ++b2)
          for (int c = 0; c < 6; ++c)
            for (int c2 = c + 1; c2 < 6; ++c2) {
              const auto ij = relation_of_ints(a, a2, b, b2);
              const auto jk = relation_of_ints(b, b2, c, c2);
              table[ij * ia::kCount + jk].set(relation_of_ints(a, a2, c, c2));
            }
  Bits id;
  id.set(ia::eq);
  return std::make_unique<Calculus>("IA", std::move(names), std::move(conv), std::move(table), id);
}

// One instance (small integer endpoints) of every basic relation.
const std::array<std::array<int, 4>, ia::kCount> kSample = {{
    {0, 1, 2, 3},  // b
    {0, 1, 1, 2},  // m
    {0, 2, 1, 3},  // o
    {0, 1, 0, 2},  // s
    {1, 2, 0, 3},  // d
    {1, 2, 0, 2},  // f
    {0, 1, 0, 1},  // eq
    {0, 2, 1, 2},  // fi
    {0, 3, 1, 2},  // di
    {0, 2, 0, 1},  // si
    {1, 3, 0, 2},  // oi
    {1, 2, 0, 1},  // mi
    {2, 3, 0, 1},  // bi
}};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) throw std::invalid_argument("degenerate interval");
}

const Calculus& ia_calculus() {
  static const std::unique_ptr<Calculus> calc = build_ia();
  return *calc;
}

const std::string& ia_name(std::size_t basic) { return kNames.at(basic); }

std::optional<std::size_t> ia_parse(const std::string& token) {
  for (std::size_t i = 0; i < ia::kCount; ++i)
    if (kNames[i] == token) return i;
  return std::nullopt;
}

std::size_t ia_relation_of(const Interval& x, const Interval& y) {
  if (x.hi < y.lo) return ia::b;
  if (x.hi == y.lo) return ia::m;
  if (x.lo > y.hi) return ia::bi;
  if (x.lo == y.hi) return ia::mi;
  const int lo = sign(x.lo - y.lo);
  const int hi = sign(x.hi - y.hi);
  static const std::size_t grid[3][3] = {
      {ia::o, ia::fi, ia::di},
      {ia::s, ia::eq, ia::si},
      {ia::d, ia::f, ia::oi},
  };
  return grid[lo + 1][hi + 1];
}

Relation ia_compose_oracle(std::size_t a, std::size_t b) {
  const Calculus& c = ia_calculus();
  return Relation(c, c.compose_basic(a, b));
}

Relation coarsen(std::size_t a, int granularity) {
  using namespace ia;
  const Calculus& c = ia_calculus();
  if (a >= kCount) throw std::out_of_range("coarsen: basic out of range");
  if (granularity == 3) {
    if (a == b || a == bi) return c.basic(a);
    return c.make({m, o, s, d, f, eq, fi, di, si, oi, mi});
  }
  if (granularity != 7) throw std::invalid_argument("coarsen: granularity must be 3 or 7");
  switch (a) {
    case m:
    case o:
      return c.make({m, o});
    case s:
    case d:
    case f:
      return c.make({s, d, f});
    case si:
    case di:
    case fi:
      return c.make({si, di, fi});
    case mi:
    case oi:
      return c.make({mi, oi});
    default:
      return c.basic(a);
  }
}

std::size_t tau(std::size_t a) {
  switch (a) {
    case ia::m:
      return ia::o;
    case ia::s:
    case ia::f:
      return ia::d;
    case ia::si:
    case ia::fi:
      return ia::di;
    case ia::mi:
      return ia::oi;
    default:
      return a;
  }
}

Relation tau(const Relation& r) {
  const Calculus& c = ia_calculus();
  Bits out;
  for (auto a : r.basics()) out.set(tau(a));
  return Relation(c, out);
}

Network tau(const Network& net) {
  Network out(net.calculus(), net.size());
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j) out.set(i, j, tau(net.at(i, j)));
  return out;
}

std::optional<std::vector<Interval>> canonical_solution(const Network& input) {
  if (&input.calculus() != &ia_calculus())
    throw std::invalid_argument("canonical_solution: not an IA network");
  if (!input.is_basic()) throw std::invalid_argument("canonical_solution: non-basic constraint");
  const std::size_t n = input.size();
  Network net = input;
  if (!enforce_path_consistency(net)) return std::nullopt;
  if (n == 0) return std::vector<Interval>{};

  UnionFind vars(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (net.at(i, j).test(ia::eq)) vars.unite(i, j);

  // Endpoint 2v is the lower end of variable v's class, 2v+1 the upper one.
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i)
    if (vars.find(i) == i) reps.push_back(i);
  const std::size_t k = reps.size();
  std::vector<int> cmp(4 * k * k, 0);
  auto at = [&](std::size_t p, std::size_t q) -> int& { return cmp[p * 2 * k + q]; };
  for (std::size_t a = 0; a < k; ++a) {
    at(2 * a, 2 * a + 1) = -1;
    at(2 * a + 1, 2 * a) = 1;
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const auto& sm = kSample[net.at(reps[a], reps[b]).first()];
      for (int pa = 0; pa < 2; ++pa)
        for (int pb = 0; pb < 2; ++pb) {
          const int diff = sm[pa] - sm[2 + pb];
          at(2 * a + pa, 2 * b + pb) = diff < 0 ? -1 : (diff > 0 ? 1 : 0);
        }
    }
  }

  UnionFind points(2 * k);
  for (std::size_t p = 0; p < 2 * k; ++p)
    for (std::size_t q = 0; q < 2 * k; ++q)
      if (p != q && at(p, q) == 0) points.unite(p, q);
  std::vector<long> level(2 * k, 0);
  for (std::size_t p = 0; p < 2 * k; ++p) {
    std::set<std::size_t> below;
    for (std::size_t q = 0; q < 2 * k; ++q)
      if (at(q, p) < 0) below.insert(points.find(q));
    level[p] = static_cast<long>(below.size());
  }

  std::vector<std::size_t> class_of(n);
  for (std::size_t a = 0; a < k; ++a) class_of[reps[a]] = a;
  std::vector<Interval> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = class_of[vars.find(i)];
    out.emplace_back(Rational(level[2 * a]), Rational(level[2 * a + 1]));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!input.at(i, j).test(ia_relation_of(out[i], out[j])))
        throw std::logic_error("canonical_solution: level assignment does not verify");
  return out;
}

Rational chi(std::size_t a, const Interval& i, const Interval& j) {
  if (ia_relation_of(i, j) != tau(a))
    throw std::invalid_argument("chi: pair is not an instance of tau(" + ia_name(a) + ")");
  switch (a) {
    case ia::m: {
      const Rational shortest = i.length() < j.length() ? i.length() : j.length();
      return (i.hi - j.lo) / shortest;
    }
    case ia::s:
      return (i.lo - j.lo) / i.length();
    case ia::f:
      return (j.hi - i.hi) / i.length();
    case ia::mi:
    case ia::si:
    case ia::fi:
      return chi(ia_calculus().converse_of(a), j, i);
    default:
      return Rational(0);
  }
}

std::vector<Interval> epsilon_shift(const Network& net, const Rational& eps) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("epsilon_shift: eps must lie in (0,1)");
  const auto t = canonical_solution(net);
  if (!t) throw std::invalid_argument("epsilon_shift: network is unsatisfiable");
  const auto s = canonical_solution(tau(net));
  if (!s) throw std::logic_error("epsilon_shift: tau-version unsatisfiable");
  const std::size_t n = net.size();
  const Rational step = eps / Rational(static_cast<long>(4 * n));
  std::vector<Interval> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back((*t)[i].lo + (*s)[i].lo * step, (*t)[i].hi + (*s)[i].hi * step);
  return out;
}

}  // namespace qsr
