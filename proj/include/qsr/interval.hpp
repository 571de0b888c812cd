#pragma once

// Interval Algebra over rational closed intervals.

#include <optional>
#include <string>
#include <vector>

#include "qsr/algebra.hpp"
#include "qsr/rational.hpp"

namespace qsr {

namespace ia {
// Index order matches the calculus basis; converse of i is 12 - i.
enum Basic : std::size_t { b, m, o, s, d, f, eq, fi, di, si, oi, mi, bi };
inline constexpr std::size_t kCount = 13;
}  // namespace ia

struct Interval {
  Rational lo;
  Rational hi;

  Interval() : lo(0), hi(1) {}
  /// Throws std::invalid_argument unless lo < hi.
  Interval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const Interval& o) const { return !(*this == o); }
};

const Calculus& ia_calculus();
const std::string& ia_name(std::size_t basic);
std::optional<std::size_t> ia_parse(const std::string& token);

std::size_t ia_relation_of(const Interval& i, const Interval& j);

/// Composition of two basics by enumerating every placement of six endpoints
/// on {0..5}; this is what populates the IA table.
Relation ia_compose_oracle(std::size_t a, std::size_t b);

/// Atom of the 3- or 7-granularity partition containing basic a.
Relation coarsen(std::size_t a, int granularity);

std::size_t tau(std::size_t a);
Relation tau(const Relation& r);
/// Pointwise tau on a basic IA network.
Network tau(const Network& net);

/// Gap-free integer solution of a basic IA network. eq-related variables
/// share an interval. Returns nullopt when path-consistency empties the
/// network. Throws std::invalid_argument on non-basic input.
std::optional<std::vector<Interval>> canonical_solution(const Network& net);

/// Precision measure of (I, J) as an instance of tau(a) relative to a.
/// Throws std::invalid_argument when (I, J) is not a tau(a) instance.
Rational chi(std::size_t a, const Interval& i, const Interval& j);

/// Solution of tau(net) whose pairs are eps-instances of net's relations,
/// built from the two canonical solutions via f(s) = t + s * eps / (4n).
/// Throws std::invalid_argument on unsatisfiable input or eps outside (0,1).
std::vector<Interval> epsilon_shift(const Network& net, const Rational& eps);

}  // namespace qsr
