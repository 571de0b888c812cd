#pragma once

// Rectangle Algebra: products of interval relations on the two axes.

#include <optional>
#include <string>
#include <vector>

#include "qsr/algebra.hpp"
#include "qsr/geometry.hpp"
#include "qsr/interval.hpp"

namespace qsr {

inline constexpr std::size_t kRaCount = ia::kCount * ia::kCount;

/// Product calculus; basic x (x) y lives at index x * 13 + y.
const Calculus& ra_calculus();

constexpr std::size_t ra_index(std::size_t x, std::size_t y) { return x * ia::kCount + y; }
constexpr std::size_t ra_x(std::size_t basic) { return basic / ia::kCount; }
constexpr std::size_t ra_y(std::size_t basic) { return basic % ia::kCount; }
/// "x*y", e.g. "m*eq".
std::string ra_name(std::size_t basic);

std::size_t ra_relation_of(const Rectangle& a, const Rectangle& b);

/// X (x) Y for IA relations X, Y.
Relation ra_product(const Relation& x, const Relation& y);
/// Set of first (axis 0) or second (axis 1) components.
Relation ra_project(const Relation& r, int axis);
/// True when r equals the product of its two projections.
bool ra_is_product(const Relation& r);

Relation ra_compose(const Relation& r1, const Relation& r2);

namespace mrcc {
enum Class : std::size_t { MDC, MEC, MPO, MEQ, MTPP, MNTPP, MTPPi, MNTPPi };
}  // namespace mrcc
inline constexpr std::size_t kMrcc8Count = 8;

const std::string& mrcc8_name(std::size_t cls);
std::size_t mrcc8_class(std::size_t ra_basic);

/// 'W', 'E', 'N' or 'S'.
Relation cardinal(char name);

/// Smallest relation of the 7-atom product partition containing delta.
/// Throws std::invalid_argument on empty input.
Relation dir49_generalize(const Relation& delta);
bool in_dir49(const Relation& delta);

/// Per-axis IA network of a basic RA network.
Network axis_network(const Network& ra_net, int axis);

/// Canonical solution on each axis, combined. nullopt iff either axis is
/// inconsistent. Throws std::invalid_argument on non-basic input.
std::optional<std::vector<Rectangle>> rectangle_solution(const Network& ra_net);

}  // namespace qsr
