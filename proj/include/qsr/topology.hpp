#pragma once

// RCC8: basics, composition table, the scenario map h and an exact RCC8
// oracle for finite unions of rectangles.

#include <bitset>
#include <optional>
#include <string>
#include <vector>

#include "qsr/algebra.hpp"
#include "qsr/geometry.hpp"

namespace qsr {

namespace rcc {
enum Basic : std::size_t { DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ };
inline constexpr std::size_t kCount = 8;
}  // namespace rcc

const Calculus& rcc8_calculus();
const std::string& rcc8_name(std::size_t basic);
std::optional<std::size_t> rcc8_parse(const std::string& token);

/// RCC8 relation as an 8-bit mask, bit i = basic i.
unsigned rcc8_mask(const Relation& r);
Relation rcc8_from_mask(unsigned mask);

/// First match of DC, EC, PO, TPP, TPPi contained in theta; otherwise theta
/// itself, which must then be basic. Throws std::invalid_argument on empty
/// theta or a non-basic else-branch ("outside mapping domain").
std::size_t h_refine(const Relation& theta);

/// Regular closed union of axis-aligned rectangles.
struct RectUnionRegion {
  std::vector<Rectangle> pieces;

  RectUnionRegion() = default;
  explicit RectUnionRegion(std::vector<Rectangle> p);
  Rectangle mbr() const;
};

/// Exact basic RCC8 relation between two rectangle unions, decided on the
/// common coordinate-compressed grid.
std::size_t rcc8_of_regions(const RectUnionRegion& a, const RectUnionRegion& b);

/// A set of RCC8 relations used to decide whether the no-search fast path
/// applies. The default instance is a certified part of the maximal
/// tractable class: the closure of basics, the universal relation and every
/// rectangle-induced relation under converse, intersection and composition.
class H8Membership {
 public:
  /// Built-in certified subset.
  static const H8Membership& certified();
  /// One relation per line, comma-separated tokens; '#' comments. Validates
  /// closure under converse and nonempty intersection. Throws on error.
  static H8Membership load(const std::string& path);

  bool contains(const Relation& theta) const { return set_.test(rcc8_mask(theta)); }
  bool contains_mask(unsigned mask) const { return set_.test(mask); }
  std::size_t size() const { return set_.count(); }
  /// True for a list read from a file, which is taken to be the full class.
  bool complete() const { return complete_; }

 private:
  std::bitset<256> set_;
  bool complete_ = false;
};

/// Membership data in effect: the file named by QSR_H8_TABLE when set,
/// otherwise the certified subset. Loaded once.
const H8Membership& active_h8();

}  // namespace qsr
