#pragma once

// Regions realizing a basic RCC8 network with prescribed bounding boxes,
// exact verification of such regions, and SVG export.

#include <optional>
#include <string>
#include <vector>

#include "qsr/algebra.hpp"
#include "qsr/geometry.hpp"
#include "qsr/topology.hpp"

namespace qsr {

/// Which half of the disk is kept; the cut always passes through the centre.
enum class Cut { none, left, right, lower, upper };

const char* cut_name(Cut c);

/// Closed disk, or closed half-disk, with rational centre and radius.
struct DiskPiece {
  Point centre;
  Rational radius;
  Cut cut = Cut::none;

  Rectangle bounds() const;
};

struct Tangency {
  std::string other;
  Point at;
};

struct SymbolicRegion {
  std::string owner;
  Rectangle mbr;
  std::vector<DiskPiece> disks;
  std::vector<Rectangle> boxes;
  std::vector<Tangency> tangencies;
  /// Owners of regions placed inside this one during construction.
  std::vector<std::string> contains;

  /// Bounding box of the primitives, computed from scratch.
  Rectangle computed_mbr() const;
};

/// A rectangle-union region in symbolic form.
SymbolicRegion region_from_boxes(const std::string& owner, const RectUnionRegion& r);

struct Violation {
  std::size_t i;
  std::size_t j;
  std::string clause;
};

/// Pairwise bounding-box conditions under which the regions can be built.
/// Throws std::invalid_argument on a size mismatch.
std::vector<Violation> compatible(const std::vector<Rectangle>& rects, const Network& top);

struct RealizationParams {
  Rational delta1;
  Rational delta2;
  Rational delta;
  std::vector<Rational> radii;  // radii[k-1] = r_k
  std::vector<int> ntp_level;   // per variable, >= 1
  std::vector<Point> points;    // every chosen centre
};

struct Realization {
  std::vector<SymbolicRegion> regions;
  RealizationParams params;
};

/// Throws std::invalid_argument when the network is not basic, fails
/// path-consistency, or the rectangles are not compatible.
Realization realize_regions(const Network& top, const std::vector<Rectangle>& rects,
                            const std::vector<std::string>& names = {});

struct PairCheck {
  std::size_t i;
  std::size_t j;
  std::optional<std::size_t> observed;  // nullopt: not decidable for this primitive mix
  std::size_t expected;
};

struct VerifyReport {
  bool ok = true;
  bool separated = true;  // disks at distinct centres never meet
  std::vector<PairCheck> mismatches;
  std::vector<std::size_t> mbr_mismatch;
  /// observed[i][j], or kUndecided
  std::vector<std::vector<std::size_t>> observed;
  /// Rectangle-algebra basic between computed MBRs.
  std::vector<std::vector<std::size_t>> mbr_relation;
};

inline constexpr std::size_t kUndecided = static_cast<std::size_t>(-1);

/// Exact RCC8 relation between two regions, or nullopt when they mix disk
/// and box primitives. Disk-based regions must be separated (see
/// disks_separated).
std::optional<std::size_t> rcc8_of_symbolic(const SymbolicRegion& a, const SymbolicRegion& b);
bool disks_separated(const std::vector<SymbolicRegion>& regions);

VerifyReport verify_regions(const std::vector<SymbolicRegion>& regions, const Network& top);

/// Deterministic SVG document; coordinates printed with six decimals.
std::string to_svg(const std::vector<SymbolicRegion>& regions,
                   const std::vector<Rectangle>& rects = {});

}  // namespace qsr
