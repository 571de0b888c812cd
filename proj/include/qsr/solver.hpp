#pragma once

// Propagation and decision procedures for joint RCC8 / rectangle networks.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsr/interaction.hpp"
#include "qsr/realize.hpp"

namespace qsr {

enum class Status { sat, unsat, unknown };
const char* status_name(Status s);

struct ChiEntry {
  std::size_t i;
  std::size_t j;
  int axis;  // 0 = x, 1 = y
  std::size_t basic;
  Rational value;
};

struct Witness {
  Network top;  // basic RCC8 scenario
  Network dir;  // basic RA scenario met exactly by the rectangles
  std::vector<Rectangle> rects;
  std::vector<SymbolicRegion> regions;
};

struct Fragment {
  std::optional<bool> top_in_h8;  // nullopt: undecided with the data in use
  bool dir_in_dir49 = false;
};

struct Verdict {
  Status status = Status::unknown;
  Fragment fragment;
  std::optional<Witness> witness;
  std::vector<ChiEntry> chi_report;
  std::vector<std::string> trace;
  /// The witness meets the directional constraints only as eps-instances.
  bool approximate = false;
};

struct SolveOptions {
  /// Treat every topological entry as a member of the tractable class.
  bool assume_h8 = false;
  /// Build rectangles and regions for sat answers.
  bool construct = true;
  /// Membership data; nullptr means active_h8().
  const H8Membership* h8 = nullptr;
};

/// Raised by epsilon_solve when a precondition fails; stage() names it.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

std::optional<Network> path_consistency(const Network& net);

/// Interleaves bi-closure with path-consistency on both components until
/// nothing changes. nullopt when some entry empties.
std::optional<JointNetwork> bipath_consistency(const JointNetwork& net);

/// Entrywise h_refine of a path-consistent RCC8 network.
Network scenario_h8(const Network& top);

Fragment classify(const JointNetwork& net, const SolveOptions& opts = {});

/// Basic RA scenario of net using only tau-image basics on both axes, found
/// by backtracking; nullopt when none exists.
std::optional<Network> tau_scenario(const Network& dir);

/// Complete decision when every dir entry is a DIR49 relation.
/// Throws std::invalid_argument otherwise.
Verdict decide_dir49(const JointNetwork& net, const SolveOptions& opts = {});

/// Sound check for arbitrary rectangle relations; never answers sat when
/// some dir entry lies outside DIR49.
Verdict check_general(const JointNetwork& net, const SolveOptions& opts = {});

/// eps-approximate solution of a basic joint network. Throws StageError
/// naming the stage (basic, biclose, components, generalization, realize).
Verdict epsilon_solve(const JointNetwork& net, const Rational& eps,
                      const SolveOptions& opts = {});

/// Checks a witness against the constraints of net: regions against top,
/// MBRs against the stored rectangles, rectangles against dir (exactly, or
/// against the tau-version when approximate). Returns a list of problems.
std::vector<std::string> recheck_witness(const JointNetwork& net, const Witness& w,
                                         bool approximate);

}  // namespace qsr
