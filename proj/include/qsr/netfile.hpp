#pragma once

// Text format for joint networks, the random instance generator and the
// JSON rendering of verdicts.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsr/interaction.hpp"
#include "qsr/solver.hpp"

namespace qsr {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Grammar, one statement per line, '#' starts a comment:
///   vars a b c
///   top a b DC,NTPP        (or T)
///   dir a b m|o*eq,W       (X*Y terms, cardinal macros W E N S, or T)
/// X and Y are '|'-joined interval basics or the macros MO, MOI, SDF, SDFI,
/// SDFEQ, T. Unlisted pairs are universal; converses are filled in.
JointNetwork parse_network(const std::string& text);

Relation parse_top_relation(const std::string& text);
Relation parse_dir_relation(const std::string& text);

/// Canonical text: vars line, then non-universal top and dir entries for
/// i < j in index order.
std::string serialize_network(const JointNetwork& net);
std::string format_top_relation(const Relation& r);
std::string format_dir_relation(const Relation& r);

struct GeneratedInstance {
  JointNetwork net;  // basic on both sides
  std::vector<RectUnionRegion> witness;
};

/// Deterministic in (seed, n).
GeneratedInstance gen_instance(std::uint64_t seed, std::size_t n);
/// Network text followed by the witness as comment lines.
std::string format_instance(const GeneratedInstance& g);

/// std::mt19937_64 with a rejection-sampled bounded draw, so sequences do
/// not depend on the standard library's distribution code.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool chance(unsigned percent) { return uniform(0, 99) < static_cast<long>(percent); }

 private:
  std::mt19937_64 engine_;
};

/// Verdict as a JSON document (pretty-printed, stable key order).
std::string verdict_json(const Verdict& v, const JointNetwork& net,
                         const std::string& svg_path = "");

}  // namespace qsr
