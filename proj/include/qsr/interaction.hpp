#pragma once

// Pairwise interaction of RCC8 and rectangle relations, and bi-closure of
// joint networks.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsr/algebra.hpp"
#include "qsr/boxes.hpp"
#include "qsr/topology.hpp"

namespace qsr {

/// n variables carrying an RCC8 network and an RA network over their MBRs.
struct JointNetwork {
  std::vector<std::string> names;
  Network top;
  Network dir;

  JointNetwork() : top(rcc8_calculus(), 0), dir(ra_calculus(), 0) {}
  explicit JointNetwork(std::size_t n);
  explicit JointNetwork(std::vector<std::string> var_names);

  std::size_t size() const { return names.size(); }
  bool operator==(const JointNetwork& o) const {
    return names == o.names && top == o.top && dir == o.dir;
  }
  bool operator!=(const JointNetwork& o) const { return !(*this == o); }
};

/// Rectangle relations compatible with the topological basic theta.
Relation induced_era_of_basic(std::size_t theta);
/// RCC8 relations compatible with any rectangle basic of class cls.
Relation induced_rcc_of_class(std::size_t cls);

/// Throws std::invalid_argument on empty input.
Relation induced_era(const Relation& theta);
/// Throws std::invalid_argument on empty input.
Relation induced_rcc(const Relation& delta);

/// (theta & RCC(delta), delta & ERA(theta)); either side may come back empty.
std::pair<Relation, Relation> restrict_pair(const Relation& theta, const Relation& delta);

/// Restricts every pair. nullopt when some entry empties.
std::optional<JointNetwork> biclose(const JointNetwork& net);
bool is_biclosed(const JointNetwork& net);

}  // namespace qsr
