#include "qsr/interaction.hpp"

#include <array>
#include <stdexcept>

namespace qsr {

namespace {

struct Tables {
  std::array<Relation, rcc::kCount> era;
  std::array<Relation, kMrcc8Count> rcc;
};

const Tables& tables() {
  static const Tables t = [] {
    using namespace ia;
    const Calculus& ia_c = ia_calculus();
    const Calculus& ra_c = ra_calculus();
    const Calculus& top = rcc8_calculus();
    Tables out;
    Bits not_mdc, not_mdc_mec;
    for (std::size_t b = 0; b < kRaCount; ++b) {
      const auto cls = mrcc8_class(b);
      if (cls != mrcc::MDC) not_mdc.set(b);
      if (cls != mrcc::MDC && cls != mrcc::MEC) not_mdc_mec.set(b);
    }
    const Relation sdfeq = ia_c.make({s, d, f, eq});
    const Relation sdfeq_i = ia_c.make({si, di, fi, eq});
    out.era[rcc::DC] = ra_c.universal();
    out.era[rcc::EC] = ra_c.make(not_mdc);
    out.era[rcc::PO] = ra_c.make(not_mdc_mec);
    out.era[rcc::TPP] = ra_product(sdfeq, sdfeq);
    out.era[rcc::NTPP] = ra_c.basic(ra_index(d, d));
    out.era[rcc::TPPi] = ra_product(sdfeq_i, sdfeq_i);
    out.era[rcc::NTPPi] = ra_c.basic(ra_index(di, di));
    out.era[rcc::EQ] = ra_c.basic(ra_index(eq, eq));

    using namespace rcc;
    out.rcc[mrcc::MDC] = top.make({DC});
    out.rcc[mrcc::MEC] = top.make({DC, EC});
    out.rcc[mrcc::MPO] = top.make({DC, EC, PO});
    out.rcc[mrcc::MTPP] = top.make({DC, EC, PO, TPP});
    out.rcc[mrcc::MNTPP] = top.make({DC, EC, PO, TPP, NTPP});
    out.rcc[mrcc::MTPPi] = top.make({DC, EC, PO, TPPi});
    out.rcc[mrcc::MNTPPi] = top.make({DC, EC, PO, TPPi, NTPPi});
    out.rcc[mrcc::MEQ] = top.make({DC, EC, PO, EQ, TPP, TPPi});
    return out;
  }();
  return t;
}

}  // namespace

JointNetwork::JointNetwork(std::size_t n)
    : top(rcc8_calculus(), n), dir(ra_calculus(), n) {
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
}

JointNetwork::JointNetwork(std::vector<std::string> var_names)
    : names(std::move(var_names)),
      top(rcc8_calculus(), names.size()),
      dir(ra_calculus(), names.size()) {}

Relation induced_era_of_basic(std::size_t theta) { return tables().era.at(theta); }

Relation induced_rcc_of_class(std::size_t cls) { return tables().rcc.at(cls); }

Relation induced_era(const Relation& theta) {
  if (theta.empty()) throw std::invalid_argument("induced_era: empty relation");
  Relation out = ra_calculus().empty();
  for (auto b : theta.basics()) out |= tables().era[b];
  return out;
}

Relation induced_rcc(const Relation& delta) {
  if (delta.empty()) throw std::invalid_argument("induced_rcc: empty relation");
  unsigned seen = 0;
  Relation out = rcc8_calculus().empty();
  for (auto b : delta.basics()) {
    const auto cls = mrcc8_class(b);
    if (seen & (1u << cls)) continue;
    seen |= 1u << cls;
    out |= tables().rcc[cls];
  }
  return out;
}

std::pair<Relation, Relation> restrict_pair(const Relation& theta, const Relation& delta) {
  if (theta.empty() || delta.empty())
    return {rcc8_calculus().empty(), ra_calculus().empty()};
  return {theta & induced_rcc(delta), delta & induced_era(theta)};
}

std::optional<JointNetwork> biclose(const JointNetwork& net) {
  JointNetwork out = net;
  const std::size_t n = net.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto [t, d] = restrict_pair(net.top.at(i, j), net.dir.at(i, j));
      if (t.empty() || d.empty()) return std::nullopt;
      out.top.set(i, j, t);
      out.dir.set(i, j, d);
    }
  return out;
}

bool is_biclosed(const JointNetwork& net) {
  auto closed = biclose(net);
  return closed && *closed == net;
}

}  // namespace qsr
