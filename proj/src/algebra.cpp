#include "qsr/algebra.hpp"

#include <array>
#include <deque>
#include <stdexcept>

namespace qsr {

Relation::Relation(const Calculus& calculus, const Bits& bits) : calc_(&calculus), bits_(bits) {}

const Calculus& Relation::calculus() const {
  if (calc_ == nullptr) throw std::logic_error("relation without calculus");
  return *calc_;
}

std::size_t Relation::first() const {
  for (std::size_t i = 0; i < kMaxBasis; ++i)
    if (bits_.test(i)) return i;
  throw std::logic_error("first() on empty relation");
}

std::vector<std::size_t> Relation::basics() const {
  std::vector<std::size_t> out;
  const std::size_t n = calc_ ? calc_->size() : kMaxBasis;
  for (std::size_t i = 0; i < n; ++i)
    if (bits_.test(i)) out.push_back(i);
  return out;
}

void Relation::require_same(const Relation& other) const {
  if (calc_ != other.calc_)
    throw std::invalid_argument("relations belong to different calculi");
}

bool Relation::contains(const Relation& other) const {
  require_same(other);
  return (other.bits_ & ~bits_).none();
}

bool Relation::intersects(const Relation& other) const {
  require_same(other);
  return (bits_ & other.bits_).any();
}

Relation Relation::operator|(const Relation& other) const {
  require_same(other);
  return Relation(*calc_, bits_ | other.bits_);
}

Relation Relation::operator&(const Relation& other) const {
  require_same(other);
  return Relation(*calc_, bits_ & other.bits_);
}

Relation& Relation::operator|=(const Relation& other) {
  require_same(other);
  bits_ |= other.bits_;
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  require_same(other);
  bits_ &= other.bits_;
  return *this;
}

Relation Relation::operator~() const {
  const auto& c = calculus();
  return Relation(c, ~bits_ & c.universal().bits());
}

bool Relation::operator==(const Relation& other) const {
  return calc_ == other.calc_ && bits_ == other.bits_;
}

bool Relation::operator<(const Relation& other) const {
  require_same(other);
  for (std::size_t i = kMaxBasis; i-- > 0;) {
    if (bits_.test(i) != other.bits_.test(i)) return other.bits_.test(i);
  }
  return false;
}

std::string Relation::to_string() const {
  if (empty()) return "{}";
  std::string out;
  for (auto b : basics()) {
    if (!out.empty()) out += ",";
    out += calc_->basic_name(b);
  }
  return out;
}

Calculus::Calculus(std::string name, std::vector<std::string> basic_names,
                   std::vector<std::size_t> converse_map, std::vector<Bits> composition_table,
                   Bits identity)
    : name_(std::move(name)),
      names_(std::move(basic_names)),
      converse_(std::move(converse_map)),
      table_(std::move(composition_table)),
      identity_(identity) {
  const std::size_t n = names_.size();
  if (n == 0 || n > kMaxBasis) throw std::invalid_argument(name_ + ": bad basis size");
  if (converse_.size() != n) throw std::invalid_argument(name_ + ": converse map size");
  if (table_.size() != n * n) throw std::invalid_argument(name_ + ": composition table size");
  for (std::size_t i = 0; i < n; ++i) universe_.set(i);
  for (std::size_t i = 0; i < n; ++i) {
    if (converse_[i] >= n || converse_[converse_[i]] != i)
      throw std::invalid_argument(name_ + ": converse map is not an involution");
  }
  for (const auto& entry : table_) {
    if (entry.none()) throw std::invalid_argument(name_ + ": empty composition entry");
    if ((entry & ~universe_).any()) throw std::invalid_argument(name_ + ": entry out of basis");
  }
  if (identity_.none()) throw std::invalid_argument(name_ + ": empty identity");
}

std::optional<std::size_t> Calculus::index_of(std::string_view token) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == token) return i;
  return std::nullopt;
}

Relation Calculus::basic(std::size_t i) const {
  if (i >= size()) throw std::out_of_range(name_ + ": basic index out of range");
  Bits b;
  b.set(i);
  return Relation(*this, b);
}

Relation Calculus::make(const Bits& bits) const {
  if ((bits & ~universe_).any()) throw std::invalid_argument(name_ + ": bits outside basis");
  return Relation(*this, bits);
}

Relation Calculus::make(std::initializer_list<std::size_t> basics) const {
  Bits b;
  for (auto i : basics) {
    if (i >= size()) throw std::out_of_range(name_ + ": basic index out of range");
    b.set(i);
  }
  return Relation(*this, b);
}

Relation Calculus::converse(const Relation& r) const {
  if (&r.calculus() != this) throw std::invalid_argument("converse: foreign relation");
  Bits out;
  const auto& bits = r.bits();
  for (std::size_t i = 0; i < size(); ++i)
    if (bits.test(i)) out.set(converse_[i]);
  return Relation(*this, out);
}

Relation Calculus::compose_table(const Relation& r1, const Relation& r2) const {
  if (&r1.calculus() != this || &r2.calculus() != this)
    throw std::invalid_argument("weak_compose: calculus mismatch");
  Bits out;
  if (r1.empty() || r2.empty()) return Relation(*this, out);
  const auto b1 = r1.basics();
  const auto b2 = r2.basics();
  for (auto a : b1) {
    for (auto b : b2) {
      out |= compose_basic(a, b);
      if (out == universe_) return Relation(*this, out);
    }
  }
  return Relation(*this, out);
}

Relation Calculus::compose_product(const Relation& r1, const Relation& r2) const {
  // Slice both operands by their first component: r = U_x {x} (x) Y(x).
  // Then r1 o r2 = U_{a,c} (a o c) (x) (Y1(a) o Y2(c)), computed in the factor.
  const Calculus& f = *factor_;
  const std::size_t k = f.size();
  std::array<Bits, 16> rows1{}, rows2{};
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (r1.bits().test(x * k + y)) rows1[x].set(y);
      if (r2.bits().test(x * k + y)) rows2[x].set(y);
    }
  }
  Bits out;
  for (std::size_t a = 0; a < k; ++a) {
    if (rows1[a].none()) continue;
    for (std::size_t c = 0; c < k; ++c) {
      if (rows2[c].none()) continue;
      const Bits y = f.compose_table(Relation(f, rows1[a]), Relation(f, rows2[c])).bits();
      const Bits& x = f.compose_basic(a, c);
      for (std::size_t xi = 0; xi < k; ++xi) {
        if (!x.test(xi)) continue;
        for (std::size_t yi = 0; yi < k; ++yi)
          if (y.test(yi)) out.set(xi * k + yi);
      }
    }
  }
  return Relation(*this, out);
}

Relation Calculus::compose(const Relation& r1, const Relation& r2) const {
  if (&r1.calculus() != this || &r2.calculus() != this)
    throw std::invalid_argument("weak_compose: calculus mismatch");
  if (r1.empty() || r2.empty()) return empty();
  if (factor_ != nullptr && factor_->size() <= 16 && factor_->size() * factor_->size() == size())
    return compose_product(r1, r2);
  return compose_table(r1, r2);
}

Relation converse(const Relation& r) { return r.calculus().converse(r); }

Relation weak_compose(const Relation& r1, const Relation& r2) {
  if (!r1.has_calculus() || !r2.has_calculus() || &r1.calculus() != &r2.calculus())
    throw std::invalid_argument("weak_compose: calculus mismatch");
  return r1.calculus().compose(r1, r2);
}

Network::Network(const Calculus& calculus, std::size_t n)
    : calc_(&calculus), n_(n), m_(n * n, calculus.universal()) {
  for (std::size_t i = 0; i < n; ++i) m_[i * n + i] = calculus.identity();
}

void Network::set(std::size_t i, std::size_t j, const Relation& r) {
  if (&r.calculus() != calc_) throw std::invalid_argument("network: foreign relation");
  m_[i * n_ + j] = r;
  m_[j * n_ + i] = calc_->converse(r);
}

bool Network::refine(std::size_t i, std::size_t j, const Relation& r) {
  Relation next = at(i, j) & r;
  if (next == at(i, j)) return false;
  set(i, j, next);
  return true;
}

bool Network::is_basic() const {
  for (const auto& r : m_)
    if (!r.is_basic()) return false;
  return true;
}

bool Network::has_empty() const {
  for (const auto& r : m_)
    if (r.empty()) return true;
  return false;
}

bool Network::refines(const Network& other) const {
  if (n_ != other.n_ || calc_ != other.calc_) return false;
  for (std::size_t k = 0; k < m_.size(); ++k)
    if (!other.m_[k].contains(m_[k])) return false;
  return true;
}

bool Network::converse_consistent() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (at(j, i) != calc_->converse(at(i, j))) return false;
  return true;
}

bool Network::operator==(const Network& other) const {
  return calc_ == other.calc_ && n_ == other.n_ && m_ == other.m_;
}

bool enforce_path_consistency(Network& net) {
  const std::size_t n = net.size();
  if (net.has_empty()) return false;
  const Calculus& c = net.calculus();
  std::vector<char> queued(n * n, 0);
  std::deque<std::pair<std::size_t, std::size_t>> work;
  auto push = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (i == j || queued[i * n + j]) return;
    queued[i * n + j] = 1;
    work.emplace_back(i, j);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) push(i, j);

  while (!work.empty()) {
    auto [i, j] = work.front();
    work.pop_front();
    queued[i * n + j] = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      // (i,j) as the left factor: g_ik <- g_ik & g_ij o g_jk
      if (net.refine(i, k, c.compose(net.at(i, j), net.at(j, k)))) {
        if (net.at(i, k).empty()) return false;
        push(i, k);
      }
      // (i,j) as the right factor: g_kj <- g_kj & g_ki o g_ij
      if (net.refine(k, j, c.compose(net.at(k, i), net.at(i, j)))) {
        if (net.at(k, j).empty()) return false;
        push(k, j);
      }
    }
  }
  return true;
}

bool enforce_path_consistency_naive(Network& net) {
  const std::size_t n = net.size();
  if (net.has_empty()) return false;
  const Calculus& c = net.calculus();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || k == i || k == j) continue;
          if (net.refine(i, j, c.compose(net.at(i, k), net.at(k, j)))) {
            if (net.at(i, j).empty()) return false;
            changed = true;
          }
        }
  }
  return true;
}

}  // namespace qsr
