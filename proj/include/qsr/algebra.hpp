#pragma once

// Generic finite qualitative-calculus engine: basic-relation universes,
// relation bitsets, converse and table-driven weak composition.

#include <bitset>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsr {

/// Upper bound on the number of basic relations of any registered calculus
/// (the rectangle algebra has 13 x 13).
inline constexpr std::size_t kMaxBasis = 169;

using Bits = std::bitset<kMaxBasis>;

class Calculus;

/// A set of basic relations of one calculus.
class Relation {
 public:
  Relation() = default;
  Relation(const Calculus& calculus, const Bits& bits);

  const Calculus& calculus() const;
  bool has_calculus() const { return calc_ != nullptr; }
  const Bits& bits() const { return bits_; }

  bool empty() const { return bits_.none(); }
  std::size_t count() const { return bits_.count(); }
  bool is_basic() const { return bits_.count() == 1; }
  bool test(std::size_t basic) const { return bits_.test(basic); }
  /// Index of the lowest basic relation; requires a nonempty relation.
  std::size_t first() const;
  std::vector<std::size_t> basics() const;

  /// this ⊇ other
  bool contains(const Relation& other) const;
  bool subset_of(const Relation& other) const { return other.contains(*this); }
  bool intersects(const Relation& other) const;

  Relation operator|(const Relation& other) const;
  Relation operator&(const Relation& other) const;
  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);
  /// Complement within the calculus' basis.
  Relation operator~() const;

  bool operator==(const Relation& other) const;
  bool operator!=(const Relation& other) const { return !(*this == other); }
  bool operator<(const Relation& other) const;

  /// Comma-joined basic tokens in index order; "{}" when empty.
  std::string to_string() const;

 private:
  void require_same(const Relation& other) const;

  const Calculus* calc_ = nullptr;
  Bits bits_;
};

/// Immutable descriptor of a finite calculus. Composition is stored as a
/// dense basis x basis table.
class Calculus {
 public:
  Calculus(std::string name, std::vector<std::string> basic_names,
           std::vector<std::size_t> converse_map, std::vector<Bits> composition_table,
           Bits identity);

  Calculus(const Calculus&) = delete;
  Calculus& operator=(const Calculus&) = delete;

  const std::string& name() const { return name_; }
  std::size_t size() const { return names_.size(); }
  const std::string& basic_name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view token) const;
  std::size_t converse_of(std::size_t basic) const { return converse_.at(basic); }
  const Bits& compose_basic(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }

  Relation empty() const { return Relation(*this, Bits{}); }
  Relation universal() const { return Relation(*this, universe_); }
  Relation basic(std::size_t i) const;
  Relation identity() const { return Relation(*this, identity_); }
  Relation make(const Bits& bits) const;
  Relation make(std::initializer_list<std::size_t> basics) const;

  /// Marks this calculus as the product factor x factor with basic (x, y)
  /// stored at x * factor.size() + y. Weak composition then proceeds
  /// componentwise; the dense table stays available through compose_table().
  void set_product_factor(const Calculus* factor) { factor_ = factor; }
  const Calculus* product_factor() const { return factor_; }

  Relation converse(const Relation& r) const;
  Relation compose(const Relation& r1, const Relation& r2) const;
  /// Table-driven composition without the product shortcut.
  Relation compose_table(const Relation& r1, const Relation& r2) const;

 private:
  Relation compose_product(const Relation& r1, const Relation& r2) const;

  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::size_t> converse_;
  std::vector<Bits> table_;
  Bits identity_;
  Bits universe_;
  const Calculus* factor_ = nullptr;
};

Relation converse(const Relation& r);
/// Throws std::invalid_argument when r1 and r2 belong to different calculi.
Relation weak_compose(const Relation& r1, const Relation& r2);

/// A complete constraint network over one calculus: an n x n relation
/// matrix kept converse-consistent by set().
class Network {
 public:
  Network() = default;
  /// Universal constraints off the diagonal, identity on it.
  Network(const Calculus& calculus, std::size_t n);

  const Calculus& calculus() const { return *calc_; }
  std::size_t size() const { return n_; }
  const Relation& at(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  /// Sets (i, j) and its converse (j, i).
  void set(std::size_t i, std::size_t j, const Relation& r);
  /// Intersects (i, j) and (j, i) with r and its converse; returns true on change.
  bool refine(std::size_t i, std::size_t j, const Relation& r);

  bool is_basic() const;
  bool has_empty() const;
  /// True iff every entry of this is contained in the matching entry of other.
  bool refines(const Network& other) const;
  bool converse_consistent() const;

  bool operator==(const Network& other) const;
  bool operator!=(const Network& other) const { return !(*this == other); }

 private:
  const Calculus* calc_ = nullptr;
  std::size_t n_ = 0;
  std::vector<Relation> m_;
};

/// Path-consistency: fixpoint of g_ik <- g_ik & (g_ij o g_jk) driven by a
/// queue of modified pairs. Returns false (network left partially refined)
/// as soon as a relation empties.
bool enforce_path_consistency(Network& net);

/// Reference triple loop, repeated until stable. Same fixpoint as the queued
/// version; kept for cross-checking.
bool enforce_path_consistency_naive(Network& net);

}  // namespace qsr
