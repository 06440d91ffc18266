#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdt/subset.hpp"

namespace sdt {

inline constexpr std::size_t kDefaultMaxOrder = 64;

struct GroupLimits {
  std::size_t max_order = kDefaultMaxOrder;
};

/// Unvalidated multiplication table as supplied by a user or a file.
struct RawTable {
  std::vector<std::vector<long long>> mul;
  std::vector<std::string> labels;  // empty means numeric defaults
};

/// First witness of each violated group axiom; ok() when none.
struct ValidationReport {
  std::size_t order = 0;
  std::optional<std::string> shape_error;
  std::optional<std::pair<std::size_t, std::size_t>> closure_witness;
  bool identity_found = false;
  std::size_t identity = 0;
  std::optional<Element> inverse_witness;
  std::optional<std::array<Element, 3>> associativity_witness;
  std::optional<std::string> label_witness;

  bool ok() const {
    return !shape_error && !closure_witness && identity_found && !inverse_witness &&
           !associativity_witness && !label_witness;
  }
  std::string describe() const;
};

ValidationReport validate(const RawTable& raw, bool check_associativity = true);

/// A finite group given by its Cayley table. Immutable once built.
class GroupTable {
 public:
  /// Validates (including O(n^3) associativity) before accepting.
  static GroupTable from_table(const RawTable& raw, GroupLimits limits = {});

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  /// Row a of the table: a*x for x = 0..n-1.
  std::span<const Element> row(Element a) const noexcept { return {mul_.data() + a * n_, n_}; }

  bool is_abelian() const noexcept { return abelian_; }
  const std::string& label(Element a) const { return labels_[a]; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<Element> find_label(std::string_view label) const;
  const std::string& name() const noexcept { return name_; }

  Subset empty_set() const { return Subset(n_); }
  Subset all() const { return Subset::full(n_); }
  Subset identity_set() const { return Subset::singleton(n_, identity_); }
  Subset set(std::initializer_list<Element> elements) const { return Subset(n_, elements); }

  /// Trusted constructor for presets: the table is a group by construction.
  static GroupTable from_trusted(std::size_t n, std::vector<Element> mul,
                                 std::vector<std::string> labels, std::string name);

 private:
  GroupTable() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  Element identity_ = 0;
  bool abelian_ = true;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Throws SizeLimitExceeded when `order` exceeds the cap.
void require_order(std::size_t order, const GroupLimits& limits, std::string_view what);

GroupTable cyclic(std::size_t n, GroupLimits limits = {});
/// Symmetries of the n-gon, order 2n: r^k at index k, s r^k at index n + k.
GroupTable dihedral(std::size_t n, GroupLimits limits = {});
/// Permutations of {1..n} in lexicographic order, identity first;
/// (p*q)(i) = p(q(i)). Labels in cycle notation.
GroupTable symmetric(std::size_t n, GroupLimits limits = {});
/// Dicyclic group of order 4n: <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>.
/// n = 2 is the quaternion group Q8.
GroupTable quaternion(std::size_t n = 2, GroupLimits limits = {});
/// Mixed-radix product, first factor most significant.
GroupTable direct_product(std::span<const GroupTable> factors, GroupLimits limits = {});

bool is_associative(const GroupTable& g);

}  // namespace sdt
