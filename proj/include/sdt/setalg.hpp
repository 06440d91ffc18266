#pragma once

#include <vector>

#include "sdt/group.hpp"
#include "sdt/rational.hpp"

namespace sdt {

/// {a*b : a in A, b in B}; empty iff either input is empty.
Subset product_set(const GroupTable& g, const Subset& a, const Subset& b);
Subset inverse_set(const GroupTable& g, const Subset& a);
/// x*A
Subset left_translate(const GroupTable& g, Element x, const Subset& a);
/// A*x
Subset right_translate(const GroupTable& g, const Subset& a, Element x);

/// {h : T*h = T}; T must be nonempty.
Subset right_stabilizer(const GroupTable& g, const Subset& t);
/// {h : h*T = T}
Subset left_stabilizer(const GroupTable& g, const Subset& t);

/// Left translates x*B of one fixed set B for every x, so that A*B is an OR
/// of |A| precomputed rows.
class LeftTranslates {
 public:
  LeftTranslates(const GroupTable& g, const Subset& b);

  const Subset& of(Element x) const { return rows_[x]; }
  const Subset& base() const { return base_; }
  Subset product_with(const Subset& a) const;

 private:
  Subset base_;
  std::vector<Subset> rows_;
};

struct DoublingReport {
  Subset product;     // A*A
  Rational ratio;     // |A*A| / |A|
  Rational epsilon;   // 2 - ratio; may be <= 0
};

DoublingReport doubling_ratio(const GroupTable& g, const Subset& a);

enum class Side { left, right };
const char* side_name(Side s);

/// Distinct cosets of a subgroup meeting a target set. Representatives are
/// the minimum-index members of those cosets, ascending.
struct CoverCertificate {
  Subset subgroup;
  Side side = Side::right;
  std::vector<Element> representatives;
  Subset covered;

  std::size_t size() const { return representatives.size(); }
};

/// Side::left uses cosets x*H, Side::right uses H*x.
CoverCertificate coset_cover(const GroupTable& g, const Subset& h, const Subset& t, Side side);

/// The coset of H on `side` through x.
Subset coset(const GroupTable& g, const Subset& h, Element x, Side side);

}  // namespace sdt
