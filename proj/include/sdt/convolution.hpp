#pragma once

#include <vector>

#include "sdt/group.hpp"
#include "sdt/rational.hpp"

namespace sdt {

/// Exact rational-valued function on the elements of a group.
class GroupFunction {
 public:
  GroupFunction() = default;
  explicit GroupFunction(std::vector<Rational> values);

  static GroupFunction zero(std::size_t order);
  static GroupFunction constant(std::size_t order, const Rational& c);
  static GroupFunction indicator(const Subset& s);
  /// 1_S / |S|
  static GroupFunction normalized_indicator(const Subset& s);

  std::size_t order() const noexcept { return values_.size(); }
  const Rational& operator[](Element x) const { return values_[x]; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& mass() const noexcept { return mass_; }
  Subset support() const;

  friend bool operator==(const GroupFunction& a, const GroupFunction& b) { return a.values_ == b.values_; }

 private:
  std::vector<Rational> values_;
  Rational mass_;
};

/// (u * v)(x) = sum_y u(y) v(y^-1 x)
GroupFunction convolve(const GroupTable& g, const GroupFunction& u, const GroupFunction& v);

/// f(x) = |A n xA| / |A|
GroupFunction autocorrelation(const GroupTable& g, const Subset& a);

struct GapReport {
  Subset A;
  Subset inverse_product;    // A^-1 * A, enters the hypothesis
  Rational epsilon_star;     // 2 - |A^-1 A| / |A|
  bool hypothesis_vacuous = false;  // epsilon_star <= 0
  Subset support;            // A * A^-1
  GroupFunction f;
  Rational min_on_support;
  bool gap_holds = false;
  bool forbidden_interval_clean = false;
};

GapReport gap_check(const GroupTable& g, const Subset& a);

/// (1_S/|S|) * (1_S/|S|) * f
GroupFunction smoothed(const GroupTable& g, const Subset& s, const GroupFunction& f);

/// {x : F(x) > threshold}
Subset level_set(const GroupTable& g, const GroupFunction& f, const Rational& threshold);

}  // namespace sdt
