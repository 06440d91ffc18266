#include "sdt/convolution.hpp"

#include <algorithm>

#include "sdt/error.hpp"
#include "sdt/setalg.hpp"

namespace sdt {

namespace {

void check_order(const GroupTable& g, std::size_t order) {
  if (order != g.order()) {
    throw Error(ErrorCode::GroupMismatch, "function on order-" + std::to_string(order) + " group used with " + g.name());
  }
}

}  // namespace

GroupFunction::GroupFunction(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& v : values_) mass_ += v;
}

GroupFunction GroupFunction::zero(std::size_t order) { return GroupFunction(std::vector<Rational>(order)); }

GroupFunction GroupFunction::constant(std::size_t order, const Rational& c) {
  return GroupFunction(std::vector<Rational>(order, c));
}

GroupFunction GroupFunction::indicator(const Subset& s) {
  std::vector<Rational> v(s.order());
  s.for_each([&](Element x) { v[x] = 1; });
  return GroupFunction(std::move(v));
}

GroupFunction GroupFunction::normalized_indicator(const Subset& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "normalized indicator of the empty set");
  const Rational w = Rational(1) / Rational(static_cast<std::int64_t>(s.size()));
  std::vector<Rational> v(s.order());
  s.for_each([&](Element x) { v[x] = w; });
  return GroupFunction(std::move(v));
}

Subset GroupFunction::support() const {
  Subset s(order());
  for (Element x = 0; x < order(); ++x)
    if (values_[x] != Rational(0)) s.insert(x);
  return s;
}

GroupFunction convolve(const GroupTable& g, const GroupFunction& u, const GroupFunction& v) {
  check_order(g, u.order());
  check_order(g, v.order());
  const std::size_t n = g.order();
  std::vector<Rational> out(n);
  for (Element y = 0; y < n; ++y) {
    if (u[y] == Rational(0)) continue;
    // y^-1 x = z  <=>  x = y z
    auto row = g.row(y);
    for (Element z = 0; z < n; ++z) {
      if (v[z] == Rational(0)) continue;
      out[row[z]] += u[y] * v[z];
    }
  }
  return GroupFunction(std::move(out));
}

GroupFunction autocorrelation(const GroupTable& g, const Subset& a) {
  check_order(g, a.order());
  if (a.empty()) throw Error(ErrorCode::EmptySet, "autocorrelation of the empty set");
  const Rational size = Rational(static_cast<std::int64_t>(a.size()));
  std::vector<Rational> out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t overlap = (a & left_translate(g, x, a)).size();
    out[x] = Rational(static_cast<std::int64_t>(overlap)) / size;
  }
  return GroupFunction(std::move(out));
}

GapReport gap_check(const GroupTable& g, const Subset& a) {
  GapReport rep;
  rep.A = a;
  rep.f = autocorrelation(g, a);
  const Subset a_inv = inverse_set(g, a);
  rep.inverse_product = product_set(g, a_inv, a);
  rep.support = product_set(g, a, a_inv);
  rep.epsilon_star = Rational(2) - Rational(static_cast<std::int64_t>(rep.inverse_product.size())) /
                                       Rational(static_cast<std::int64_t>(a.size()));
  rep.hypothesis_vacuous = rep.epsilon_star <= Rational(0);
  bool first = true;
  rep.support.for_each([&](Element x) {
    if (first || rep.f[x] < rep.min_on_support) rep.min_on_support = rep.f[x];
    first = false;
  });
  rep.gap_holds = rep.min_on_support >= rep.epsilon_star;
  rep.forbidden_interval_clean = std::none_of(rep.f.values().begin(), rep.f.values().end(), [&](const Rational& v) {
    return v > Rational(0) && v < rep.epsilon_star;
  });
  return rep;
}

GroupFunction smoothed(const GroupTable& g, const Subset& s, const GroupFunction& f) {
  check_order(g, s.order());
  check_order(g, f.order());
  const GroupFunction u = GroupFunction::normalized_indicator(s);
  return convolve(g, u, convolve(g, u, f));
}

Subset level_set(const GroupTable& g, const GroupFunction& f, const Rational& threshold) {
  check_order(g, f.order());
  Subset out = g.empty_set();
  for (Element x = 0; x < g.order(); ++x)
    if (f[x] > threshold) out.insert(x);
  return out;
}

}  // namespace sdt
