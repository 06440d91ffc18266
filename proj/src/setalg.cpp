#include "sdt/setalg.hpp"

#include <algorithm>

#include "sdt/error.hpp"
#include "sdt/subgroup.hpp"

namespace sdt {

namespace {

void check_order(const GroupTable& g, const Subset& s) {
  if (s.order() != g.order()) {
    throw Error(ErrorCode::GroupMismatch, "subset of order-" + std::to_string(s.order()) +
                                              " group used with group " + g.name());
  }
}

void require_nonempty(const Subset& s, const char* what) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, std::string(what) + " requires a nonempty set");
}

}  // namespace

Subset product_set(const GroupTable& g, const Subset& a, const Subset& b) {
  check_order(g, a);
  check_order(g, b);
  Subset out = g.empty_set();
  auto bs = b.elements();
  a.for_each([&](Element x) {
    auto row = g.row(x);
    for (Element y : bs) out.insert(row[y]);
  });
  return out;
}

Subset inverse_set(const GroupTable& g, const Subset& a) {
  check_order(g, a);
  Subset out = g.empty_set();
  a.for_each([&](Element x) { out.insert(g.inv(x)); });
  return out;
}

Subset left_translate(const GroupTable& g, Element x, const Subset& a) {
  check_order(g, a);
  Subset out = g.empty_set();
  a.for_each([&](Element y) { out.insert(g.mul(x, y)); });
  return out;
}

Subset right_translate(const GroupTable& g, const Subset& a, Element x) {
  check_order(g, a);
  Subset out = g.empty_set();
  a.for_each([&](Element y) { out.insert(g.mul(y, x)); });
  return out;
}

Subset right_stabilizer(const GroupTable& g, const Subset& t) {
  check_order(g, t);
  require_nonempty(t, "right_stabilizer");
  auto elems = t.elements();
  Subset out = g.empty_set();
  for (Element h = 0; h < g.order(); ++h) {
    bool fixes = true;
    for (Element x : elems) {
      if (!t.contains(g.mul(x, h))) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.insert(h);
  }
  return out;
}

Subset left_stabilizer(const GroupTable& g, const Subset& t) {
  check_order(g, t);
  require_nonempty(t, "left_stabilizer");
  auto elems = t.elements();
  Subset out = g.empty_set();
  for (Element h = 0; h < g.order(); ++h) {
    auto row = g.row(h);
    bool fixes = true;
    for (Element x : elems) {
      if (!t.contains(row[x])) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.insert(h);
  }
  return out;
}

LeftTranslates::LeftTranslates(const GroupTable& g, const Subset& b) : base_(b) {
  check_order(g, b);
  rows_.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) rows_.push_back(left_translate(g, x, b));
}

Subset LeftTranslates::product_with(const Subset& a) const {
  Subset out(base_.order());
  a.for_each([&](Element x) { out.or_words(rows_[x].words()); });
  return out;
}

DoublingReport doubling_ratio(const GroupTable& g, const Subset& a) {
  require_nonempty(a, "doubling_ratio");
  DoublingReport rep;
  rep.product = product_set(g, a, a);
  rep.ratio = Rational(static_cast<std::int64_t>(rep.product.size())) /
              Rational(static_cast<std::int64_t>(a.size()));
  rep.epsilon = Rational(2) - rep.ratio;
  return rep;
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

Subset coset(const GroupTable& g, const Subset& h, Element x, Side side) {
  return side == Side::left ? left_coset(g, h, x) : right_coset(g, h, x);
}

CoverCertificate coset_cover(const GroupTable& g, const Subset& h, const Subset& t, Side side) {
  check_order(g, h);
  check_order(g, t);
  require_nonempty(t, "coset_cover");
  if (!is_subgroup(g, h)) throw Error(ErrorCode::NotASubgroup, to_string(h) + " is not a subgroup");
  CoverCertificate cert;
  cert.subgroup = h;
  cert.side = side;
  cert.covered = t;
  Subset done = g.empty_set();
  t.for_each([&](Element x) {
    if (done.contains(x)) return;
    Subset c = coset(g, h, x, side);
    done |= c;
    cert.representatives.push_back(c.front());
  });
  std::sort(cert.representatives.begin(), cert.representatives.end());
  return cert;
}

}  // namespace sdt
