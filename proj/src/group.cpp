#include "sdt/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sdt/error.hpp"

namespace sdt {

std::string ValidationReport::describe() const {
  if (ok()) return "valid group of order " + std::to_string(order);
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += "; ";
    out += s;
  };
  if (shape_error) add(*shape_error);
  if (closure_witness) {
    add("closure violated at (" + std::to_string(closure_witness->first) + "," +
        std::to_string(closure_witness->second) + ")");
  }
  if (!identity_found && !shape_error && !closure_witness) add("no two-sided identity");
  if (inverse_witness) add("element " + std::to_string(*inverse_witness) + " has no inverse");
  if (associativity_witness) {
    const auto& w = *associativity_witness;
    add("associativity fails for (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
        std::to_string(w[2]) + ")");
  }
  if (label_witness) add("duplicate label '" + *label_witness + "'");
  return out;
}

ValidationReport validate(const RawTable& raw, bool check_associativity) {
  ValidationReport rep;
  const std::size_t n = raw.mul.size();
  rep.order = n;
  if (n == 0) {
    rep.shape_error = "empty table";
    return rep;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (raw.mul[a].size() != n) {
      rep.shape_error = "row " + std::to_string(a) + " has " + std::to_string(raw.mul[a].size()) +
                        " entries, expected " + std::to_string(n);
      return rep;
    }
  }
  if (!raw.labels.empty()) {
    if (raw.labels.size() != n) {
      rep.shape_error = "expected " + std::to_string(n) + " labels";
    } else {
      std::set<std::string> seen;
      for (const auto& l : raw.labels) {
        if (!seen.insert(l).second) {
          rep.label_witness = l;
          break;
        }
      }
    }
  }
  for (std::size_t a = 0; a < n && !rep.closure_witness; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      long long v = raw.mul[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        rep.closure_witness = {a, b};
        break;
      }
    }
  }
  if (rep.closure_witness) return rep;

  auto m = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(raw.mul[a][b]); };
  for (std::size_t e = 0; e < n && !rep.identity_found; ++e) {
    bool two_sided = true;
    for (std::size_t a = 0; a < n && two_sided; ++a) two_sided = m(e, a) == a && m(a, e) == a;
    if (two_sided) {
      rep.identity_found = true;
      rep.identity = e;
    }
  }
  if (rep.identity_found) {
    for (std::size_t a = 0; a < n && !rep.inverse_witness; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n && !found; ++b) found = m(a, b) == rep.identity && m(b, a) == rep.identity;
      if (!found) rep.inverse_witness = a;
    }
  }
  if (check_associativity) {
    for (std::size_t a = 0; a < n && !rep.associativity_witness; ++a) {
      for (std::size_t b = 0; b < n && !rep.associativity_witness; ++b) {
        std::size_t ab = m(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (m(ab, c) != m(a, m(b, c))) {
            rep.associativity_witness = std::array<Element, 3>{a, b, c};
            break;
          }
        }
      }
    }
  }
  return rep;
}

void require_order(std::size_t order, const GroupLimits& limits, std::string_view what) {
  if (order > limits.max_order) {
    throw Error(ErrorCode::SizeLimitExceeded, std::string(what) + " has order " + std::to_string(order) +
                                                  ", above the cap " + std::to_string(limits.max_order));
  }
}

GroupTable GroupTable::from_table(const RawTable& raw, GroupLimits limits) {
  require_order(raw.mul.size(), limits, "table");
  ValidationReport rep = validate(raw, true);
  if (!rep.ok()) throw Error(ErrorCode::InvalidTable, rep.describe());
  const std::size_t n = raw.mul.size();
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>(raw.mul[a][b]);
  }
  std::vector<std::string> labels = raw.labels;
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  return from_trusted(n, std::move(mul), std::move(labels), "table:" + std::to_string(n));
}

GroupTable GroupTable::from_trusted(std::size_t n, std::vector<Element> mul,
                                    std::vector<std::string> labels, std::string name) {
  GroupTable g;
  g.n_ = n;
  g.mul_ = std::move(mul);
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  g.finish();
  return g;
}

void GroupTable::finish() {
  identity_ = n_;
  for (Element e = 0; e < n_ && identity_ == n_; ++e) {
    bool ok = true;
    for (Element a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ == n_) throw Error(ErrorCode::InvalidTable, "no identity in table " + name_);
  inv_.assign(n_, n_);
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] == n_) throw Error(ErrorCode::InvalidTable, "element without inverse in " + name_);
  }
  abelian_ = true;
  for (Element a = 0; a < n_ && abelian_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
    }
  }
}

std::optional<Element> GroupTable::find_label(std::string_view label) const {
  for (Element i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

bool is_associative(const GroupTable& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

GroupTable cyclic(std::size_t n, GroupLimits limits) {
  if (n < 1) throw Error(ErrorCode::InvalidTable, "cyclic group needs n >= 1");
  require_order(n, limits, "cyclic:" + std::to_string(n));
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  }
  return GroupTable::from_trusted(n, std::move(mul), std::move(labels), "cyclic:" + std::to_string(n));
}

GroupTable dihedral(std::size_t n, GroupLimits limits) {
  if (n < 1) throw Error(ErrorCode::InvalidTable, "dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  require_order(order, limits, "dihedral:" + std::to_string(n));
  std::vector<Element> mul(order * order);
  std::vector<std::string> labels(order);
  auto power = [](const char* base, std::size_t k) -> std::string {
    if (k == 0) return "";
    return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
  };
  for (std::size_t k = 0; k < n; ++k) {
    labels[k] = k == 0 ? "e" : power("r", k);
    labels[n + k] = "s" + power("r", k);
  }
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t a = x % n, b = y % n;
      bool xs = x >= n, ys = y >= n;
      // r^a r^b = r^(a+b); r^a s r^b = s r^(b-a); s r^a r^b = s r^(a+b); s r^a s r^b = r^(b-a)
      Element r;
      if (!xs && !ys) r = (a + b) % n;
      else if (!xs && ys) r = n + (b + n - a) % n;
      else if (xs && !ys) r = n + (a + b) % n;
      else r = (b + n - a) % n;
      mul[x * order + y] = r;
    }
  }
  return GroupTable::from_trusted(order, std::move(mul), std::move(labels), "dihedral:" + std::to_string(n));
}

namespace {

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

GroupTable symmetric(std::size_t n, GroupLimits limits) {
  if (n < 1 || n > 6) throw Error(ErrorCode::InvalidTable, "symmetric group preset supports 1 <= n <= 6");
  std::size_t order = 1;
  for (std::size_t i = 2; i <= n; ++i) order *= i;
  require_order(order, limits, "symmetric:" + std::to_string(n));
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Element> mul(order * order);
  std::vector<std::size_t> composed(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      mul[a * order + b] = index_of(composed);
    }
  }
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_notation(q));
  return GroupTable::from_trusted(order, std::move(mul), std::move(labels), "symmetric:" + std::to_string(n));
}

GroupTable quaternion(std::size_t n, GroupLimits limits) {
  if (n < 1) throw Error(ErrorCode::InvalidTable, "dicyclic group needs n >= 1");
  const std::size_t m = 2 * n;  // order of a
  const std::size_t order = 2 * m;
  require_order(order, limits, "quaternion:" + std::to_string(n));
  // index k + m*j  <->  a^k x^j
  std::vector<Element> mul(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t k = x % m, l = y % m;
      bool xj = x >= m, yj = y >= m;
      Element r;
      if (!xj && !yj) r = (k + l) % m;
      else if (!xj && yj) r = m + (k + l) % m;
      else if (xj && !yj) r = m + (k + m - l) % m;
      else r = (k + m - l + n) % m;
      mul[x * order + y] = r;
    }
  }
  std::vector<std::string> labels(order);
  for (std::size_t k = 0; k < m; ++k) {
    std::string ak = k == 0 ? "" : (k == 1 ? "a" : "a^" + std::to_string(k));
    labels[k] = k == 0 ? "1" : ak;
    labels[m + k] = ak + "x";
  }
  return GroupTable::from_trusted(order, std::move(mul), std::move(labels), "quaternion:" + std::to_string(n));
}

GroupTable direct_product(std::span<const GroupTable> factors, GroupLimits limits) {
  if (factors.empty()) throw Error(ErrorCode::InvalidTable, "direct product needs at least one factor");
  std::size_t order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    require_order(order, limits, "direct product");
  }
  std::vector<std::size_t> radix;
  for (const auto& f : factors) radix.push_back(f.order());
  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> digits(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      digits[i] = idx % radix[i];
      idx /= radix[i];
    }
    return digits;
  };
  std::vector<std::vector<std::size_t>> decoded(order);
  for (std::size_t i = 0; i < order; ++i) decoded[i] = decode(i);

  std::vector<Element> mul(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        idx = idx * radix[i] + factors[i].mul(decoded[x][i], decoded[y][i]);
      }
      mul[x * order + y] = idx;
    }
  }
  std::vector<std::string> labels(order);
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "x" : "") + factors[i].name();
  for (std::size_t x = 0; x < order; ++x) {
    std::string l = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) l += (i ? ";" : "") + factors[i].label(decoded[x][i]);
    labels[x] = l + ")";
  }
  return GroupTable::from_trusted(order, std::move(mul), std::move(labels), name);
}

}  // namespace sdt
