#include "sdt/subset.hpp"

#include "sdt/error.hpp"

namespace sdt {

namespace {

std::size_t word_count(std::size_t order) { return (order + Subset::kWordBits - 1) / Subset::kWordBits; }

}  // namespace

Subset::Subset(std::size_t order) : order_(order), words_(std::max<std::size_t>(1, word_count(order)), 0) {}

Subset::Subset(std::size_t order, std::initializer_list<Element> elements) : Subset(order) {
  for (Element e : elements) insert(e);
}

Subset Subset::from_elements(std::size_t order, std::span<const Element> elements) {
  Subset s(order);
  for (Element e : elements) s.insert(e);
  return s;
}

Subset Subset::full(std::size_t order) {
  Subset s(order);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    std::size_t lo = w * kWordBits;
    std::size_t bits = std::min(kWordBits, order - std::min(order, lo));
    s.words_[w] = bits == kWordBits ? ~Word{0} : ((Word{1} << bits) - 1);
  }
  s.card_ = order;
  return s;
}

Subset Subset::singleton(std::size_t order, Element e) {
  Subset s(order);
  s.insert(e);
  return s;
}

Subset Subset::from_mask(std::size_t order, Word mask) {
  Subset s(order);
  s.words_[0] = mask;
  s.recount();
  return s;
}

void Subset::insert(Element e) {
  if (e >= order_) {
    throw Error(ErrorCode::GroupMismatch,
                "element " + std::to_string(e) + " outside group of order " + std::to_string(order_));
  }
  Word& w = words_[e / kWordBits];
  Word bit = Word{1} << (e % kWordBits);
  if (!(w & bit)) {
    w |= bit;
    ++card_;
  }
}

void Subset::erase(Element e) {
  if (e >= order_) return;
  Word& w = words_[e / kWordBits];
  Word bit = Word{1} << (e % kWordBits);
  if (w & bit) {
    w &= ~bit;
    --card_;
  }
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(card_);
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

Element Subset::front() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return w * kWordBits + std::countr_zero(words_[w]);
  }
  throw Error(ErrorCode::EmptySet, "front() of empty subset");
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool Subset::intersects(const Subset& other) const {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  recount();
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  recount();
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  check_same_order(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  recount();
  return *this;
}

void Subset::or_words(std::span<const Word> words) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= words[w];
  recount();
}

std::size_t Subset::hash() const noexcept {
  std::size_t h = order_ * 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void Subset::check_same_order(const Subset& other) const {
  if (order_ != other.order_) {
    throw Error(ErrorCode::GroupMismatch, "subsets of groups of order " + std::to_string(order_) +
                                              " and " + std::to_string(other.order_));
  }
}

void Subset::recount() noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += std::popcount(w);
  card_ = c;
}

bool bitlex_less(const Subset& a, const Subset& b) {
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t w = 0; w < std::min(wa.size(), wb.size()); ++w) {
    Subset::Word diff = wa[w] ^ wb[w];
    if (diff) {
      Subset::Word lowest = diff & (~diff + 1);
      return (wa[w] & lowest) != 0;
    }
  }
  return false;
}

bool canonical_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return bitlex_less(a, b);
}

std::string to_string(const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

}  // namespace sdt
