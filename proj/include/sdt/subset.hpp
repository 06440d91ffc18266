#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace sdt {

using Element = std::size_t;

/// Bitset over the element indices 0..order-1 of one group. Groups of order
/// at most 64 fit in a single inline word.
class Subset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Subset() = default;
  explicit Subset(std::size_t order);
  Subset(std::size_t order, std::initializer_list<Element> elements);

  static Subset from_elements(std::size_t order, std::span<const Element> elements);
  static Subset full(std::size_t order);
  static Subset singleton(std::size_t order, Element e);
  /// Bits of `mask`, which must only touch positions below `order`.
  static Subset from_mask(std::size_t order, Word mask);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return card_; }
  bool empty() const noexcept { return card_ == 0; }

  bool contains(Element e) const noexcept {
    return e < order_ && ((words_[e / kWordBits] >> (e % kWordBits)) & 1u);
  }
  void insert(Element e);
  void erase(Element e);

  std::vector<Element> elements() const;
  /// Smallest element; requires a nonempty set.
  Element front() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(static_cast<Element>(w * kWordBits + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  /// OR a raw word span of the same length into this set.
  void or_words(std::span<const Word> words);

  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }
  std::size_t hash() const noexcept;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.order_ == b.order_ && a.words_ == b.words_;
  }

 private:
  void check_same_order(const Subset& other) const;
  void recount() noexcept;

  std::size_t order_ = 0;
  std::size_t card_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

/// Bit-lexicographic order: at the smallest element where the sets differ,
/// the set containing it sorts first. Equivalent to lexicographic order of
/// the ascending element lists for sets of equal size.
bool bitlex_less(const Subset& a, const Subset& b);

/// (cardinality, bit-lexicographic) order used for every sorted listing.
bool canonical_less(const Subset& a, const Subset& b);

/// "{0,2,5}"
std::string to_string(const Subset& s);

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace sdt
