#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace flc {

// Subset of a poset's ground set {0, ..., n-1}. Elements below 64 live in a
// single machine word; larger indices spill into an overflow vector.
class ElementSet {
 public:
  ElementSet() = default;

  static ElementSet from_word(std::uint64_t word) {
    ElementSet s;
    s.word_ = word;
    return s;
  }

  bool test(std::size_t i) const {
    if (i < 64) return (word_ >> i) & 1U;
    const std::size_t w = (i - 64) / 64;
    return w < overflow_.size() && ((overflow_[w] >> ((i - 64) % 64)) & 1U);
  }

  void set(std::size_t i) {
    if (i < 64) {
      word_ |= std::uint64_t{1} << i;
      return;
    }
    const std::size_t w = (i - 64) / 64;
    if (w >= overflow_.size()) overflow_.resize(w + 1, 0);
    overflow_[w] |= std::uint64_t{1} << ((i - 64) % 64);
  }

  void reset(std::size_t i) {
    if (i < 64) {
      word_ &= ~(std::uint64_t{1} << i);
      return;
    }
    const std::size_t w = (i - 64) / 64;
    if (w < overflow_.size()) {
      overflow_[w] &= ~(std::uint64_t{1} << ((i - 64) % 64));
      trim();
    }
  }

  std::size_t count() const;
  bool empty() const { return word_ == 0 && overflow_.empty(); }

  /// Lowest set index, or npos when empty.
  std::size_t first() const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  /// Set difference.
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical order: cardinality first, then the bit representation read as
  /// an unsigned integer.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b);

  std::vector<std::size_t> members() const;

  /// Character i is '1' when element i is present; width n.
  std::string to_bit_string(std::size_t n) const;

  std::size_t hash() const;

  std::uint64_t low_word() const { return word_; }
  bool fits_in_word() const { return overflow_.empty(); }

 private:
  void trim() {
    while (!overflow_.empty() && overflow_.back() == 0) overflow_.pop_back();
  }

  std::uint64_t word_ = 0;
  std::vector<std::uint64_t> overflow_;
};

bool canonical_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace flc
