#include "flc/element_set.hpp"

#include <algorithm>
#include <bit>

namespace flc {

std::size_t ElementSet::count() const {
  std::size_t c = static_cast<std::size_t>(std::popcount(word_));
  for (auto w : overflow_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t ElementSet::first() const {
  if (word_ != 0) return static_cast<std::size_t>(std::countr_zero(word_));
  for (std::size_t w = 0; w < overflow_.size(); ++w) {
    if (overflow_[w] != 0) {
      return 64 + 64 * w + static_cast<std::size_t>(std::countr_zero(overflow_[w]));
    }
  }
  return npos;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if ((word_ & ~other.word_) != 0) return false;
  for (std::size_t w = 0; w < overflow_.size(); ++w) {
    const std::uint64_t o = w < other.overflow_.size() ? other.overflow_[w] : 0;
    if ((overflow_[w] & ~o) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  if ((word_ & other.word_) != 0) return true;
  const std::size_t n = std::min(overflow_.size(), other.overflow_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if ((overflow_[w] & other.overflow_[w]) != 0) return true;
  }
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  word_ |= other.word_;
  if (overflow_.size() < other.overflow_.size()) overflow_.resize(other.overflow_.size(), 0);
  for (std::size_t w = 0; w < other.overflow_.size(); ++w) overflow_[w] |= other.overflow_[w];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  word_ &= other.word_;
  for (std::size_t w = 0; w < overflow_.size(); ++w) {
    overflow_[w] &= w < other.overflow_.size() ? other.overflow_[w] : 0;
  }
  trim();
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  word_ &= ~other.word_;
  const std::size_t n = std::min(overflow_.size(), other.overflow_.size());
  for (std::size_t w = 0; w < n; ++w) overflow_[w] &= ~other.overflow_[w];
  trim();
  return *this;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  // Compare as big unsigned integers, most significant word first.
  const std::size_t n = std::max(a.overflow_.size(), b.overflow_.size());
  for (std::size_t w = n; w-- > 0;) {
    const std::uint64_t x = w < a.overflow_.size() ? a.overflow_[w] : 0;
    const std::uint64_t y = w < b.overflow_.size() ? b.overflow_[w] : 0;
    if (x != y) return x < y;
  }
  return a.word_ < b.word_;
}

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t w = word_; w != 0; w &= w - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
  }
  for (std::size_t i = 0; i < overflow_.size(); ++i) {
    for (std::uint64_t w = overflow_[i]; w != 0; w &= w - 1) {
      out.push_back(64 + 64 * i + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

std::string ElementSet::to_bit_string(std::size_t n) const {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::size_t ElementSet::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(word_);
  for (auto w : overflow_) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
  return h;
}

}  // namespace flc
