#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "flc/element_set.hpp"

namespace flc {

/// Ground-set element, 0-based position inside one Poset.
using Element = std::size_t;

/// External name of an element: the i in x_i. Survives element removal.
using Label = std::uint32_t;

/// `upper` covers `lower` (upper > lower with nothing strictly between).
struct Cover {
  Element upper;
  Element lower;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// Finite poset stored as its cover relation. Instances are immutable; the
/// constructor rejects cyclic or non-reduced relations.
class Poset {
 public:
  Poset() = default;

  /// Elements get labels 1..n.
  Poset(std::size_t n, std::vector<Cover> covers);
  Poset(std::vector<Label> labels, std::vector<Cover> covers);

  /// Builds the poset generated by arbitrary order pairs (upper > lower),
  /// reducing them to covers first.
  static Poset from_relations(std::vector<Label> labels, std::span<const Cover> relations);

  std::size_t size() const { return labels_.size(); }
  std::span<const Label> labels() const { return labels_; }
  std::span<const Cover> covers() const { return covers_; }

  Label label(Element e) const { return labels_.at(e); }
  /// Throws InvalidArgument for an unknown label.
  Element index_of(Label label) const;
  bool contains_label(Label label) const;

  /// a <= b.
  bool leq(Element a, Element b) const { return up_.at(a).test(b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  /// Elements >= e (e included).
  const ElementSet& up_set(Element e) const { return up_.at(e); }
  /// Elements <= e (e included).
  const ElementSet& down_set(Element e) const { return down_.at(e); }

  /// Cover pairs written with labels, sorted.
  std::vector<std::pair<Label, Label>> labeled_covers() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.covers_ == b.covers_;
  }

 private:
  void build_closure();

  std::vector<Label> labels_;
  std::vector<Cover> covers_;  // sorted
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Zigzag fence Z_n: x_{2i} covers x_{2i-1} and x_{2i+1}.
Poset make_fence(std::size_t n);

/// S-fence: x1 > x2 > x3, x4 > x2, x4 > x5, then fence covers from x6 on.
/// For n < 5 the cover list is restricted to pairs with both indices <= n.
Poset make_sfence(std::size_t n);

/// Order dual: every cover pair reversed.
Poset dual(const Poset& p);

/// Induced subposet on P minus the element labelled `x`.
Poset remove_element(const Poset& p, Label x);

/// Induced subposet on the elements incomparable to the element labelled `x`.
Poset star_remove(const Poset& p, Label x);

/// Upward closure check of an arbitrary subset.
bool is_filter(const Poset& p, const ElementSet& s);

inline constexpr std::size_t kDefaultFilterElementBound = 32;

/// All filters of p, each once, in canonical order (cardinality, then bits).
/// Throws CapacityError when p has more than `max_elements` elements.
std::vector<ElementSet> enumerate_filters(const Poset& p,
                                          std::size_t max_elements = kDefaultFilterElementBound);

/// Poset text format: first line n, then one "a b" line per cover x_a > x_b.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);

}  // namespace flc
