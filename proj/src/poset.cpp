#include "flc/poset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "flc/errors.hpp"

namespace flc {

namespace {

std::vector<Label> default_labels(std::size_t n) {
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i + 1);
  return labels;
}

// Labelled cover list restricted to labels 1..n.
Poset from_label_pairs(std::size_t n, const std::vector<std::pair<Label, Label>>& pairs) {
  std::vector<Cover> covers;
  for (auto [a, b] : pairs) {
    if (a <= n && b <= n) covers.push_back({a - 1, b - 1});
  }
  return Poset(n, std::move(covers));
}

// Induced subposet on `keep`, with its cover relation recomputed from the
// order restricted to the kept elements.
Poset induced(const Poset& p, const ElementSet& keep) {
  std::vector<Label> labels;
  std::vector<Element> old_index;
  for (Element e = 0; e < p.size(); ++e) {
    if (keep.test(e)) {
      labels.push_back(p.label(e));
      old_index.push_back(e);
    }
  }
  std::vector<Cover> relations;
  for (Element a = 0; a < old_index.size(); ++a) {
    for (Element b = 0; b < old_index.size(); ++b) {
      if (a != b && p.leq(old_index[b], old_index[a])) relations.push_back({a, b});
    }
  }
  return Poset::from_relations(std::move(labels), relations);
}

}  // namespace

Poset::Poset(std::size_t n, std::vector<Cover> covers) : Poset(default_labels(n), std::move(covers)) {}

Poset::Poset(std::vector<Label> labels, std::vector<Cover> covers)
    : labels_(std::move(labels)), covers_(std::move(covers)) {
  const std::size_t n = labels_.size();
  {
    std::unordered_set<Label> seen;
    for (auto l : labels_) {
      if (!seen.insert(l).second) throw InvalidArgument("duplicate element label " + std::to_string(l));
    }
  }
  for (const auto& c : covers_) {
    if (c.upper >= n || c.lower >= n) throw InvalidArgument("cover endpoint outside the ground set");
    if (c.upper == c.lower) throw InvalidArgument("cover relation contains a loop");
  }
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end()) {
    throw InvalidArgument("duplicate cover pair");
  }
  build_closure();
  // Transitive reduction: no cover may be implied through another upper cover.
  for (const auto& c : covers_) {
    for (const auto& d : covers_) {
      if (d.upper == c.upper && d.lower != c.lower && leq(c.lower, d.lower)) {
        throw InvalidArgument("cover relation is not transitively reduced: x" +
                              std::to_string(labels_[c.upper]) + " > x" +
                              std::to_string(labels_[c.lower]) + " is implied");
      }
    }
  }
}

void Poset::build_closure() {
  const std::size_t n = labels_.size();
  std::vector<std::vector<Element>> uppers(n);
  std::vector<std::size_t> pending(n, 0);  // uppers not yet closed
  for (const auto& c : covers_) {
    uppers[c.lower].push_back(c.upper);
    ++pending[c.lower];
  }
  std::vector<std::vector<Element>> lowers(n);
  for (const auto& c : covers_) lowers[c.upper].push_back(c.lower);

  up_.assign(n, ElementSet{});
  down_.assign(n, ElementSet{});
  // Kahn's algorithm from the maximal elements downwards.
  std::vector<Element> ready;
  for (Element e = 0; e < n; ++e) {
    if (pending[e] == 0) ready.push_back(e);
  }
  std::vector<Element> order;
  while (!ready.empty()) {
    const Element e = ready.back();
    ready.pop_back();
    order.push_back(e);
    up_[e].set(e);
    for (auto u : uppers[e]) up_[e] |= up_[u];
    for (auto l : lowers[e]) {
      if (--pending[l] == 0) ready.push_back(l);
    }
  }
  if (order.size() != n) throw InvalidArgument("cover relation contains a cycle");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Element e = *it;
    down_[e].set(e);
    for (auto l : lowers[e]) down_[e] |= down_[l];
  }
}

Poset Poset::from_relations(std::vector<Label> labels, std::span<const Cover> relations) {
  const std::size_t n = labels.size();
  std::vector<ElementSet> above(n);  // strict, transitive
  std::vector<std::vector<Element>> direct(n);
  for (const auto& r : relations) {
    if (r.upper >= n || r.lower >= n) throw InvalidArgument("relation endpoint outside the ground set");
    if (r.upper == r.lower) throw InvalidArgument("order relation contains a loop");
    direct[r.lower].push_back(r.upper);
  }
  for (Element e = 0; e < n; ++e) {
    std::vector<Element> stack = direct[e];
    while (!stack.empty()) {
      const Element u = stack.back();
      stack.pop_back();
      if (u == e) throw InvalidArgument("order relation contains a cycle");
      if (above[e].test(u)) continue;
      above[e].set(u);
      for (auto w : direct[u]) stack.push_back(w);
    }
  }
  std::vector<Cover> covers;
  for (Element b = 0; b < n; ++b) {
    for (auto a : above[b].members()) {
      // a covers b iff no c with b < c < a.
      bool is_cover = true;
      for (auto c : above[b].members()) {
        if (c != a && above[c].test(a)) {
          is_cover = false;
          break;
        }
      }
      if (is_cover) covers.push_back({a, b});
    }
  }
  return Poset(std::move(labels), std::move(covers));
}

Element Poset::index_of(Label label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidArgument("unknown element x" + std::to_string(label));
  return static_cast<Element>(it - labels_.begin());
}

bool Poset::contains_label(Label label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::vector<std::pair<Label, Label>> Poset::labeled_covers() const {
  std::vector<std::pair<Label, Label>> out;
  out.reserve(covers_.size());
  for (const auto& c : covers_) out.emplace_back(labels_[c.upper], labels_[c.lower]);
  std::sort(out.begin(), out.end());
  return out;
}

Poset make_fence(std::size_t n) {
  std::vector<std::pair<Label, Label>> pairs;
  for (Label i = 1; 2 * i <= n; ++i) {
    pairs.emplace_back(2 * i, 2 * i - 1);
    pairs.emplace_back(2 * i, 2 * i + 1);
  }
  return from_label_pairs(n, pairs);
}

Poset make_sfence(std::size_t n) {
  std::vector<std::pair<Label, Label>> pairs{{1, 2}, {2, 3}, {4, 2}, {4, 5}};
  for (Label i = 3; 2 * i - 1 <= n; ++i) {
    pairs.emplace_back(2 * i, 2 * i - 1);
    pairs.emplace_back(2 * i, 2 * i + 1);
  }
  return from_label_pairs(n, pairs);
}

Poset dual(const Poset& p) {
  std::vector<Cover> reversed;
  reversed.reserve(p.covers().size());
  for (const auto& c : p.covers()) reversed.push_back({c.lower, c.upper});
  return Poset(std::vector<Label>(p.labels().begin(), p.labels().end()), std::move(reversed));
}

Poset remove_element(const Poset& p, Label x) {
  const Element e = p.index_of(x);
  ElementSet keep;
  for (Element i = 0; i < p.size(); ++i) {
    if (i != e) keep.set(i);
  }
  return induced(p, keep);
}

Poset star_remove(const Poset& p, Label x) {
  const Element e = p.index_of(x);
  ElementSet keep;
  for (Element i = 0; i < p.size(); ++i) {
    if (!p.comparable(i, e)) keep.set(i);
  }
  return induced(p, keep);
}

bool is_filter(const Poset& p, const ElementSet& s) {
  for (const auto& c : p.covers()) {
    if (s.test(c.lower) && !s.test(c.upper)) return false;
  }
  for (auto i : s.members()) {
    if (i >= p.size()) return false;
  }
  return true;
}

namespace {

// Split on an element that is maximal among the undecided ones: a filter
// either contains it (no constraint on the rest) or avoids its whole down-set.
void split_filters(const Poset& p, const ElementSet& undecided, const ElementSet& chosen,
                   std::vector<ElementSet>& out) {
  if (undecided.empty()) {
    out.push_back(chosen);
    return;
  }
  Element pivot = ElementSet::npos;
  for (auto e : undecided.members()) {
    ElementSet strictly_above = p.up_set(e);
    strictly_above.reset(e);
    if (!strictly_above.intersects(undecided)) {
      pivot = e;
      break;
    }
  }
  ElementSet rest = undecided;
  rest.reset(pivot);
  ElementSet with = chosen;
  with.set(pivot);
  split_filters(p, rest, with, out);
  split_filters(p, undecided - p.down_set(pivot), chosen, out);
}

}  // namespace

std::vector<ElementSet> enumerate_filters(const Poset& p, std::size_t max_elements) {
  if (p.size() > max_elements) {
    throw CapacityError("filter enumeration is bounded to " + std::to_string(max_elements) +
                        " elements, poset has " + std::to_string(p.size()));
  }
  ElementSet all;
  for (Element e = 0; e < p.size(); ++e) all.set(e);
  std::vector<ElementSet> out;
  split_filters(p, all, ElementSet{}, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Poset read_poset(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& l) {
    while (std::getline(in, l)) {
      if (l.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw InvalidArgument("poset file is empty");
  long long n = -1;
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> n) || n < 0 || (head >> extra)) {
      throw InvalidArgument("poset file: first line must be a non-negative element count");
    }
  }
  std::vector<Cover> covers;
  while (next_line(line)) {
    std::istringstream row(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(row >> a >> b) || (row >> extra)) {
      throw InvalidArgument("poset file: malformed cover line '" + line + "'");
    }
    if (a < 1 || b < 1 || a > n || b > n) {
      throw InvalidArgument("poset file: element index out of range in '" + line + "'");
    }
    covers.push_back({static_cast<Element>(a - 1), static_cast<Element>(b - 1)});
  }
  return Poset(static_cast<std::size_t>(n), std::move(covers));
}

void write_poset(std::ostream& out, const Poset& p) {
  out << p.size() << '\n';
  for (const auto& c : p.covers()) out << (c.upper + 1) << ' ' << (c.lower + 1) << '\n';
}

}  // namespace flc
