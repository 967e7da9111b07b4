#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "flc/errors.hpp"
#include "flc/formulas.hpp"
#include "flc/poset.hpp"

using namespace flc;

namespace {

using Pairs = std::vector<std::pair<Label, Label>>;

// Every subset of the ground set that passes is_filter, by 2^n scan.
std::vector<ElementSet> filters_by_subset_scan(const Poset& p) {
  std::vector<ElementSet> out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << p.size()); ++w) {
    const auto s = ElementSet::from_word(w);
    if (is_filter(p, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Poset random_poset(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Cover> rel;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (coin(rng)) rel.push_back({a, b});
    }
  }
  std::vector<Label> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(static_cast<Label>(i));
  return Poset::from_relations(labels, rel);
}

// No cover is implied by a longer chain of covers.
bool is_reduced(const Poset& p) {
  for (const auto& c : p.covers()) {
    for (Element m = 0; m < p.size(); ++m) {
      if (m != c.upper && m != c.lower && p.leq(c.lower, m) && p.leq(m, c.upper)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("element sets") {
  ElementSet s;
  CHECK(s.empty());
  CHECK(s.first() == ElementSet::npos);
  s.set(3);
  s.set(70);
  CHECK(s.count() == 2);
  CHECK(s.test(70));
  CHECK_FALSE(s.fits_in_word());
  CHECK(s.first() == 3);
  CHECK(s.members() == std::vector<std::size_t>{3, 70});
  s.reset(70);
  CHECK(s.fits_in_word());
  CHECK(s == ElementSet::from_word(8));
  CHECK(ElementSet::from_word(0b0110).to_bit_string(4) == "0110");

  const auto a = ElementSet::from_word(0b0011);
  const auto b = ElementSet::from_word(0b0110);
  CHECK((a | b) == ElementSet::from_word(0b0111));
  CHECK((a & b) == ElementSet::from_word(0b0010));
  CHECK((a - b) == ElementSet::from_word(0b0001));
  CHECK(a.intersects(b));
  CHECK(ElementSet::from_word(0b0010).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));

  // Cardinality first, then numeric value.
  CHECK(canonical_less(ElementSet::from_word(0b100), ElementSet::from_word(0b011)));
  CHECK(canonical_less(ElementSet::from_word(0b011), ElementSet::from_word(0b101)));
  CHECK_FALSE(canonical_less(a, a));
}

TEST_CASE("fence covers") {
  CHECK(make_fence(0).size() == 0);
  CHECK(make_fence(1).covers().empty());
  CHECK(make_fence(3).labeled_covers() == Pairs{{2, 1}, {2, 3}});
  CHECK(make_fence(4).labeled_covers() == Pairs{{2, 1}, {2, 3}, {4, 3}});
  CHECK(make_fence(5).labeled_covers() == Pairs{{2, 1}, {2, 3}, {4, 3}, {4, 5}});
}

TEST_CASE("S-fence covers follow the restriction rule") {
  CHECK(make_sfence(0).covers().empty());
  CHECK(make_sfence(1).covers().empty());
  CHECK(make_sfence(2).labeled_covers() == Pairs{{1, 2}});
  CHECK(make_sfence(3).labeled_covers() == Pairs{{1, 2}, {2, 3}});
  CHECK(make_sfence(4).labeled_covers() == Pairs{{1, 2}, {2, 3}, {4, 2}});
  CHECK(make_sfence(5).labeled_covers() == Pairs{{1, 2}, {2, 3}, {4, 2}, {4, 5}});
  CHECK(make_sfence(6).labeled_covers() == Pairs{{1, 2}, {2, 3}, {4, 2}, {4, 5}, {6, 5}});
  CHECK(make_sfence(7).labeled_covers() == Pairs{{1, 2}, {2, 3}, {4, 2}, {4, 5}, {6, 5}, {6, 7}});
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto p = make_sfence(n);
    CHECK(p.size() == n);
    CHECK(p.covers().size() == (n == 0 ? 0 : n - 1));
  }
}

TEST_CASE("poset construction rejects bad cover relations") {
  CHECK_THROWS_AS(Poset(2, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Poset(2, {{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Poset({1, 1}, {}), InvalidArgument);
  CHECK_THROWS_AS(make_sfence(3).index_of(9), InvalidArgument);

  // from_relations reduces an implied pair instead of rejecting it.
  const auto p = Poset::from_relations({1, 2, 3}, std::vector<Cover>{{0, 1}, {1, 2}, {0, 2}});
  CHECK(p.labeled_covers() == Pairs{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(Poset::from_relations({1, 2}, std::vector<Cover>{{0, 1}, {1, 0}}), InvalidArgument);
}

TEST_CASE("order queries") {
  const auto p = make_sfence(5);
  const auto x = [&](Label l) { return p.index_of(l); };
  CHECK(p.leq(x(3), x(1)));
  CHECK(p.leq(x(3), x(4)));
  CHECK(p.leq(x(5), x(4)));
  CHECK_FALSE(p.leq(x(1), x(3)));
  CHECK_FALSE(p.comparable(x(1), x(4)));
  CHECK_FALSE(p.comparable(x(3), x(5)));
  CHECK(p.up_set(x(3)).count() == 4);
  CHECK(p.down_set(x(4)).count() == 4);
}

TEST_CASE("dual") {
  CHECK(dual(Poset{}).size() == 0);
  CHECK(dual(make_fence(3)).labeled_covers() == Pairs{{1, 2}, {3, 2}});
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(dual(dual(make_sfence(n))) == make_sfence(n));
    CHECK(dual(dual(make_fence(n))) == make_fence(n));
  }
}

TEST_CASE("element removal") {
  const auto p5 = remove_element(make_sfence(5), 5);
  CHECK(p5.labeled_covers() == make_sfence(4).labeled_covers());

  CHECK(remove_element(make_sfence(3), 3).labeled_covers() == Pairs{{1, 2}});
  CHECK(remove_element(make_sfence(3), 2).labeled_covers() == Pairs{{1, 3}});
  CHECK_THROWS_AS(remove_element(make_sfence(3), 4), InvalidArgument);

  // x4 > x2 > x3, so only x5 is incomparable to x3.
  const auto s = star_remove(make_sfence(5), 3);
  CHECK(std::vector<Label>(s.labels().begin(), s.labels().end()) == std::vector<Label>{5});
  CHECK(s.covers().empty());
  const auto s1 = star_remove(make_sfence(5), 1);
  CHECK(std::vector<Label>(s1.labels().begin(), s1.labels().end()) == std::vector<Label>{4, 5});
  CHECK(s1.labeled_covers() == Pairs{{4, 5}});
  CHECK(star_remove(make_sfence(3), 2).size() == 0);
  CHECK_THROWS_AS(star_remove(make_sfence(3), 0), InvalidArgument);

  for (std::size_t n = 6; n <= 14; n += 2) {
    const auto st = star_remove(make_sfence(n), static_cast<Label>(n));
    CHECK(st.labeled_covers() == make_sfence(n - 2).labeled_covers());
  }
}

TEST_CASE("is_filter") {
  const auto p3 = make_sfence(3);
  CHECK_FALSE(is_filter(p3, ElementSet::from_word(0b010)));
  CHECK(is_filter(p3, ElementSet{}));
  CHECK(is_filter(make_sfence(7), ElementSet{}));
  const auto p5 = make_sfence(5);
  ElementSet s;
  s.set(p5.index_of(1));
  s.set(p5.index_of(4));
  CHECK(is_filter(p5, s));
}

TEST_CASE("filter enumeration examples") {
  const auto e = enumerate_filters(Poset{});
  REQUIRE(e.size() == 1);
  CHECK(e[0].empty());

  const auto f3 = enumerate_filters(make_sfence(3));
  REQUIRE(f3.size() == 4);
  CHECK(f3[0] == ElementSet::from_word(0b000));
  CHECK(f3[1] == ElementSet::from_word(0b001));
  CHECK(f3[2] == ElementSet::from_word(0b011));
  CHECK(f3[3] == ElementSet::from_word(0b111));

  CHECK(enumerate_filters(make_sfence(6)).size() == 16);
  CHECK_THROWS_AS(enumerate_filters(make_sfence(33)), CapacityError);
  CHECK_THROWS_AS(enumerate_filters(make_sfence(10), 9), CapacityError);
}

TEST_CASE("filter counts are 2F(n)") {
  CHECK(enumerate_filters(make_sfence(0)).size() == 1);
  CHECK(enumerate_filters(make_sfence(1)).size() == 2);
  CHECK(enumerate_filters(make_sfence(2)).size() == 3);
  for (std::size_t n = 3; n <= 24; ++n) {
    CHECK(BigInt(enumerate_filters(make_sfence(n)).size()) == 2 * fib(n));
  }
}

TEST_CASE("filter enumeration agrees with the 2^n subset scan") {
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(enumerate_filters(make_sfence(n)) == filters_by_subset_scan(make_sfence(n)));
    CHECK(enumerate_filters(make_fence(n)) == filters_by_subset_scan(make_fence(n)));
    CHECK(enumerate_filters(dual(make_fence(n))) == filters_by_subset_scan(dual(make_fence(n))));
  }
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto p = random_poset(rng, n, 0.1 + 0.05 * (trial % 6));
    const auto got = enumerate_filters(p);
    CHECK(got == filters_by_subset_scan(p));
    for (const auto& f : got) CHECK(is_filter(p, f));
  }
}

TEST_CASE("filters past one machine word") {
  // Two disjoint 35-chains: 36 * 36 filters spread over two words.
  std::vector<Cover> covers;
  for (Element i = 0; i + 1 < 35; ++i) covers.push_back({i, i + 1});
  for (Element i = 35; i + 1 < 70; ++i) covers.push_back({i, i + 1});
  const Poset p(70, covers);
  const auto f = enumerate_filters(p, 70);
  CHECK(f.size() == 36 * 36);
  for (const auto& s : f) CHECK(is_filter(p, s));
  CHECK(f.back().count() == 70);
}

TEST_CASE("deletion outputs are valid and split the filter count") {
  std::mt19937 rng(7);
  std::vector<Poset> posets;
  for (std::size_t n = 0; n <= 12; ++n) {
    posets.push_back(make_sfence(n));
    posets.push_back(make_fence(n));
  }
  for (int trial = 0; trial < 40; ++trial) posets.push_back(random_poset(rng, 2 + trial % 11, 0.25));

  for (const auto& p : posets) {
    const std::size_t total = enumerate_filters(p).size();
    for (Label x : p.labels()) {
      const auto without = remove_element(p, x);
      const auto star = star_remove(p, x);
      CHECK(is_reduced(without));
      CHECK(is_reduced(star));
      CHECK(without.size() + 1 == p.size());
      CHECK(enumerate_filters(without).size() + enumerate_filters(star).size() == total);
    }
  }
}

TEST_CASE("poset text round trip") {
  std::ostringstream out;
  write_poset(out, make_sfence(6));
  CHECK(out.str() == "6\n1 2\n2 3\n4 2\n4 5\n6 5\n");
  std::istringstream in(out.str());
  CHECK(read_poset(in) == make_sfence(6));

  std::istringstream empty_poset("0\n");
  CHECK(read_poset(empty_poset).size() == 0);

  std::istringstream bad_index("2\n1 3\n");
  CHECK_THROWS_AS(read_poset(bad_index), InvalidArgument);
  std::istringstream bad_line("2\n1\n");
  CHECK_THROWS_AS(read_poset(bad_line), InvalidArgument);
  std::istringstream cyclic("2\n1 2\n2 1\n");
  CHECK_THROWS_AS(read_poset(cyclic), InvalidArgument);
  std::istringstream nothing("");
  CHECK_THROWS_AS(read_poset(nothing), InvalidArgument);
}
