#include <doctest.h>

#include <algorithm>
#include <random>

#include "mwp/deltagraph.hpp"
#include "support/gen.hpp"
#include "support/naive.hpp"

using namespace mwp;
using namespace mwp::testsupport;

namespace {

DeltaList dl(std::initializer_list<Delta> ds) { return DeltaList(ds); }

bool increasing(const ChoiceDomains& d, const Assignment& a, const Assignment& b) {
  (void)d;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

TEST_CASE("insert and fusion of a complete family") {
  const ChoiceDomains d = uniform_domains(1, 3);
  DeltaGraph g;
  g.insert(d, dl({{0, 0}}));
  CHECK(g.list_count() == 1);
  CHECK_FALSE(g.complete());
  g.insert(d, dl({{1, 0}}));
  CHECK_FALSE(g.complete());
  g.insert(d, dl({{2, 0}}));
  CHECK(g.complete());  // all three values fused away the position
}

TEST_CASE("subsumed insertions leave the graph unchanged") {
  const ChoiceDomains d = uniform_domains(2, 3);
  DeltaGraph g;
  g.insert(d, dl({{1, 0}}));
  const DeltaGraph before = g;
  g.insert(d, dl({{1, 0}, {2, 1}}));  // superset of a stored list
  CHECK(g == before);
  // A shorter list drops its stored supersets.
  DeltaGraph h;
  h.insert(d, dl({{1, 0}, {2, 1}}));
  h.insert(d, dl({{1, 0}}));
  CHECK(h.list_count() == 1);
  CHECK(h.layers().count(1) == 1);
}

TEST_CASE("two siblings do not fuse") {
  const ChoiceDomains d = uniform_domains(1, 3);
  DeltaGraph g;
  g.insert(d, dl({{0, 0}}));
  g.insert(d, dl({{1, 0}}));
  CHECK(g.list_count() == 2);
  CHECK_FALSE(g.complete());
}

TEST_CASE("cascading fusion: the full two-position grid collapses") {
  const ChoiceDomains d = uniform_domains(2, 3);
  DeltaGraph g;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) g.insert(d, dl({{a, 0}, {b, 1}}));
  CHECK(g.complete());
}

TEST_CASE("completeness states") {
  const ChoiceDomains d = uniform_domains(2, 3);
  DeltaGraph g;
  CHECK_FALSE(g.complete());
  CHECK(g.empty());
  g.insert(d, dl({{1, 1}}));
  CHECK_FALSE(g.complete());
  g.insert(d, dl({}));
  CHECK(g.complete());
}

TEST_CASE("jumping iterator reproduces the printed successors") {
  const ChoiceDomains d = uniform_domains(4, 3);

  DeltaGraph g1;
  g1.insert(d, dl({{1, 1}}));
  CHECK(dg_next_assignment(g1, d, Assignment{0, 0, 2, 2}) == Assignment{0, 2, 0, 0});
  CHECK(dg_next_assignment(g1, d, Assignment{1, 0, 2, 2}) == Assignment{1, 2, 0, 0});

  // The third printed example is only consistent with the first position
  // blocking values 0 and 1: stored lists value 0 and 1 at position 0 plus
  // value 0 at position 2.
  DeltaGraph g2;
  g2.insert(d, dl({{0, 0}}));
  g2.insert(d, dl({{1, 0}}));
  g2.insert(d, dl({{0, 2}}));
  CHECK(dg_next_assignment(g2, d, Assignment{0, 0, 2, 2}) == Assignment{2, 0, 1, 0});
}

TEST_CASE("iterator walks the whole space of an empty graph") {
  const ChoiceDomains d = uniform_domains(2, 3);
  DeltaGraph g;
  std::size_t n = 0;
  for (auto a = dg_next_assignment(g, d, {}); a; a = dg_next_assignment(g, d, a)) ++n;
  CHECK(n == 9);
  // A complete graph yields nothing.
  g.insert(d, dl({}));
  CHECK_FALSE(dg_next_assignment(g, d, {}).has_value());
}

TEST_CASE("no positions: one empty assignment") {
  const ChoiceDomains d;
  DeltaGraph g;
  auto a = dg_next_assignment(g, d, {});
  REQUIRE(a.has_value());
  CHECK(a->empty());
  CHECK_FALSE(dg_next_assignment(g, d, a).has_value());
}

TEST_CASE("iterator equals the brute-force complement and is increasing") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 150; ++iter) {
    const std::uint32_t positions = 1 + rng() % 5;
    const ChoiceDomains d = uniform_domains(positions, 2 + rng() % 2);
    DeltaGraph g;
    const std::size_t inserts = rng() % 6;
    for (std::size_t k = 0; k < inserts; ++k) {
      DeltaList list;
      for (std::uint32_t pos = 0; pos < positions; ++pos)
        if (rng() % 3 == 0)
          list.push_back(Delta{static_cast<std::uint32_t>(rng() % d.size_of(pos)), pos});
      g.insert(d, list);
    }
    std::vector<Assignment> walked;
    for (auto a = dg_next_assignment(g, d, {}); a; a = dg_next_assignment(g, d, a)) {
      if (!walked.empty()) CHECK(increasing(d, walked.back(), *a));
      walked.push_back(*a);
    }
    CHECK(walked == brute_force_unmatched(g, d));
  }
}

TEST_CASE("fusion preserves the matched assignment set") {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 150; ++iter) {
    const std::uint32_t positions = 1 + rng() % 6;
    const ChoiceDomains d = uniform_domains(positions, 3);
    std::vector<DeltaList> lists;
    const std::size_t n = 1 + rng() % 7;
    for (std::size_t k = 0; k < n; ++k) {
      DeltaList list;
      for (std::uint32_t pos = 0; pos < positions; ++pos)
        if (rng() % 2 == 0)
          list.push_back(Delta{static_cast<std::uint32_t>(rng() % 3), pos});
      lists.push_back(std::move(list));
    }
    DeltaGraph g;
    for (const DeltaList& l : lists) g.insert(d, l);
    // Reference: match directly against the raw lists.
    for (const Assignment& a : all_assignments(d)) {
      bool raw = false;
      for (const DeltaList& l : lists) raw |= deltas_match(l, a);
      CHECK(raw == g.matches(a));
    }
    // Insertion order does not affect the matched set.
    std::vector<DeltaList> shuffled = lists;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    DeltaGraph h;
    for (const DeltaList& l : shuffled) h.insert(d, l);
    for (const Assignment& a : all_assignments(d)) CHECK(g.matches(a) == h.matches(a));
  }
}

TEST_CASE("fusion never leaves a complete sibling family stored") {
  std::mt19937 rng(47);
  for (int iter = 0; iter < 80; ++iter) {
    const std::uint32_t positions = 1 + rng() % 4;
    const ChoiceDomains d = uniform_domains(positions, 3);
    DeltaGraph g;
    for (std::size_t k = 0; k < 8; ++k) {
      DeltaList list;
      for (std::uint32_t pos = 0; pos < positions; ++pos)
        if (rng() % 2 == 0)
          list.push_back(Delta{static_cast<std::uint32_t>(rng() % 3), pos});
      g.insert(d, list);
    }
    for (const auto& [len, lists] : g.layers()) {
      for (const DeltaList& l : lists) {
        for (std::size_t qi = 0; qi < l.size(); ++qi) {
          std::size_t present = 0;
          for (std::uint32_t v = 0; v < 3; ++v) {
            DeltaList sibling = l;
            sibling[qi].value = v;
            present += lists.count(sibling);
          }
          CHECK(present < 3);
        }
      }
    }
  }
}
