#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::string left_bracketing(const std::string& text) {
  return serialize_meld(merge_run(perm(text), Direction::Left).melds.at(0));
}

std::string right_bracketing(const std::string& text) {
  return serialize_meld(merge_run(perm(text), Direction::Right).melds.at(0));
}

}  // namespace

TEST_CASE("golden bracketings") {
  CHECK(left_bracketing("1324") == "((1 [3 2]) 4)");
  CHECK(right_bracketing("1324") == "(1 ([3 2] 4))");
  CHECK(left_bracketing("4231") == "[[4 (2 3)] 1]");
  CHECK(serialize_meld(merge_eager(perm("4231")).melds.at(0)) == "[4 [(2 3) 1]]");
  CHECK(left_bracketing("312645798") == "((([3 (1 2)] [6 (4 5)]) 7) [9 8])");
  CHECK(serialize_meld(merge_eager(perm("1324")).melds.at(0)) == "(1 ([3 2] 4))");
  CHECK(serialize_meld(merge_eager(perm("21")).melds.at(0)) == "[2 1]");
  CHECK(left_bracketing("21") == "[2 1]");
  CHECK(serialize_meld(Meld::leaf(7, 1)) == "7");
}

TEST_CASE("reduced word of 68745 brackets as in the remark") {
  CHECK(left_bracketing(reduce(word({6, 8, 7, 4, 5})).to_string()) == "[(3 [5 4]) (1 2)]");
}

TEST_CASE("non-full permutations leave several melds") {
  const auto out = merge_run(perm("2413"), Direction::Left);
  CHECK_FALSE(out.full);
  CHECK(out.melds.size() == 4);
  const auto partial = merge_run(perm("34152"), Direction::Left);
  std::vector<std::string> text;
  for (const Meld& m : partial.melds) text.push_back(serialize_meld(m));
  CHECK(text == std::vector<std::string>{"(3 4)", "1", "5", "2"});
  CHECK(partial.tiles == final_configuration(perm("34152")));
}

TEST_CASE("join enforces adjacency and consecutive values") {
  const Meld a = Meld::leaf(1, 1);
  const Meld b = Meld::leaf(2, 2);
  CHECK(Meld::join(a, b).kind() == MeldKind::Round);
  CHECK(Meld::join(Meld::leaf(2, 1), Meld::leaf(1, 2)).kind() == MeldKind::Square);
  CHECK_THROWS_AS(Meld::join(a, Meld::leaf(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Meld::join(a, Meld::leaf(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(Meld::leaf(1, 1).kind(), std::logic_error);
}

TEST_CASE("parse_meld round trips and rejects bad input") {
  for (const std::string text : {"((1 [3 2]) 4)", "[4 [(2 3) 1]]", "((([3 (1 2)] [6 (4 5)]) 7) [9 8])", "5"}) {
    CHECK(serialize_meld(parse_meld(text)) == text);
  }
  CHECK(parse_meld("((1 [3 2]) 4)") == merge_run(perm("1324"), Direction::Left).melds.at(0));
  for (const std::string bad : {"", "(1 2", "(1  2)", "[1 2]", "(1 3)", "(1 2) ", "(1 2 3)", "x"}) {
    CHECK_THROWS_AS(parse_meld(bad), std::invalid_argument);
  }
}

TEST_CASE("top-level kind") {
  CHECK(top_level_kind(perm("1324")) == MeldKind::Round);
  CHECK(top_level_kind(perm("21")) == MeldKind::Square);
  CHECK(top_level_kind(perm("4231")) == MeldKind::Square);
  CHECK_THROWS_AS(top_level_kind(perm("1")), std::invalid_argument);
  CHECK_THROWS_AS(top_level_kind(perm("2413")), std::invalid_argument);
}

TEST_CASE("components via bracketing") {
  const auto c = components_via_bracketing(perm("312645798"));
  REQUIRE(c.size() == 4);
  CHECK(c == comps(perm("312645798")));
  CHECK(components_via_bracketing(perm("213")) == std::vector<Word>{word({2, 1}), word({3})});
  CHECK(components_via_bracketing(perm("4231")) == std::vector<Word>{word({4, 2, 3, 1})});
  CHECK_THROWS_AS(components_via_bracketing(perm("2413")), std::invalid_argument);
}

TEST_CASE("eager merging breaks the right-child property on 4231") {
  const Meld eager = merge_eager(perm("4231")).melds.at(0);
  const Meld left = merge_run(perm("4231"), Direction::Left).melds.at(0);
  CHECK_FALSE(child_property(eager, true));
  CHECK(eager.kind() == eager.right().kind());
  CHECK(child_property(left, true));
}

TEST_CASE("merging agrees with percolation for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto fc = final_configuration(p);
      const auto l = merge_run(p, Direction::Left);
      const auto r = merge_run(p, Direction::Right);
      const auto e = merge_eager(p);
      std::vector<int> leaves;
      for (const Meld& m : l.melds) {
        const auto v = m.leaves();
        leaves.insert(leaves.end(), v.begin(), v.end());
      }
      const bool ok = l.tiles == fc && r.tiles == fc && e.tiles == fc && l.full == (l.melds.size() == 1) &&
                      leaves == std::vector<int>(p.values().begin(), p.values().end()) &&
                      count_final_tiles(p.values()) == static_cast<int>(fc.tiles.size());
      if (!ok) FAIL_CHECK("merging disagrees with percolation on " << p.to_string());
    }
  }
}

TEST_CASE("structural properties of meld trees for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto l = merge_run(p, Direction::Left);
      const auto r = merge_run(p, Direction::Right);
      for (const Meld& m : l.melds) {
        if (!well_formed(m) || !child_property(m, true)) FAIL_CHECK("left tree of " << p.to_string());
      }
      for (const Meld& m : r.melds) {
        if (!well_formed(m) || !child_property(m, false)) FAIL_CHECK("right tree of " << p.to_string());
      }
      if (!l.full) {
        bool components_full = true;
        for (const Word& w : comps(p)) components_full = components_full && is_full(w);
        if (components_full) FAIL_CHECK("non-full with full components: " << p.to_string());
        continue;
      }
      for (const Word& w : comps(p)) {
        if (!is_full(w)) FAIL_CHECK("full with non-full component: " << p.to_string());
      }
      if (components_via_bracketing(p) != comps(p)) FAIL_CHECK("components differ for " << p.to_string());
      if (n < 2) continue;
      const MeldKind kind = top_level_kind(p);
      if ((kind == MeldKind::Square) != is_indecomposable(p)) FAIL_CHECK("kind vs decomposability: " << p.to_string());
      if (top_level_kind(reverse(p)) == kind) FAIL_CHECK("reversal keeps kind: " << p.to_string());
      if (n <= 7) {
        const Meld reversed_left = merge_run(reverse(p), Direction::Left).melds.at(0);
        if (serialize_meld(reversed_left) != mirrored(r.melds.at(0))) FAIL_CHECK("mirror fails for " << p.to_string());
      }
    }
  }
}
