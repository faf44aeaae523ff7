#include "trisys/group.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace trisys;

namespace {

Element el(const GroupSpec& g, std::vector<Coord> raw) { return g.make(std::move(raw)); }

}  // namespace

TEST_CASE("descriptor parsing round-trips") {
  for (const char* d : {"Z7", "Z4xZ12", "D6xZ9", "Z2xZ2xZ7", "D14", "Z1"}) {
    CHECK(GroupSpec::parse(d).descriptor() == d);
  }
  CHECK(GroupSpec::parse("Z4xZ12").order() == 48);
  CHECK(GroupSpec::parse("D6xZ9").order() == 54);
  CHECK(GroupSpec::parse("D6").factors()[0].modulus == 3);

  CHECK_THROWS_AS(GroupSpec::parse("Q8"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("D7"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("Z0"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("Z4x"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("Z4xxZ3"), std::invalid_argument);
}

TEST_CASE("composition follows the cyclic and dihedral laws") {
  GroupSpec d6 = GroupSpec::parse("D6");
  // x * x = x^2
  CHECK(d6.compose(el(d6, {{1, 0}}), el(d6, {{1, 0}})) == el(d6, {{2, 0}}));
  // y * x = x^-1 y = x^2 y
  CHECK(d6.compose(el(d6, {{0, 1}}), el(d6, {{1, 0}})) == el(d6, {{2, 1}}));

  GroupSpec g = GroupSpec::parse("Z4xZ12");
  CHECK(g.compose(el(g, {{3, 0}, {10, 0}}), el(g, {{2, 0}, {5, 0}})) == el(g, {{1, 0}, {3, 0}}));

  CHECK_THROWS_AS(g.compose(el(g, {{1, 0}, {1, 0}}), d6.identity()), std::invalid_argument);
}

TEST_CASE("inverses") {
  GroupSpec z7 = GroupSpec::parse("Z7");
  CHECK(z7.inverse(el(z7, {{3, 0}})) == el(z7, {{4, 0}}));

  GroupSpec d6 = GroupSpec::parse("D6");
  Element xy = el(d6, {{1, 1}});
  CHECK(d6.inverse(xy) == xy);  // reflections are involutions

  GroupSpec g = GroupSpec::parse("Z4xZ12");
  CHECK(g.inverse(el(g, {{1, 0}, {5, 0}})) == el(g, {{3, 0}, {7, 0}}));
}

TEST_CASE("right differences") {
  GroupSpec z24 = GroupSpec::parse("Z24");
  CHECK(z24.right_difference(el(z24, {{1, 0}}), el(z24, {{5, 0}})) == el(z24, {{20, 0}}));

  GroupSpec d6 = GroupSpec::parse("D6");
  CHECK(d6.right_difference(el(d6, {{1, 0}}), el(d6, {{0, 1}})) == el(d6, {{1, 1}}));

  for (const char* desc : {"Z24", "D6", "Z4xZ12"}) {
    GroupSpec g = GroupSpec::parse(desc);
    Element a = g.elements()[g.order() > 2 ? 2 : 0];
    CHECK(g.is_identity(g.right_difference(a, a)));
  }
}

TEST_CASE("right difference is invariant under right translation") {
  for (const char* desc : {"D6xZ5", "Z4xZ12"}) {
    GroupSpec g = GroupSpec::parse(desc);
    auto els = g.elements();
    // spot-exhaustive on a deterministic slice to keep runtime sane
    for (std::size_t ia = 0; ia < els.size(); ia += 3)
      for (std::size_t ib = 1; ib < els.size(); ib += 5)
        for (const Element& t : els) {
          Element lhs = g.right_difference(g.compose(els[ia], t), g.compose(els[ib], t));
          CHECK(lhs == g.right_difference(els[ia], els[ib]));
        }
  }
}

TEST_CASE("group axioms hold exhaustively on small groups") {
  for (const char* desc : {"D6", "Z24", "Z2xZ2xZ2"}) {
    GroupSpec g = GroupSpec::parse(desc);
    auto els = g.elements();
    REQUIRE(els.size() == static_cast<std::size_t>(g.order()));
    for (const Element& a : els) {
      CHECK(g.is_identity(g.compose(a, g.inverse(a))));
      for (const Element& b : els)
        for (const Element& c : els)
          CHECK(g.compose(g.compose(a, b), c) == g.compose(a, g.compose(b, c)));
    }
  }
}

TEST_CASE("involutions") {
  GroupSpec d6 = GroupSpec::parse("D6");
  auto inv = d6.involutions();
  REQUIRE(inv.size() == 3);
  CHECK(inv == std::vector<Element>{el(d6, {{0, 1}}), el(d6, {{1, 1}}), el(d6, {{2, 1}})});

  GroupSpec g = GroupSpec::parse("Z4xZ12");
  auto gi = g.involutions();
  std::set<Element> want{el(g, {{2, 0}, {0, 0}}), el(g, {{0, 0}, {6, 0}}), el(g, {{2, 0}, {6, 0}})};
  CHECK(std::set<Element>(gi.begin(), gi.end()) == want);

  CHECK(GroupSpec::parse("Z2xZ2xZ2").involutions().size() == 7);

  // groups used by the pipeline all carry exactly three involutions
  for (const char* desc : {"Z2xZ2xZ7", "Z4xZ8", "D6xZ5", "Z4xZ12", "Z2xZ2xZ3xZ5"}) {
    CHECK(GroupSpec::parse(desc).involutions().size() == 3);
  }
}

TEST_CASE("prime-order subgroups") {
  GroupSpec g = GroupSpec::parse("Z4xZ12");
  auto subs2 = g.subgroups_of_prime_order(2);
  REQUIRE(subs2.size() == 3);
  for (const auto& s : subs2) {
    CHECK(s.size() == 2);
    CHECK(g.is_subgroup(s));
  }

  GroupSpec d6z9 = GroupSpec::parse("D6xZ9");
  auto subs3 = d6z9.subgroups_of_prime_order(3);
  Subgroup rot{el(d6z9, {{0, 0}, {0, 0}}), el(d6z9, {{1, 0}, {0, 0}}), el(d6z9, {{2, 0}, {0, 0}})};
  std::sort(rot.begin(), rot.end());
  CHECK(std::count(subs3.begin(), subs3.end(), rot) == 1);
  for (const auto& s : subs3) CHECK(d6z9.is_subgroup(s));

  CHECK(GroupSpec::parse("Z7").subgroups_of_prime_order(3).empty());
  CHECK_THROWS_AS(g.subgroups_of_prime_order(5), std::invalid_argument);
}

TEST_CASE("patterned starter") {
  GroupSpec z5 = GroupSpec::parse("Z5");
  CHECK(z5.patterned_starter() == std::vector<Element>{el(z5, {{1, 0}}), el(z5, {{2, 0}})});

  GroupSpec z3z3 = GroupSpec::parse("Z3xZ3");
  CHECK(z3z3.patterned_starter().size() == 4);

  CHECK(GroupSpec::parse("Z1").patterned_starter().empty());
  CHECK_THROWS_AS(GroupSpec::parse("Z4").patterned_starter(), std::domain_error);

  // representatives, their inverses and the identity tile the group
  for (const char* desc : {"Z5", "Z3xZ3", "Z7", "Z3xZ5"}) {
    GroupSpec h = GroupSpec::parse(desc);
    auto starter = h.patterned_starter();
    REQUIRE(starter.size() == static_cast<std::size_t>((h.order() - 1) / 2));
    std::set<Element> seen{h.identity()};
    for (const Element& s : starter) {
      CHECK(seen.insert(s).second);
      CHECK(seen.insert(h.inverse(s)).second);
    }
    CHECK(seen.size() == static_cast<std::size_t>(h.order()));
  }
}

TEST_CASE("element enumeration, indexing and ordering agree") {
  for (const char* desc : {"D6xZ9", "Z4xZ12", "Z2xZ2xZ7"}) {
    GroupSpec g = GroupSpec::parse(desc);
    auto els = g.elements();
    CHECK(std::is_sorted(els.begin(), els.end()));
    for (long long i = 0; i < g.order(); ++i) {
      CHECK(g.index_of(els[static_cast<std::size_t>(i)]) == i);
      CHECK(g.element_at(i) == els[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("element validation") {
  GroupSpec g = GroupSpec::parse("Z4xZ12");
  CHECK_THROWS_AS(g.check_element(Element{{{1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(g.check_element(Element{{{4, 0}, {0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(g.check_element(Element{{{1, 1}, {0, 0}}}), std::invalid_argument);
  CHECK(g.make({{-1, 0}, {14, 0}}) == el(g, {{3, 0}, {2, 0}}));
}
