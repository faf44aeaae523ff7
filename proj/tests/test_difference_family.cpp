#include "trisys/difference_family.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace trisys;

namespace {

Element zel(const GroupSpec& g, int r) { return g.make({{r, 0}}); }

Block zblock(const GroupSpec& g, int a, int b, int c) {
  return make_block(zel(g, a), zel(g, b), zel(g, c));
}

PartialSpread z24_spread_34(const GroupSpec& z24) {
  Subgroup s3{zel(z24, 0), zel(z24, 8), zel(z24, 16)};
  Subgroup s4{zel(z24, 0), zel(z24, 6), zel(z24, 12), zel(z24, 18)};
  return {z24, {s3, s4}};
}

}  // namespace

TEST_CASE("delta multiset") {
  GroupSpec z24 = GroupSpec::parse("Z24");
  DifferenceFamily fam{z24, {zblock(z24, 0, 1, 5)}};
  std::multiset<Element> got;
  for (const Element& d : delta(fam)) got.insert(d);
  std::multiset<Element> want;
  for (int r : {1, 23, 5, 19, 4, 20}) want.insert(zel(z24, r));
  CHECK(got == want);

  GroupSpec z4z4 = GroupSpec::parse("Z4xZ4");
  DifferenceFamily fam2{z4z4,
                        {make_block(z4z4.make({{0, 0}, {0, 0}}), z4z4.make({{1, 0}, {0, 0}}),
                                    z4z4.make({{1, 0}, {1, 0}}))}};
  std::multiset<Element> got2;
  for (const Element& d : delta(fam2)) got2.insert(d);
  std::multiset<Element> want2;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {3, 0}, {1, 1}, {3, 3}, {0, 1}, {0, 3}})
    want2.insert(z4z4.make({{a, 0}, {b, 0}}));
  CHECK(got2 == want2);

  CHECK(delta(DifferenceFamily{z24, {}}).empty());
}

TEST_CASE("validate_df on the paper families") {
  GroupSpec z33 = GroupSpec::parse("Z3xZ3");
  DifferenceFamily fam{z33,
                       {make_block(z33.make({{0, 0}, {0, 0}}), z33.make({{1, 0}, {1, 0}}),
                                   z33.make({{1, 0}, {2, 0}}))}};
  Subgroup first_factor{z33.make({{0, 0}, {0, 0}}), z33.make({{1, 0}, {0, 0}}),
                        z33.make({{2, 0}, {0, 0}})};
  PartialSpread spread{z33, {first_factor}};
  REQUIRE(validate_spread(spread));
  CHECK(validate_df(fam, spread).ok);

  GroupSpec z24 = GroupSpec::parse("Z24");
  DifferenceFamily lemma{z24, {zblock(z24, 0, 1, 5), zblock(z24, 0, 2, 9), zblock(z24, 0, 3, 13)}};
  CHECK(validate_df(lemma, z24_spread_34(z24)).ok);

  // {0,3,14} is a reflected translate of {0,3,13} with the same deltas, so it
  // still validates; a real perturbation has to move a difference.
  DifferenceFamily translate{z24,
                             {zblock(z24, 0, 1, 5), zblock(z24, 0, 2, 9), zblock(z24, 0, 3, 14)}};
  CHECK(validate_df(translate, z24_spread_34(z24)).ok);
  DifferenceFamily repeats{z24, {zblock(z24, 0, 1, 5), zblock(z24, 0, 2, 9), zblock(z24, 0, 3, 15)}};
  CHECK_FALSE(validate_df(repeats, z24_spread_34(z24)).ok);  // +-9 appears twice
  DifferenceFamily in_spread{z24, {zblock(z24, 0, 1, 5), zblock(z24, 0, 2, 10), zblock(z24, 0, 3, 13)}};
  CHECK_FALSE(validate_df(in_spread, z24_spread_34(z24)).ok);  // +-8 lies in the spread

  GroupSpec z7 = GroupSpec::parse("Z7");
  CHECK_THROWS_AS(validate_df(DifferenceFamily{z7, {}}, z24_spread_34(z24)),
                  std::invalid_argument);
}

TEST_CASE("spread validation rejects non-subgroups and overlapping members") {
  GroupSpec z24 = GroupSpec::parse("Z24");
  CHECK(validate_spread(z24_spread_34(z24)));
  PartialSpread bad1{z24, {{zel(z24, 0), zel(z24, 5)}}};
  CHECK_FALSE(validate_spread(bad1));
  Subgroup s4{zel(z24, 0), zel(z24, 6), zel(z24, 12), zel(z24, 18)};
  Subgroup s2{zel(z24, 0), zel(z24, 12)};
  PartialSpread bad2{z24, {s4, s2}};
  CHECK_FALSE(validate_spread(bad2));
}

TEST_CASE("infer_spread recognises coverage gaps") {
  GroupSpec z24 = GroupSpec::parse("Z24");
  DifferenceFamily lemma{z24, {zblock(z24, 0, 1, 5), zblock(z24, 0, 2, 9), zblock(z24, 0, 3, 13)}};

  CHECK_FALSE(infer_spread(lemma).has_value());  // order-4 member not allowed by default

  auto wide = infer_spread(lemma, {2, 3, 4});
  REQUIRE(wide.has_value());
  CHECK(wide->type() == std::map<int, int>{{3, 1}, {4, 1}});
  CHECK(validate_spread(*wide));
  CHECK(validate_df(lemma, *wide).ok);

  DifferenceFamily repeated{z24, {zblock(z24, 0, 1, 2), zblock(z24, 0, 5, 6)}};
  CHECK_FALSE(infer_spread(repeated).has_value());
}

TEST_CASE("infer_spread on an e = 0 family") {
  // v = 19 family over Z4 x Z4: uncovered part must be the three involutions
  GroupSpec g = GroupSpec::parse("Z4xZ4");
  auto el = [&](int a, int b) { return g.make({{a, 0}, {b, 0}}); };
  DifferenceFamily fam{g,
                       {make_block(el(0, 0), el(1, 0), el(1, 1)),
                        make_block(el(0, 0), el(1, 2), el(3, 1))}};
  auto spread = infer_spread(fam);
  REQUIRE(spread.has_value());
  CHECK(spread->type() == std::map<int, int>{{2, 3}});
  CHECK(validate_df(fam, *spread).ok);
}

TEST_CASE("df_search proves no cyclic STS(9) exists") {
  GroupSpec z9 = GroupSpec::parse("Z9");
  PartialSpread spread{z9, {{zel(z9, 0), zel(z9, 3), zel(z9, 6)}}};
  auto r = df_search(z9, spread);
  CHECK(r.status == SearchStatus::Absent);
  CHECK_FALSE(r.family.has_value());
}

TEST_CASE("df_search finds families over Z7 and Z13") {
  GroupSpec z7 = GroupSpec::parse("Z7");
  auto r7 = df_search(z7, trivial_spread(z7));
  REQUIRE(r7.status == SearchStatus::Found);
  CHECK(r7.family->blocks.size() == 1);
  CHECK(validate_df(*r7.family, trivial_spread(z7)).ok);

  GroupSpec z13 = GroupSpec::parse("Z13");
  auto r13 = df_search(z13, trivial_spread(z13));
  REQUIRE(r13.status == SearchStatus::Found);
  CHECK(r13.family->blocks.size() == 2);
  CHECK(validate_df(*r13.family, trivial_spread(z13)).ok);

  auto again = df_search(z13, trivial_spread(z13));
  CHECK(again.family->blocks == r13.family->blocks);  // deterministic
}

TEST_CASE("df_search respects the node budget and the size guard") {
  GroupSpec z13 = GroupSpec::parse("Z13");
  auto r = df_search(z13, trivial_spread(z13), 1);
  CHECK(r.status == SearchStatus::Exhausted);

  GroupSpec big = GroupSpec::parse("Z211");
  CHECK_THROWS_AS(df_search(big, trivial_spread(big)), std::invalid_argument);
}
