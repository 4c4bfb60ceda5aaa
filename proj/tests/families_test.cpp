#include <string>

#include "gmock/gmock.h"

#include "raag/families.hpp"
#include "raag/graph.hpp"

using raag::SpokeSet;

using testing::HasSubstr;

namespace
{

std::string validation_message(SpokeSet const &spokes)
{
  try {
    raag::validate(spokes);
  } catch (raag::precondition_error const &e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST(FamiliesTest, FruchtGraph)
{
  auto f = raag::frucht();
  EXPECT_EQ(12u, f.num_vertices());
  EXPECT_EQ(18u, f.num_edges());
  EXPECT_EQ("0", f.name(0));
  EXPECT_EQ("11", f.name(11));
  EXPECT_EQ(f, raag::frucht()) << "Construction is deterministic.";
}

TEST(FamiliesTest, SpokeValidation)
{
  EXPECT_EQ("", validation_message({{3, 7, 12}}));
  EXPECT_THAT(validation_message({{3, 6, 9}}), HasSubstr("condition (2)"));
  EXPECT_THAT(validation_message({{2, 6, 11}}), HasSubstr("condition (1)"));
  EXPECT_THAT(validation_message({{3, 7}}), HasSubstr("three"));
  EXPECT_THAT(validation_message({{7, 3, 12}}), HasSubstr("increasing"));
  EXPECT_THROW(raag::cycle_hub({{3, 6, 9}}), raag::precondition_error);
}

TEST(FamiliesTest, CycleHubShape)
{
  SpokeSet spokes{{3, 7, 12, 18}};
  EXPECT_THAT(spokes.gaps(), testing::ElementsAre(3u, 4u, 5u, 6u));

  auto g = raag::cycle_hub(spokes);
  EXPECT_EQ(19u, g.num_vertices());
  EXPECT_EQ(18u + 4u, g.num_edges());

  auto hub = g.index_of("c");
  EXPECT_EQ(4u, g.degree(hub));
  for (auto name : {"0", "3", "7", "12"})
    EXPECT_TRUE(g.adjacent(hub, g.index_of(name))) << name;
  EXPECT_TRUE(g.adjacent(g.index_of("17"), g.index_of("0")));
}

TEST(FamiliesTest, JoinComplete)
{
  auto g = raag::join_complete(2, {2, 3});
  EXPECT_EQ(7u, g.num_vertices());
  EXPECT_EQ(1u + 1u + 3u + 2u * 5u, g.num_edges());
  EXPECT_TRUE(g.adjacent(g.index_of("x1_1"), g.index_of("x1_2")));
  EXPECT_FALSE(g.adjacent(g.index_of("x1_1"), g.index_of("x2_1")));
  EXPECT_TRUE(g.adjacent(g.index_of("s2"), g.index_of("x2_3")));

  EXPECT_THROW(raag::join_complete(1, {2, 2}), raag::precondition_error);
  EXPECT_THROW(raag::join_complete(1, {1, 2}), raag::precondition_error);
  EXPECT_THROW(raag::join_complete(0, {2, 3}), raag::precondition_error);
}
