#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vactab/serialize.hpp"

using namespace vactab;

TEST_CASE("documented shapes of the schemas") {
  CHECK(to_json(IntegerPartition({2, 1})).dump() == "[2,1]");
  CHECK(to_json(IntegerPartition{}).dump() == "[]");
  CHECK(to_json(Cell{1, 2}).dump() == "[1,2]");
  CHECK(to_json(Tableau({{1, 3}, {2}})).dump() == "[[1,3],[2]]");
  const auto w = VacillatingTableau(WalkVariant::NVac,
                                    {IntegerPartition({2}), IntegerPartition({1}),
                                     IntegerPartition({1, 1})},
                                    2);
  CHECK(to_json(w).dump() == R"({"n":2,"shapes":[[2],[1],[1,1]],"variant":"nvac"})");
  const auto sp = SetPartition::from_blocks({{1, 5}, {2}});
  CHECK(to_json(sp).dump() == R"({"blocks":[[1,5],[2]],"ground":[1,2,5]})");
  CHECK(to_json(QPoly({Int(1), Int(0), Int(2)})).dump() == R"(["1","0","2"])");
  Rat half(1, 2);
  half.canonicalize();
  CHECK(to_json(EvalPoint{{Rat(3), half}}).dump() == R"(["3","1/2"])");
}

TEST_CASE("round trips through the schemas") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracles::random_partition(trial % 9, rng);
    CHECK(set_partition_from_json(to_json(p)) == p);
  }
  for (const auto& shape : partitions_up_to(5)) {
    CHECK(partition_from_json(to_json(shape)) == shape);
    oracles::for_each_syt(shape, [&](const Tableau& t) {
      CHECK(tableau_from_json(to_json(t)) == t);
    });
  }
  const MarkedSetPartition m(SetPartition::from_blocks({{1, 4}, {2}, {3}}), {0, 1});
  CHECK(marked_partition_from_json(to_json(m)) == m);
  const PsiImage img{m, Tableau({{1}, {2}})};
  CHECK(psi_image_from_json(to_json(img)) == img);
  for (const auto& arr :
       {TwoLineArray::from_permutation({2, 1, 3}), TwoLineArray({{1, 1}, {1, 2}})})
    CHECK(two_line_from_json(to_json(arr)) == arr);
  const QPoly q = q_binomial(6, 3);
  CHECK(qpoly_from_json(to_json(q)) == q);
  for (const auto variant : {WalkVariant::Simplified, WalkVariant::Limiting})
    for (const auto& w : enumerate_walks(variant, 2, true))
      CHECK(walk_from_json(to_json(w)) == w);
}

TEST_CASE("canonicalized output is byte-stable") {
  const auto j = to_json(SetPartition::from_blocks({{3, 1}, {2}}));
  CHECK(to_json(set_partition_from_json(j)).dump() == j.dump());
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(partition_from_json(nlohmann::json::parse("[1,2]")));
  CHECK_THROWS(set_partition_from_json(nlohmann::json::parse(R"({"ground":[1],"blocks":[]})")));
  CHECK_THROWS(walk_from_json(nlohmann::json::parse(R"({"variant":"bogus","shapes":[[]]})")));
  CHECK_THROWS(cell_from_json(nlohmann::json::parse("[1]")));
}
