#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vactab/bijections.hpp"

using namespace vactab;

namespace {

IntegerPartition P(std::vector<int> parts) { return IntegerPartition(std::move(parts)); }
Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }
SetPartition SP(std::vector<std::vector<int>> blocks) {
  return SetPartition::from_blocks(std::move(blocks));
}

VacillatingTableau walk(WalkVariant v, std::vector<std::vector<int>> shapes, int n = 0) {
  std::vector<IntegerPartition> s;
  for (auto& parts : shapes) s.push_back(IntegerPartition(std::move(parts)));
  return VacillatingTableau(v, std::move(s), n);
}

// marked partition from blocks plus the marked blocks given by their maxima
MarkedSetPartition marked(std::vector<std::vector<int>> blocks, std::vector<int> maxima) {
  SetPartition p = SP(std::move(blocks));
  std::vector<int> idx;
  for (int m : maxima)
    for (int i = 0; i < p.num_blocks(); ++i)
      if (p.blocks()[i].back() == m) idx.push_back(i);
  return MarkedSetPartition(std::move(p), std::move(idx));
}

std::vector<std::vector<int>> involutions_of(int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(t, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > t) {
      out.push_back(sigma);
      return;
    }
    if (sigma[i - 1] != 0) {
      self(self, i + 1);
      return;
    }
    sigma[i - 1] = i;
    self(self, i + 1);
    sigma[i - 1] = 0;
    for (int j = i + 1; j <= t; ++j) {
      if (sigma[j - 1] != 0) continue;
      sigma[i - 1] = j;
      sigma[j - 1] = i;
      self(self, i + 1);
      sigma[i - 1] = sigma[j - 1] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

// every psi image over [k] (or [k+1] for odd walks): j marked blocks and a
// standard tableau of any shape of size j
std::vector<PsiImage> all_images(int ground, bool tilde) {
  std::vector<PsiImage> out;
  for (int j = 0; j <= ground; ++j) {
    const auto base = tilde ? enumerate_tilde_marked(ground, j) : enumerate_marked(ground, j);
    for (const auto& mp : base)
      for (const auto& mu : partitions_of(j))
        oracles::for_each_syt(mu, [&](const Tableau& t) { out.push_back({mp, t}); });
  }
  return out;
}

}  // namespace

TEST_CASE("delete-insert fixtures") {
  SUBCASE("repeated largest entry") {
    const auto img = di_forward(3, {3, 3});
    CHECK(img.tableau == T({{1, 2, 3}}));
    CHECK(img.walk == walk(WalkVariant::NVac, {{3}, {2}, {3}, {2}, {3}}, 3));
  }
  SUBCASE("single bump") {
    const auto img = di_forward(2, {1});
    CHECK(img.tableau == T({{1}, {2}}));
    CHECK(img.walk == walk(WalkVariant::NVac, {{2}, {1}, {1, 1}}, 2));
    CHECK(di_backward(2, img) == std::vector<int>{1});
  }
  SUBCASE("n = 1") {
    const auto img = di_forward(1, {1, 1});
    CHECK(img.tableau == T({{1}}));
    CHECK(img.walk == walk(WalkVariant::NVac, {{1}, {}, {1}, {}, {1}}, 1));
  }
  CHECK_THROWS_AS(di_forward(2, {3}), std::invalid_argument);
}

TEST_CASE("delete-insert round trips exhaustively") {
  const auto cases = std::vector<std::pair<int, int>>{
      {1, 4}, {2, 4}, {3, 4}, {3, 3}, {4, 2}, {5, 2}, {4, 3}, {5, 3}};
  for (const auto& [n, k] : cases) {
    std::vector<int> seq(k, 1);
    for (;;) {
      const auto img = di_forward(n, seq);
      CHECK(img.walk.validate().ok);
      CHECK(img.tableau.is_standard());
      CHECK(img.tableau.shape() == img.walk.final_shape());
      CHECK(di_backward(n, img) == seq);
      int pos = k - 1;
      while (pos >= 0 && seq[pos] == n) seq[pos--] = 1;
      if (pos < 0) break;
      ++seq[pos];
    }
  }
}

TEST_CASE("delete-insert image counts split as tableau times walk") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k) {
      std::map<IntegerPartition, std::set<Tableau>> tableaux;
      std::map<IntegerPartition, std::set<VacillatingTableau>> walks;
      std::vector<int> seq(k, 1);
      long total = 0;
      for (;;) {
        const auto img = di_forward(n, seq);
        tableaux[img.tableau.shape()].insert(img.tableau);
        walks[img.walk.final_shape()].insert(img.walk);
        ++total;
        int pos = k - 1;
        while (pos >= 0 && seq[pos] == n) seq[pos--] = 1;
        if (pos < 0) break;
        ++seq[pos];
      }
      CHECK(Int(total) == int_pow(Int(n), k));
      const auto dp = count_dp(WalkVariant::NVac, k, false, n);
      CHECK(walks.size() == dp.size());
      for (const auto& [shape, ws] : walks) {
        CHECK(Int(ws.size()) == dp.at(shape));
        CHECK(Int(tableaux.at(shape).size()) == syt_count(shape));
      }
    }
}

TEST_CASE("sequences ending in the top value append it to the first row") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k) {
      std::vector<int> seq(k, 1);
      for (;;) {
        auto ending = seq;
        ending.push_back(n);
        DiTrace trace;
        di_forward(n, ending, &trace);
        const auto& last = trace.tableaux.back();
        const auto& before = trace.tableaux[trace.tableaux.size() - 2];
        auto rows = before.rows();
        if (rows.empty()) rows.emplace_back();
        rows[0].push_back(n);
        CHECK(last == Tableau(rows));
        int pos = k - 1;
        while (pos >= 0 && seq[pos] == n) seq[pos--] = 1;
        if (pos < 0) break;
        ++seq[pos];
      }
    }
}

TEST_CASE("psi on the length-14 worked example, with trace") {
  const auto w = fixtures::long_example_walk();
  PsiTrace trace;
  const auto img = psi_forward(w, &trace);
  CHECK(img == fixtures::long_example_image());

  const std::vector<Tableau> expected_tableaux{
      T({}), T({}), T({{1}}), T({{1}}), T({{1}, {2}}), T({{1}, {2}}), T({{1, 3}, {2}}),
      T({{1}, {2}}), T({{1, 4}, {2}}), T({{2, 4}}), T({{2, 4}, {5}}), T({{2, 4}, {5}}),
      T({{2, 4}, {5}, {6}}), T({{2, 5}, {6}}), T({{2, 5}, {6}})};
  const std::vector<std::string> expected_steps{"0", "1/2", "1", "3/2", "2", "5/2", "3",
                                                "7/2", "4", "9/2", "5", "11/2", "6",
                                                "13/2", "7"};
  REQUIRE(trace.size() == expected_tableaux.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CHECK(trace[i].step == expected_steps[i]);
    CHECK(trace[i].tableau == expected_tableaux[i]);
  }
  CHECK(trace.back().edges ==
        std::vector<std::pair<int, int>>{{3, 4}, {1, 5}, {4, 7}});
  CHECK(psi_backward(7, img, WalkVariant::Simplified, false) == w);
}

TEST_CASE("psi maps the six simplified walks of shape (1,1), length 6") {
  const auto rows = fixtures::table1_rows();
  const auto enumerated = enumerate_walks(WalkVariant::Simplified, 3, false, P({1, 1}));
  REQUIRE(enumerated.size() == rows.size());
  std::set<VacillatingTableau> expected_set;
  for (const auto& row : rows) expected_set.insert(row.walk);
  CHECK(std::set<VacillatingTableau>(enumerated.begin(), enumerated.end()) == expected_set);

  for (const auto& row : rows) {
    const auto img = psi_forward(row.walk);
    CHECK(img.marked == row.image);
    CHECK(img.tableau == row.tableau);
    CHECK(psi_backward(3, img, WalkVariant::Simplified, false) == row.walk);
  }
}

TEST_CASE("psi maps the twelve limiting walks of shape (2,1), length 8") {
  const auto rows = fixtures::table2_rows();
  const auto enumerated = enumerate_walks(WalkVariant::Limiting, 4, false, P({2, 1}));
  REQUIRE(enumerated.size() == rows.size());
  std::set<VacillatingTableau> expected_set;
  for (const auto& row : rows) expected_set.insert(row.walk);
  CHECK(std::set<VacillatingTableau>(enumerated.begin(), enumerated.end()) == expected_set);

  for (const auto& row : rows) {
    const auto img = psi_forward(row.walk);
    CHECK(img.marked == row.image);  // limiting walks mark every block
    CHECK(img.tableau == row.tableau);
    CHECK(psi_backward(4, img, WalkVariant::Limiting, false) == row.walk);
  }
}

TEST_CASE("psi round-trips on every simplified walk up to k = 4, both parities") {
  for (const bool half : {false, true})
    for (int k = 0; k <= 4; ++k)
      for (const auto& w : enumerate_walks(WalkVariant::Simplified, k, half)) {
        const auto img = psi_forward(w);
        if (half) {
          const auto& base = img.marked.partition();
          CHECK_FALSE(img.marked.is_marked(base.block_index_of(k + 1)));
        }
        CHECK(psi_backward(k, img, WalkVariant::Simplified, half) == w);
      }
}

TEST_CASE("psi round-trips on every limiting walk up to k = 5, both parities") {
  for (const bool half : {false, true})
    for (int k = 0; k <= 5; ++k)
      for (const auto& w : enumerate_walks(WalkVariant::Limiting, k, half)) {
        const auto img = psi_forward(w);
        const int blocks = img.marked.partition().num_blocks();
        CHECK(img.marked.num_marked() == (half ? blocks - 1 : blocks));
        CHECK(psi_backward(k, img, WalkVariant::Limiting, half) == w);
      }
}

TEST_CASE("psi rejects invalid input") {
  CHECK_THROWS_AS(psi_forward(walk(WalkVariant::Simplified, {{1}, {}, {1}})),
                  std::invalid_argument);
  // inconsistent image: two marked blocks but a one-box tableau
  CHECK_THROWS_AS(
      psi_backward(2, {marked({{1}, {2}}, {1, 2}), T({{1}})}, WalkVariant::Simplified, false),
      std::invalid_argument);
}

TEST_CASE("symmetric gluing of even-length images (worked example)") {
  const PsiImage img{marked({{1}, {2, 4}, {3, 6}, {5}}, {1, 5, 6}), T({{1, 3}, {2}})};
  CHECK(glue_symmetric_even(img) ==
        SP({{1, -5}, {5, -1}, {2, 4}, {-2, -4}, {3, 6, -3, -6}}));
  // all-singleton unmarked image mirrors the singletons
  const PsiImage plain{marked({{1}, {2}}, {}), T({})};
  CHECK(glue_symmetric_even(plain) == SP({{1}, {2}, {-1}, {-2}}));
}

TEST_CASE("symmetric gluing of even-length images is a bijection for k <= 3") {
  for (int k = 0; k <= 3; ++k) {
    std::set<SetPartition> images;
    for (const auto& img : all_images(k, false)) {
      const auto out = glue_symmetric_even(img);
      CHECK(images.insert(out).second);
      // marked blocks become exactly the sign-mixed blocks
      int mixed = 0;
      for (const auto& b : out.blocks())
        if (b.front() < 0 && b.back() > 0) ++mixed;
      CHECK(mixed == img.marked.num_marked());
    }
    const auto expect = enumerate_symmetric(k, false);
    CHECK(images == std::set<SetPartition>(expect.begin(), expect.end()));
  }
}

TEST_CASE("symmetric gluing of odd-length images (worked example)") {
  const PsiImage img{marked({{2}, {1, 3}, {6}, {5, 7}, {4, 8}}, {2, 6, 7}),
                     T({{1, 3}, {2}})};
  CHECK(glue_symmetric_odd(img) ==
        SP({{-7, -5}, {-6, 2}, {-4, 0, 4}, {-3, -1, 1, 3}, {-2, 6}, {5, 7}}));
  const PsiImage tiny{marked({{1}}, {}), T({})};
  CHECK(glue_symmetric_odd(tiny) == SP({{0}}));
}

TEST_CASE("symmetric gluing of odd-length images is a bijection for k <= 3") {
  for (int k = 0; k <= 3; ++k) {
    std::set<SetPartition> images;
    for (const auto& img : all_images(k + 1, true)) {
      const auto out = glue_symmetric_odd(img);
      CHECK(images.insert(out).second);
    }
    const auto expect = enumerate_symmetric(k, true);
    CHECK(images == std::set<SetPartition>(expect.begin(), expect.end()));
  }
}

TEST_CASE("gluing two odd-length images (worked example)") {
  const PsiImage first{marked({{2}, {1, 3}, {6}, {5, 7}, {4, 8}}, {2, 6, 7}),
                       T({{1, 3}, {2}})};
  const PsiImage second{marked({{1, 4}, {5}, {3, 6}, {2, 7}}, {4, 5, 6}),
                        T({{1, 2}, {3}})};
  CHECK(glue_odd_pair(first, second) ==
        SP({{1, 3}, {2, 10}, {4, 8, 13}, {5, 7, 11, 14}, {6, 9, 12}}));
  const PsiImage tiny{marked({{1}}, {}), T({})};
  CHECK(glue_odd_pair(tiny, tiny) == SP({{1}}));
}

TEST_CASE("gluing odd-length image pairs is a bijection for k1 + k2 <= 4") {
  for (int k1 = 0; k1 <= 4; ++k1)
    for (int k2 = 0; k1 + k2 <= 4; ++k2) {
      std::set<SetPartition> images;
      const auto left = all_images(k1 + 1, true);
      const auto right = all_images(k2 + 1, true);
      for (const auto& a : left)
        for (const auto& b : right) {
          if (a.tableau.shape() != b.tableau.shape()) continue;
          CHECK(images.insert(glue_odd_pair(a, b)).second);
        }
      CHECK(Int(images.size()) == bell(k1 + k2 + 1));
    }
}

TEST_CASE("connecting gluing") {
  CHECK(glue_connecting(SP({{1}}), T({{1}}), SP({{1}}), T({{1}})) == SP({{1, 2}}));
  for (int k1 = 1; k1 <= 3; ++k1)
    for (int k2 = 1; k2 <= 3; ++k2) {
      std::set<SetPartition> images;
      for (int j = 1; j <= std::min(k1, k2); ++j) {
        std::vector<SetPartition> b1s, b2s;
        for (const auto& sp : enumerate_partitions(range_ground(k1)))
          if (sp.num_blocks() == j) b1s.push_back(sp);
        for (const auto& sp : enumerate_partitions(range_ground(k2)))
          if (sp.num_blocks() == j) b2s.push_back(sp);
        for (const auto& mu : partitions_of(j))
          oracles::for_each_syt(mu, [&](const Tableau& t1) {
            oracles::for_each_syt(mu, [&](const Tableau& t2) {
              for (const auto& b1 : b1s)
                for (const auto& b2 : b2s) {
                  const auto out = glue_connecting(b1, t1, b2, t2);
                  CHECK(images.insert(out).second);
                  for (const auto& blk : out.blocks()) {
                    CHECK(blk.front() <= k1);
                    CHECK(blk.back() > k1);
                  }
                }
            });
          });
      }
      const auto expect = enumerate_connecting(k1, k2);
      CHECK(images == std::set<SetPartition>(expect.begin(), expect.end()));
    }
}

TEST_CASE("connecting gluing of an image with itself is symmetric") {
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= k; ++j)
      for (const auto& sp : enumerate_partitions(range_ground(k))) {
        if (sp.num_blocks() != j) continue;
        for (const auto& mu : partitions_of(j))
          oracles::for_each_syt(mu, [&](const Tableau& t) {
            const auto out = glue_connecting(sp, t, sp, t);
            std::vector<std::vector<int>> mirrored;
            for (const auto& blk : out.blocks()) {
              std::vector<int> m;
              for (auto it = blk.rbegin(); it != blk.rend(); ++it)
                m.push_back(2 * k + 1 - *it);
              mirrored.push_back(std::move(m));
            }
            CHECK(SetPartition::from_blocks(std::move(mirrored)) == out);
          });
      }
}

TEST_CASE("type B construction (worked example)") {
  const auto out = type_b_from(SP({{2}, {1, 3}, {6}, {5, 7}, {4, 8}}), {1, 3, 2, 4});
  CHECK(out == SP({{2}, {-2}, {1, 3, -6}, {-1, -3, 6}, {5, 7}, {-5, -7}, {4, -4}}));
  CHECK(type_b_from(SP({{1}}), {}) == SetPartition{});
  CHECK_THROWS_AS(type_b_from(SP({{1}, {2}}), {2}), std::invalid_argument);
}

TEST_CASE("type B construction is a bijection for k <= 4") {
  for (int k = 0; k <= 4; ++k) {
    std::set<SetPartition> images;
    for (const auto& bp : enumerate_partitions(range_ground(k + 1)))
      for (const auto& sigma : involutions_of(bp.num_blocks() - 1)) {
        const auto out = type_b_from(bp, sigma);
        CHECK(images.insert(out).second);
        // zero block appears exactly when the top block had company
        const auto& top = bp.blocks()[bp.blocks_by_max().back()];
        int zero_blocks = 0;
        for (const auto& b : out.blocks()) {
          std::vector<int> neg;
          for (auto it = b.rbegin(); it != b.rend(); ++it) neg.push_back(-*it);
          if (neg == b) ++zero_blocks;
        }
        CHECK(zero_blocks == (top.size() > 1 ? 1 : 0));
      }
    const auto expect = enumerate_type_b(k);
    CHECK(images == std::set<SetPartition>(expect.begin(), expect.end()));
  }
}

TEST_CASE("collapsing the top block (worked example)") {
  const auto b = SP({{2, 5}, {1, 3, 6}, {4, 8}, {7, 9}});
  SUBCASE("fixed top block") {
    const auto [out, sigma] = collapse_block(b, {1, 3, 2, 4});
    CHECK(out == SP({{2, 5}, {1, 3, 6}, {4, 8}, {10}}));
    CHECK(sigma == std::vector<int>{1, 3, 2, 4});
  }
  SUBCASE("paired top block") {
    const auto [out, sigma] = collapse_block(b, {2, 1, 4, 3});
    CHECK(out == SP({{2, 5}, {1, 3, 6}, {4, 8, 10}}));
    CHECK(sigma == std::vector<int>{2, 1, 3});
  }
  SUBCASE("single block") {
    const auto [out, sigma] = collapse_block(SP({{1}}), {1});
    CHECK(out == SP({{2}}));
    CHECK(sigma == std::vector<int>{1});
  }
  CHECK_THROWS_AS(collapse_block(b, {2, 1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(collapse_block(b, {2, 3, 1, 4}), std::invalid_argument);
}

TEST_CASE("collapsing is injective and counts match the recurrence for k <= 4") {
  for (int k = 0; k <= 4; ++k) {
    std::set<std::pair<SetPartition, std::vector<int>>> images;
    long total = 0;
    for (const auto& b : enumerate_partitions(range_ground(k + 1)))
      for (const auto& sigma : involutions_of(b.num_blocks())) {
        const auto out = collapse_block(b, sigma);
        // the sentinel block must be a fixed point of the output involution
        const auto star_block = out.first.blocks_by_max().back();
        int pos = 0;
        for (int idx : out.first.blocks_by_max()) {
          ++pos;
          if (idx == star_block) break;
        }
        CHECK(out.second[pos - 1] == pos);
        CHECK(images.insert(out).second);
        ++total;
      }
    // pairs (partition of [k+1], block involution) are counted by a_{k+1}
    Int expect = 0;
    for (int j = 0; j <= k + 1; ++j) expect += stirling2(k + 1, j) * involutions(j);
    CHECK(Int(total) == expect);
  }
}
