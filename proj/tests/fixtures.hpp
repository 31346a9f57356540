#pragma once

// Frozen worked-example data shared by the unit and acceptance suites.

#include <utility>
#include <vector>

#include "vactab/bijections.hpp"

namespace vactab::fixtures {

inline VacillatingTableau make_walk(WalkVariant v, std::vector<std::vector<int>> shapes,
                                    int n = 0) {
  std::vector<IntegerPartition> s;
  for (auto& parts : shapes) s.push_back(IntegerPartition(std::move(parts)));
  return VacillatingTableau(v, std::move(s), n);
}

inline MarkedSetPartition make_marked(std::vector<std::vector<int>> blocks,
                                      std::vector<int> marked_maxima) {
  SetPartition p = SetPartition::from_blocks(std::move(blocks));
  std::vector<int> idx;
  for (int m : marked_maxima)
    for (int i = 0; i < p.num_blocks(); ++i)
      if (p.blocks()[i].back() == m) idx.push_back(i);
  return MarkedSetPartition(std::move(p), std::move(idx));
}

// The length-14 simplified walk whose image is ({1,5*|2*|3,4,7|6*}, [[1,2],[3]]).
inline VacillatingTableau long_example_walk() {
  return make_walk(WalkVariant::Simplified,
                   {{}, {}, {1}, {1}, {1, 1}, {1, 1}, {2, 1}, {1, 1}, {2, 1}, {2},
                    {2, 1}, {2, 1}, {2, 1, 1}, {2, 1}, {2, 1}});
}

inline PsiImage long_example_image() {
  return {make_marked({{1, 5}, {2}, {3, 4, 7}, {6}}, {2, 5, 6}),
          Tableau({{1, 2}, {3}})};
}

struct TableRow {
  VacillatingTableau walk;
  MarkedSetPartition image;
  Tableau tableau;
};

// Six simplified walks of shape (1,1), length 6, with psi images.
inline std::vector<TableRow> table1_rows() {
  const Tableau column({{1}, {2}});
  auto svt = [](std::vector<std::vector<int>> shapes) {
    return make_walk(WalkVariant::Simplified, std::move(shapes));
  };
  return {
      {svt({{}, {}, {1}, {}, {1}, {1}, {1, 1}}), make_marked({{1, 2}, {3}}, {2, 3}), column},
      {svt({{}, {}, {1}, {1}, {1, 1}, {1}, {1, 1}}), make_marked({{1, 3}, {2}}, {2, 3}),
       column},
      {svt({{}, {}, {1}, {1}, {2}, {1}, {1, 1}}), make_marked({{1}, {2, 3}}, {1, 3}), column},
      {svt({{}, {}, {1}, {1}, {1, 1}, {1, 1}, {1, 1}}),
       make_marked({{1}, {2}, {3}}, {1, 2}), column},
      {svt({{}, {}, {}, {}, {1}, {1}, {1, 1}}), make_marked({{1}, {2}, {3}}, {2, 3}), column},
      {svt({{}, {}, {1}, {1}, {1}, {1}, {1, 1}}), make_marked({{1}, {2}, {3}}, {1, 3}),
       column}};
}

// Twelve limiting walks of shape (2,1), length 8, with their (B, T) pairs.
inline std::vector<TableRow> table2_rows() {
  const Tableau t12({{1, 2}, {3}});
  const Tableau t13({{1, 3}, {2}});
  auto lvt = [](std::vector<std::vector<int>> shapes) {
    return make_walk(WalkVariant::Limiting, std::move(shapes));
  };
  auto all_marked = [](std::vector<std::vector<int>> blocks) {
    SetPartition p = SetPartition::from_blocks(std::move(blocks));
    std::vector<int> idx(p.num_blocks());
    for (int i = 0; i < p.num_blocks(); ++i) idx[i] = i;
    return MarkedSetPartition(std::move(p), std::move(idx));
  };
  return {
      {lvt({{}, {}, {1}, {}, {1}, {1}, {2}, {2}, {2, 1}}), all_marked({{1, 2}, {3}, {4}}),
       t12},
      {lvt({{}, {}, {1}, {1}, {1, 1}, {1}, {2}, {2}, {2, 1}}),
       all_marked({{1, 3}, {2}, {4}}), t12},
      {lvt({{}, {}, {1}, {1}, {1, 1}, {1, 1}, {2, 1}, {2}, {2, 1}}),
       all_marked({{1, 4}, {2}, {3}}), t12},
      {lvt({{}, {}, {1}, {1}, {2}, {1}, {2}, {2}, {2, 1}}), all_marked({{2, 3}, {1}, {4}}),
       t12},
      {lvt({{}, {}, {1}, {1}, {2}, {2}, {2, 1}, {2}, {2, 1}}),
       all_marked({{2, 4}, {1}, {3}}), t12},
      {lvt({{}, {}, {1}, {1}, {2}, {2}, {3}, {2}, {2, 1}}), all_marked({{3, 4}, {1}, {2}}),
       t12},
      {lvt({{}, {}, {1}, {}, {1}, {1}, {1, 1}, {1, 1}, {2, 1}}),
       all_marked({{1, 2}, {3}, {4}}), t13},
      {lvt({{}, {}, {1}, {1}, {1, 1}, {1}, {1, 1}, {1, 1}, {2, 1}}),
       all_marked({{1, 3}, {2}, {4}}), t13},
      {lvt({{}, {}, {1}, {1}, {1, 1}, {1, 1}, {1, 1, 1}, {1, 1}, {2, 1}}),
       all_marked({{1, 4}, {2}, {3}}), t13},
      {lvt({{}, {}, {1}, {1}, {2}, {1}, {1, 1}, {1, 1}, {2, 1}}),
       all_marked({{2, 3}, {1}, {4}}), t13},
      {lvt({{}, {}, {1}, {1}, {2}, {2}, {2, 1}, {1, 1}, {2, 1}}),
       all_marked({{2, 4}, {1}, {3}}), t13},
      {lvt({{}, {}, {1}, {1}, {1, 1}, {1, 1}, {2, 1}, {1, 1}, {2, 1}}),
       all_marked({{3, 4}, {1}, {2}}), t13}};
}

}  // namespace vactab::fixtures
