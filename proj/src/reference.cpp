#include "trimult/reference.hpp"

#include <algorithm>

namespace trimult::reference {

const std::vector<SolutionRow>& published_solutions() {
  static const std::vector<SolutionRow> rows{
      {0, 0, 0, 0, 0},          {1, 2, 3, 2, 6},           {2, 14, 20, 5, 14},
      {3, 84, 119, 39, 104},    {4, 492, 696, 87, 231},    {5, 2870, 4059, 629, 1665},
      {6, 16730, 23660, 1394, 3689},
  };
  return rows;
}

const std::map<unsigned, std::vector<std::string>>& published_combinations() {
  static const std::map<unsigned, std::vector<std::string>> rows{
      {2, {"1_"}},
      {3, {"1_", "1"}},
      {4, {"1_", "/", "1"}},
      {5, {"1_", "2", "2_", "1"}},
      {6, {"1_", "/", "/", "/", "1"}},
      {7, {"1_", "3", "2", "2_", "3_", "1"}},
      {8, {"1_", "/", "3_", "/", "3", "/", "1"}},
      {9, {"1_", "4", "/", "2", "2_", "/", "4_", "1"}},
      {10, {"1_", "/", "3", "/", "5_", "/", "3_", "/", "1"}},
      {11, {"1_", "5", "4_", "3_", "2", "2_", "3", "4", "5_", "1"}},
      {12, {"1_", "/", "/", "/", "3", "/", "4_", "/", "/", "/", "1"}},
  };
  return rows;
}

const std::vector<CombinationAnnotation>& combination_annotations() {
  static const std::vector<CombinationAnnotation> notes{
      {10, 3, "smallest m is 2_; printed 3 also satisfies m(m*nu+1) = 0 mod n", true},
      {10, 5, "gcd(5, 10) = 5; the cell should be /", false},
      {10, 7, "smallest m is 2; printed 3_ also satisfies m(m*nu-1) = 0 mod n", true},
      {12, 7, "smallest m is 3_; printed 4_ also satisfies m(m*nu-1) = 0 mod n", true},
  };
  return notes;
}

const std::vector<ExpressionRow>& published_expressions() {
  static const std::vector<ExpressionRow> rows{
      {2, 1, 1, {1, true}, {1, false}, "E21"},
      {3, 1, 1, {1, true}, {2, false}, "E31"},
      {3, 2, 1, {1, false}, {2, true}, "E32"},
      {4, 1, 1, {1, true}, {3, false}, "E41"},
      {4, 3, 1, {1, false}, {3, true}, "E43"},
      {5, 1, 1, {1, true}, {4, false}, "E51"},
      {5, 2, 2, {2, false}, {3, true}, "E52"},
      {5, 3, 2, {2, true}, {3, false}, "E53"},
      {5, 4, 1, {1, false}, {4, true}, "E54"},
      {6, 1, 1, {1, true}, {5, false}, "E61"},
      {6, 5, 1, {1, false}, {5, true}, "E65"},
      {7, 1, 1, {1, true}, {6, false}, "E71"},
      {7, 2, 2, {3, false}, {4, true}, "E72"},
      {7, 3, 3, {2, false}, {5, true}, "E73"},
      {7, 4, 3, {2, true}, {5, false}, "E74"},
      {7, 5, 2, {3, true}, {4, false}, "E75"},
      {7, 6, 1, {1, false}, {6, true}, "E76"},
      {8, 1, 1, {1, true}, {7, false}, "E81"},
      {8, 3, 3, {3, true}, {5, false}, "E83"},
      {8, 5, 3, {3, false}, {5, true}, "E85"},
      {8, 7, 1, {1, false}, {7, true}, "E87"},
      {9, 1, 1, {1, true}, {8, false}, "E91"},
      {9, 2, 4, {4, false}, {5, true}, "E92"},
      {9, 4, 2, {2, false}, {7, true}, "E94"},
      {9, 5, 2, {2, true}, {7, false}, "E95"},
      {9, 7, 4, {4, true}, {5, false}, "E97"},
      {9, 8, 1, {1, false}, {8, true}, "E98"},
      {10, 1, 1, {1, true}, {9, false}, "E101"},
      {10, 3, 3, {3, false}, {7, true}, "E103"},
      {10, 7, 3, {3, true}, {7, false}, "E107"},
      {10, 9, 1, {1, false}, {9, true}, "E109"},
      {11, 1, 1, {1, true}, {10, false}, "E111"},
      {11, 2, 5, {5, false}, {6, true}, "E112"},
      {11, 3, 4, {4, true}, {7, false}, "E113"},
      {11, 4, 3, {3, true}, {8, false}, "E114"},
      {11, 5, 2, {2, false}, {9, true}, "E115"},
      {11, 6, 2, {2, true}, {9, false}, "E116"},
      {11, 7, 3, {3, false}, {8, true}, "E117"},
      {11, 8, 4, {4, false}, {7, true}, "E118"},
      {11, 9, 5, {5, true}, {6, false}, "E119"},
      {11, 10, 1, {1, false}, {10, true}, "E1110"},
      {12, 1, 1, {1, true}, {11, false}, "E121"},
      {12, 5, 3, {3, false}, {9, true}, "E125"},
      {12, 7, 4, {4, true}, {8, false}, "E127"},
      {12, 11, 1, {1, false}, {11, true}, "E1211"},
  };
  return rows;
}

const std::vector<ResidueRow>& published_residues() {
  static const std::vector<ResidueRow> rows{
      {2, {0, 1}, "R1,R6,E21"},
      {3, {0, 2}, "R1,E31"},
      {5, {0, 4}, "R1,R3,E51"},
      {6, {0, 2, 3, 5}, "R6,E21,E32,E61"},
      {7, {0, 6}, "R1,R5,E71"},
      {8, {0, 7}, "R2,R4,E81"},
      {10, {0, 4, 5, 9}, "E21,E52,E101"},
      {11, {0, 10}, "R1,E111"},
      {12, {0, 3, 8, 11}, "R6,E31,E43,E121"},
      {13, {0, 12}, "R1"},
      {14, {0, 6, 7, 13}, "E21,E72"},
      {15, {0, 5, 9, 14}, "E32,E53"},
      {17, {0, 16}, "R1,R3"},
      {18, {0, 8, 9, 17}, "E21,E92"},
      {19, {0, 18}, "R1"},
      {20, {0, 4, 15, 19}, "R6,E41,E54"},
      {21, {0, 6, 14, 20}, "E31,E73"},
      {22, {0, 10, 11, 21}, "E21,E112"},
      {23, {0, 22}, "R1,R5"},
      {24, {0, 23}, "R4"},
      {26, {0, 12, 13, 25}, "E21"},
      {27, {0, 26}, "R2"},
      {28, {0, 7, 20, 27}, "E43,E74"},
      {29, {0, 28}, "R1"},
      {30, {0, 5, 24, 29}, "R6,E51,E65"},
      {31, {0, 30}, "R1"},
      {32, {0, 31}, "R2"},
      {33, {0, 11, 21, 32}, "E32,E113"},
      {34, {0, 16, 17, 33}, "E21"},
      {35, {0, 14, 20, 34}, "E52,E75"},
      {37, {0, 36}, "R1,R3"},
      {38, {0, 18, 19, 37}, "E21"},
      {39, {0, 12, 26, 38}, "E31"},
      {40, {0, 15, 24, 39}, "E53,E85"},
      {41, {0, 40}, "R1"},
      {42, {0, 6, 35, 41}, "R6,E61,E76"},
      {43, {0, 42}, "R1"},
      {44, {0, 11, 32, 43}, "E43,E114"},
      {45, {0, 9, 35, 44}, "E54,E95"},
      {46, {0, 22, 23, 245}, "E21"},
      {47, {0, 46}, "R1,R5"},
      {48, {0, 47}, "R4"},
      {50, {0, 24, 25, 49}, "E21"},
      {51, {0, 17, 33, 50}, "E32"},
      {52, {0, 12, 39, 51}, "E41"},
      {53, {0, 52}, "R1"},
      {54, {0, 26, 27, 53}, "E21"},
      {55, {0, 10, 44, 54}, "E51,E115"},
      {56, {0, 7, 48, 55}, "R6,E71,E87"},
      {57, {0, 18, 38, 56}, "E31"},
      {58, {0, 28, 29, 57}, "E21"},
      {59, {0, 58}, "R1"},
      {60, {0, 15, 44, 59}, "E43,E125"},
      {61, {0, 60}, "R1"},
      {62, {0, 30, 31, 61}, "E21"},
      {63, {0, 27, 35, 62}, "E72,E97"},
      {65, {0, 64}, "R3"},
      {66, {0, 11, 21, 32, 33, 44, 54, 65}, "E21+E31+E65+E116"},
      {67, {0, 66}, "R1"},
      {68, {0, 16, 51, 67}, "E41"},
      {69, {0, 23, 45, 68}, "E32"},
      {70, {0, 14, 20, 34, 35, 49, 55, 69}, "E21+E54+E73+E107"},
      {71, {0, 70}, "R1"},
      {72, {0, 8, 63, 71}, "R6,E81,E98"},
      {73, {0, 72}, "R1"},
      {74, {0, 73}, "?"},
      {75, {0, 24, 50, 74}, "E31"},
      {76, {0, 19, 56, 75}, "E43"},
      {77, {0, 21, 55, 76}, "E74,E117"},
      {78, {0, 12, 26, 38, 39, 51, 65, 77}, "E21+E32+E61"},
      {79, {0, 78}, "R1,R5"},
      {80, {0, 79}, "R4"},
      {82, {0, 40, 41, 81}, "E21"},
      {83, {0, 82}, "R1"},
      {84, {0, 27, 56, 83}, "E31,E127"},
      {85, {0, 34, 50, 84}, "E52"},
      {86, {0, 42, 43, 85}, "E21"},
      {87, {0, 29, 57, 86}, "E32"},
      {88, {0, 32, 55, 87}, "E83,E118"},
      {89, {0, 88}, "R1"},
      {90, {0, 9, 80, 89}, "R6,E91,E109"},
      {91, {0, 13, 77, 90}, "E75"},
      {92, {0, 23, 68, 91}, "E43"},
      {93, {0, 30, 62, 92}, "E31"},
      {94, {0, 46, 47, 93}, "E21"},
      {95, {0, 19, 75, 94}, "E54"},
      {96, {0, 32, 63, 95}, "E32"},
      {97, {0, 96}, "R1"},
      {98, {0, 48, 49, 97}, "E21"},
      {99, {0, 44, 54, 98}, "E92,E119"},
      {101, {0, 100}, "R1,R3"},
      {102, {0, 50, 51, 102}, "E21"},
      {103, {0, 102}, "R1"},
      {104, {0, 103}, "?"},
      {105, {0, 14, 20, 35, 69, 84, 90, 104}, "E32+E51+E71"},
      {106, {0, 52, 53, 105}, "E21"},
      {107, {0, 106}, "R1"},
      {108, {0, 27, 80, 107}, "E43"},
      {109, {0, 108}, "R1"},
      {110, {0, 10, 99, 109}, "R6,E101,E1110"},
      {111, {0, 36, 74, 110}, "E31"},
      {112, {0, 48, 63, 111}, "E72"},
      {113, {0, 112}, "R1"},
      {114, {0, 56, 57, 113}, "E21"},
      {115, {0, 45, 69, 114}, "E53"},
      {116, {0, 28, 87, 115}, "E41"},
      {117, {0, 26, 90, 116}, "E94"},
      {118, {0, 58, 59, 117}, "E21"},
      {119, {0, 118}, "R1,R5"},
      {120, {0, 15, 104, 119}, "E87"},
  };
  return rows;
}

const std::vector<ResidueErratum>& residue_errata() {
  static const std::vector<ResidueErratum> errata{{46, 245, 45}, {102, 102, 101}};
  return errata;
}

const ResidueRow* residue_row(std::uint64_t k) {
  const auto& rows = published_residues();
  auto it = std::lower_bound(rows.begin(), rows.end(), k,
                             [](const ResidueRow& row, std::uint64_t v) { return row.k < v; });
  return (it != rows.end() && it->k == k) ? &*it : nullptr;
}

std::vector<std::uint64_t> corrected_residues(std::uint64_t k) {
  const ResidueRow* row = residue_row(k);
  if (!row) return {};
  std::vector<std::uint64_t> mu = row->mu;
  for (const auto& e : residue_errata())
    if (e.k == k) std::replace(mu.begin(), mu.end(), e.printed, e.corrected);
  std::sort(mu.begin(), mu.end());
  return mu;
}

const std::vector<SupersessionPair>& published_supersessions() {
  static const std::vector<SupersessionPair> pairs{
      {24, "R4", "E32"},   {24, "R4", "E83"},   {30, "R6", "E21"},   {30, "R6", "E31"},
      {30, "R6", "E103"},  {30, "E51", "E103"}, {30, "E65", "E103"}, {42, "R6", "E21"},
      {42, "R6", "E32"},   {48, "R4", "E31"},   {56, "R6", "E43"},   {60, "E43", "E32"},
      {60, "E43", "E52"},  {65, "R3", "E53"},   {72, "R6", "E43"},   {80, "R4", "E51"},
      {84, "E31", "E41"},  {84, "E31", "E75"},  {90, "R6", "E21"},   {90, "R6", "E53"},
      {102, "E21", "E31"}, {102, "E21", "E65"}, {110, "R6", "E21"},  {110, "R6", "E52"},
      {114, "E21", "E32"}, {114, "E21", "E61"}, {119, "R1", "E73"},  {119, "R5", "E73"},
      {120, "E87", "R4"},  {120, "E87", "E31"}, {120, "E87", "E54"},
  };
  return pairs;
}

const std::vector<SupersessionErratum>& supersession_errata() {
  static const std::vector<SupersessionErratum> errata{
      {{56, "R6", "E43"}, "56/4 = 14 gives nu = 2, not co-prime with 4; E43 cannot fire"},
      {{72, "R6", "E43"}, "72/4 = 18 gives nu = 2, not co-prime with 4; E43 cannot fire"},
      {{119, "R1", "E73"}, "119 = 7 * 17 is not prime; R1 cannot fire"},
  };
  return errata;
}

}  // namespace trimult::reference
