#include <algorithm>

#include "twsolve/pipeline.hpp"

namespace tws {

// Complete solution tables of the twelve equations for 2 <= b <= 10,
// reproduced independently by enumerate_solutions (and cross-checked by the
// acceptance suite).
const std::vector<Triple>& expected_solutions(const EquationFamily& family) {
  using S = SequenceId;
  static const std::vector<Triple> padovan_tf = {{7, 2, 1}};
  static const std::vector<Triple> padovan_ts = {
      {8, 2, 1}, {12, 4, 1}, {14, 3, 2}, {15, 2, 4}, {19, 5, 2}};
  static const std::vector<Triple> padovan_wf = {
      {0, 2, 1}, {1, 2, 1}, {2, 2, 1}, {5, 2, 2}, {7, 3, 1}, {8, 2, 3}};
  static const std::vector<Triple> padovan_ws = {
      {5, 2, 1},  {7, 2, 2},  {8, 3, 1},  {9, 2, 3},
      {12, 5, 1}, {15, 4, 2}, {16, 2, 6}, {26, 6, 3}};
  static const std::vector<Triple> perrin_tf = {{5, 2, 1}, {6, 2, 1}, {12, 5, 1}};
  static const std::vector<Triple> perrin_ts = {{7, 2, 1}};
  static const std::vector<Triple> perrin_wf = {
      {0, 2, 2}, {3, 2, 2}, {5, 3, 1}, {6, 3, 1},
      {7, 2, 3}, {10, 3, 2}, {12, 6, 1}};
  static const std::vector<Triple> perrin_ws = {
      {0, 2, 1}, {3, 2, 1}, {5, 2, 2}, {6, 2, 2}, {7, 3, 1}, {10, 2, 4}};
  static const std::vector<Triple> narayana_tf = {{9, 4, 1}, {11, 6, 1}};
  static const std::vector<Triple> narayana_ts = {{8, 2, 2}, {8, 3, 1}, {22, 7, 3}};
  static const std::vector<Triple> narayana_wf = {
      {0, 2, 1}, {1, 2, 1}, {2, 2, 1}, {4, 2, 2}, {9, 5, 1}, {11, 7, 1}};
  static const std::vector<Triple> narayana_ws = {
      {4, 2, 1}, {7, 2, 3}, {8, 4, 1}, {9, 3, 2}, {14, 2, 7}};

  const bool thabit = family.base_sign == BaseSign::Plus;
  const bool first = family.tail_sign == TailSign::Minus;
  switch (family.sequence) {
    case S::Padovan:
      return thabit ? (first ? padovan_tf : padovan_ts)
                    : (first ? padovan_wf : padovan_ws);
    case S::Perrin:
      return thabit ? (first ? perrin_tf : perrin_ts)
                    : (first ? perrin_wf : perrin_ws);
    case S::Narayana:
      return thabit ? (first ? narayana_tf : narayana_ts)
                    : (first ? narayana_wf : narayana_ws);
  }
  throw DomainError("unknown family");
}

std::vector<Triple> expected_solutions_in_range(const EquationFamily& family,
                                                long b_min, long b_max) {
  std::vector<Triple> out;
  for (const auto& t : expected_solutions(family))
    if (t.b >= b_min && t.b <= b_max) out.push_back(t);
  std::sort(out.begin(), out.end(), [](const Triple& x, const Triple& y) {
    return std::tie(x.b, x.n, x.l) < std::tie(y.b, y.n, y.l);
  });
  return out;
}

}  // namespace tws
