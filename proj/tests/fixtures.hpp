#ifndef TSPREAD_TESTS_FIXTURES_HPP
#define TSPREAD_TESTS_FIXTURES_HPP

#include <vector>

#include "tspread/betti.hpp"
#include "tspread/monomial.hpp"

namespace fixtures {

using tspread::Monomial;

// n = 25, t = 3: corners {(6,2),(5,4),(4,5),(3,7)} with values (2,1,3,2).
inline tspread::CornerConfig betti_corners() {
  return {{{6, 2}, {5, 4}, {4, 5}, {3, 7}}, {2, 1, 3, 2}};
}

inline std::vector<Monomial> betti_basic() {
  return {{1, 10},
          {2, 10},
          {3, 6, 9, 15},
          {3, 6, 10, 13, 17},
          {3, 6, 10, 14, 17},
          {3, 6, 11, 14, 17},
          {3, 7, 10, 13, 16, 19, 22},
          {4, 7, 10, 13, 16, 19, 22}};
}

inline std::vector<Monomial> betti_ideal() {
  return {{1, 4},
          {1, 5},
          {1, 6},
          {1, 7},
          {1, 8},
          {1, 9},
          {1, 10},
          {2, 5},
          {2, 6},
          {2, 7},
          {2, 8},
          {2, 9},
          {2, 10},
          {3, 6, 9, 12},
          {3, 6, 9, 13},
          {3, 6, 9, 14},
          {3, 6, 9, 15},
          {3, 6, 10, 13, 16},
          {3, 6, 10, 13, 17},
          {3, 6, 10, 14, 17},
          {3, 6, 11, 14, 17},
          {3, 7, 10, 13, 16, 19, 22},
          {4, 7, 10, 13, 16, 19, 22}};
}

// n = 8, t = 2.
inline std::vector<Monomial> kk_ideal() {
  return {{1, 3, 5}, {1, 3, 6}, {1, 3, 7}, {1, 3, 8}, {1, 4, 6},
          {1, 4, 7}, {1, 4, 8}, {2, 4, 6}, {2, 4, 7}, {2, 4, 8}};
}

inline std::vector<Monomial> kk_lex_ideal() {
  return {{1, 3, 5}, {1, 3, 6}, {1, 3, 7}, {1, 3, 8}, {1, 4, 6}, {1, 4, 7},
          {1, 4, 8}, {1, 5, 7}, {1, 5, 8}, {1, 6, 8}, {2, 4, 6, 8}};
}

// B_2[(1,5,7),(2,5,8)] at n = 9.
inline std::vector<Monomial> borel_segment() {
  return {{1, 5, 7}, {1, 5, 8}, {2, 4, 6}, {2, 4, 7}, {2, 4, 8}, {2, 5, 7}, {2, 5, 8}};
}

}  // namespace fixtures

#endif  // TSPREAD_TESTS_FIXTURES_HPP
