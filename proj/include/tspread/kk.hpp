#ifndef TSPREAD_KK_HPP
#define TSPREAD_KK_HPP

#include <vector>

#include "tspread/binomial.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// f_0, f_1, ..., f_r: numbers of t-spread monomials outside an ideal, per degree.
struct FtVector {
  std::vector<BigInt> values;

  std::size_t size() const noexcept { return values.size(); }
  const BigInt& operator[](std::size_t j) const { return values[j]; }

  friend bool operator==(const FtVector&, const FtVector&) = default;
};

/// A sum of binomial coefficients C(top, bottom).
struct BinomialExpansion {
  std::vector<BinomialTerm> terms;

  friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;
};

/// f_j = |M_{n,j,t}| - |[I_j]_t| for j = 0..max_degree. Never truncated.
FtVector ft_vector(const MonomialIdeal& I);

/// Greedy d-th Macaulay expansion a = C(a_d,d) + ... + C(a_j,j),
/// a_d > ... > a_j >= j >= 1. With `shift`, each C(a_i,i) becomes
/// C(a_i-(t-1), i+1); vanishing terms are dropped.
/// Requires 0 <= a <= |M_{n,d,t}| and d >= 1.
BinomialExpansion t_macaulay_expansion(const BigInt& a, int n, int d, int t, bool shift);

BigInt solve_binomial_expansion(const BinomialExpansion& e);

/// f_0 = 1, f_1 <= n, every f_j <= |M_{n,j,t}|, and
/// f_{d+1} <= solve(t_macaulay_expansion(f_d, n, d, t, true)).
bool is_ft_vector(const FtVector& f, const Context& ctx);

/// The t-lex ideal whose degree-j component is the initial >slex segment of
/// size |M_{n,j,t}| - f_j. Degrees past the end of f count as f_j = 0, so
/// the ideal contains every t-spread monomial there. Throws InvalidFtVector.
MonomialIdeal t_lex_ideal_from_f(const FtVector& f, const Context& ctx);

/// t_lex_ideal_from_f(ft_vector(I)).
MonomialIdeal t_lex_ideal_of(const MonomialIdeal& I);

}  // namespace tspread

#endif  // TSPREAD_KK_HPP
