#include "tspread/kk.hpp"

#include <algorithm>

#include "tspread/construct.hpp"
#include "tspread/count.hpp"
#include "tspread/error.hpp"

namespace tspread {

FtVector ft_vector(const MonomialIdeal& I) {
  auto comps = t_spread_components(I);
  FtVector f;
  for (std::size_t j = 0; j < comps.size(); ++j)
    f.values.push_back(card_veronese(static_cast<int>(j), I.context()) - comps[j].size());
  return f;
}

BinomialExpansion t_macaulay_expansion(const BigInt& a, int n, int d, int t, bool shift) {
  const Context ctx(n, t);
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "Macaulay expansion needs d >= 1");
  if (a < 0 || a > card_veronese(d, ctx))
    throw Error(ErrorCode::OutOfRange, "a must lie between 0 and |M_{n,d,t}|");

  BinomialExpansion e;
  BigInt rest = a;
  for (long k = d; k >= 1 && rest > 0; --k) {
    long top = k;
    while (binomial(top + 1, k) <= rest) ++top;
    rest -= binomial(top, k);
    e.terms.push_back({top, k});
  }
  if (!shift) return e;

  BinomialExpansion shifted;
  for (const auto& term : e.terms) {
    BinomialTerm s{term.top - (t - 1), term.bottom + 1};
    if (s.top >= s.bottom) shifted.terms.push_back(s);
  }
  return shifted;
}

BigInt solve_binomial_expansion(const BinomialExpansion& e) {
  BigInt sum = 0;
  for (const auto& term : e.terms) sum += term.value();
  return sum;
}

bool is_ft_vector(const FtVector& f, const Context& ctx) {
  if (f.size() == 0 || f[0] != 1) return false;
  for (std::size_t j = 1; j < f.size(); ++j) {
    const int d = static_cast<int>(j);
    if (f[j] < 0 || f[j] > card_veronese(d, ctx)) return false;
    if (j >= 2) {
      const BigInt bound = solve_binomial_expansion(
          t_macaulay_expansion(f[j - 1], ctx.n(), d - 1, ctx.t(), true));
      if (f[j] > bound) return false;
    }
  }
  return true;
}

MonomialIdeal t_lex_ideal_from_f(const FtVector& f, const Context& ctx) {
  if (!is_ft_vector(f, ctx)) throw Error(ErrorCode::InvalidFtVector, "expected a valid ft-vector");
  std::vector<Monomial> gens;
  std::vector<Monomial> previous;
  for (int d = 1; d <= ctx.max_degree(); ++d) {
    const auto j = static_cast<std::size_t>(d);
    const BigInt fj = j < f.size() ? f[j] : BigInt(0);
    const BigInt card = card_veronese(d, ctx);
    const auto size = static_cast<std::size_t>(card - fj);
    auto segment = initial_lex_segment(d, size, ctx);
    const auto shadow = t_shadow_set(previous, ctx);
    for (const auto& w : segment)
      if (!std::binary_search(shadow.begin(), shadow.end(), w)) gens.push_back(w);
    if (!std::includes(segment.begin(), segment.end(), shadow.begin(), shadow.end()))
      throw Error(ErrorCode::InvalidFtVector, "expected a valid ft-vector");
    // A full component forces every higher one.
    if (fj == 0) break;
    previous = std::move(segment);
  }
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal t_lex_ideal_of(const MonomialIdeal& I) {
  return t_lex_ideal_from_f(ft_vector(I), I.context());
}

}  // namespace tspread
