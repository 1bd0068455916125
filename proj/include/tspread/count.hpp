#ifndef TSPREAD_COUNT_HPP
#define TSPREAD_COUNT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "tspread/binomial.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// |M_{n,d,t}| = C(n-(d-1)(t-1), d); zero when the set is empty.
BigInt card_veronese(int d, const Context& ctx);

/// C(n,q) = C(n-1,q-1) + C(n-2,q-1) + ... + C(q-1,q-1), as the n-q+1 terms.
/// Requires n >= q >= 1.
std::vector<BinomialTerm> binomial_decomposition(long n, long q);

/// Bookkeeping for count_t_lex_mon: the number of binomial coefficients
/// added (i_d - (d-1)t for u in M_{n,d,t}).
struct LexCountStats {
  std::uint64_t terms = 0;
};

/// |L_t{u}| through nested binomial decompositions, without building L_t{u}.
BigInt count_t_lex_mon(const Monomial& u, const Context& ctx, LexCountStats* stats = nullptr);

/// |B_t{u}| as the multi-index sum over (s_1, ..., s_{d-1}) of
/// C(max(u) - (d-1)(t-1) - s_1 - ... - s_{d-1}, 1).
/// OpenMP-parallel over leading prefixes of the multi-index.
BigInt count_t_ss_mon(const Monomial& u, const Context& ctx);

/// C_1(a) = a; C_q(a_1..a_q) = sum_{r=0}^{a_q-1} C_{q-1}(a_1-r, ..., a_{q-1}-r).
/// Arguments must be positive and nonincreasing.
BigInt cq_operator(std::span<const long> args);

/// Number of innermost terms summed by count_t_ss_mon:
/// C_{d-1}(i_{d-1}-(d-2)t, ..., i_2-t, i_1). Requires deg u >= 2.
BigInt count_terms_ss(const Monomial& u, const Context& ctx);

namespace serial {

/// Reference odometer for count_t_ss_mon. When `innermost_additions` is
/// given it receives the number of innermost terms added.
BigInt count_t_ss_mon(const Monomial& u, const Context& ctx,
                      std::uint64_t* innermost_additions = nullptr);

}  // namespace serial

}  // namespace tspread

#endif  // TSPREAD_COUNT_HPP
