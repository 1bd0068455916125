#ifndef TSPREAD_ORACLE_HPP
#define TSPREAD_ORACLE_HPP

#include <span>
#include <vector>

#include "tspread/kk.hpp"
#include "tspread/monomial.hpp"

/// Deliberately naive reference implementations, straight from the
/// definitions. Everything here throws TooLarge for n > 20.
namespace tspread::oracle {

/// All gap->=t d-subsets of [n] by recursion, >slex-descending.
std::vector<Monomial> enumerate_veronese(int d, const Context& ctx);

/// { v in M_{n,d,t} : v >=slex u }.
std::vector<Monomial> lex_set(const Monomial& u, const Context& ctx);
/// { v in M_{n,d,t} : v >=Borel u }.
std::vector<Monomial> borel_set(const Monomial& u, const Context& ctx);

/// Fixed point of the exchange moves x_i(u/x_j), i < j, that stay t-spread.
std::vector<Monomial> ss_closure(std::span<const Monomial> gens, const Context& ctx);

/// Every t-spread w = u*x_h over u in l, by trying all h.
std::vector<Monomial> shadow(std::span<const Monomial> l, const Context& ctx);

/// Smallest t-strongly stable ideal containing I, via per-degree closure of
/// every t-spread monomial of I.
MonomialIdeal ss_ideal(const MonomialIdeal& I);

/// f_j by testing divisibility of every t-spread monomial of degree j.
FtVector ft_vector(const MonomialIdeal& I);

}  // namespace tspread::oracle

#endif  // TSPREAD_ORACLE_HPP
