#ifndef TSPREAD_CONSTRUCT_HPP
#define TSPREAD_CONSTRUCT_HPP

#include <optional>
#include <span>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

enum class SegmentKind { Lex, Borel };

/// An interval of M_{n,d,t}, listed strictly >slex-descending.
struct Segment {
  SegmentKind kind = SegmentKind::Lex;
  std::vector<Monomial> monomials;

  std::size_t size() const noexcept { return monomials.size(); }
  bool empty() const noexcept { return monomials.empty(); }
  const Monomial& first() const { return monomials.front(); }
  const Monomial& last() const { return monomials.back(); }
  auto begin() const noexcept { return monomials.begin(); }
  auto end() const noexcept { return monomials.end(); }
};

// Shadows

/// Shad_t(u): the t-spread products u*x_h, h running over
/// [1, i_1-t] u [i_1+t, i_2-t] u ... u [i_d+t, n]; >slex-descending.
std::vector<Monomial> t_shadow(const Monomial& u, const Context& ctx);

/// Union of the shadows of equal-degree t-spread monomials, deduplicated,
/// >slex-descending. OpenMP-parallel over the input.
std::vector<Monomial> t_shadow_set(std::span<const Monomial> l, const Context& ctx);

// Lex segments

/// The greatest t-spread monomial strictly below u in >slex, or nullopt when
/// u = min M_{n,d,t}.
std::optional<Monomial> t_next_lex(const Monomial& u, const Context& ctx);

/// L_t[v,u] = { w in M_{n,d,t} : v >=slex w >=slex u }.
Segment t_lex_seg(const Monomial& v, const Monomial& u, const Context& ctx);
/// L_t{u} = L_t[max M_{n,d,t}, u].
Segment t_lex_mon(const Monomial& u, const Context& ctx);
/// True iff the set of l is L_t[max l, min l].
bool is_t_lex_seg(std::span<const Monomial> l, const Context& ctx);

// Borel (t-strongly stable) segments

/// Successor of w inside B_t[w,u]: the greatest member of the segment below
/// w, or nullopt when w == u. Requires w >=Borel u.
std::optional<Monomial> t_next_borel(const Monomial& w, const Monomial& u, const Context& ctx);

/// B_t[v,u]. Throws NotInBorelSet when v is not >=Borel u.
Segment t_ss_seg(const Monomial& v, const Monomial& u, const Context& ctx);
/// B_t{u} = B_t[max M_{n,d,t}, u].
Segment t_ss_mon(const Monomial& u, const Context& ctx);
/// B_t{N}: union of B_t{u} over N, deduplicated, >slex-descending.
std::vector<Monomial> t_ss_set(std::span<const Monomial> gens, const Context& ctx);
/// True iff the set of l is B_t[max l, min l].
bool is_t_ss_seg(std::span<const Monomial> l, const Context& ctx);
/// True iff l is closed upward under >=Borel inside M_{n,d,t}.
bool is_t_ss_set(std::span<const Monomial> l, const Context& ctx);

// Veronese sets

/// M_{n,d,t}, >slex-descending; empty when 1+(d-1)t > n.
std::vector<Monomial> t_veronese(int d, const Context& ctx);
MonomialIdeal t_veronese_ideal(int d, const Context& ctx);

/// The first `count` members of M_{n,d,t} under >slex.
std::vector<Monomial> initial_lex_segment(int d, std::size_t count, const Context& ctx);

// Ideal-level constructions

/// Throws NotTSpread unless every generator of I is t-spread.
void require_t_spread(const MonomialIdeal& I);

/// [I_j]_t for j = 0..max_degree, accumulated as Shad_t([I_{j-1}]_t) u G(I)_j.
std::vector<std::vector<Monomial>> t_spread_components(const MonomialIdeal& I);

/// Smallest t-strongly stable ideal containing I.
MonomialIdeal t_ss_ideal(const MonomialIdeal& I);
/// Every admissible exchange move x_i(u/x_j) on a generator stays in I.
bool is_t_ss_ideal(const MonomialIdeal& I);
/// Every [I_j]_t is an initial >slex segment of M_{n,j,t}.
bool is_t_lex_ideal(const MonomialIdeal& I);

namespace serial {

/// Single-threaded reference for tspread::t_shadow_set.
std::vector<Monomial> t_shadow_set(std::span<const Monomial> l, const Context& ctx);

}  // namespace serial

}  // namespace tspread

#endif  // TSPREAD_CONSTRUCT_HPP
