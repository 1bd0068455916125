#include "tspread/oracle.hpp"

#include <algorithm>
#include <set>

#include "tspread/error.hpp"

namespace tspread::oracle {

namespace {

void guard(const Context& ctx) {
  if (ctx.n() > 20) throw Error(ErrorCode::TooLarge, "oracle limited to n <= 20");
}

void extend(std::vector<int>& prefix, int d, int lo, const Context& ctx,
            std::vector<Monomial>& out) {
  if (static_cast<int>(prefix.size()) == d) {
    out.emplace_back(prefix);
    return;
  }
  for (int i = lo; i <= ctx.n(); ++i) {
    prefix.push_back(i);
    extend(prefix, d, i + ctx.t(), ctx, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_veronese(int d, const Context& ctx) {
  guard(ctx);
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> prefix;
  extend(prefix, d, 1, ctx, out);
  return out;
}

std::vector<Monomial> lex_set(const Monomial& u, const Context& ctx) {
  require_t_spread(u, ctx);
  std::vector<Monomial> out;
  for (auto& v : enumerate_veronese(u.degree(), ctx))
    if (cmp_slex(v, u) != std::strong_ordering::less) out.push_back(std::move(v));
  return out;
}

std::vector<Monomial> borel_set(const Monomial& u, const Context& ctx) {
  require_t_spread(u, ctx);
  std::vector<Monomial> out;
  for (auto& v : enumerate_veronese(u.degree(), ctx))
    if (borel_geq(v, u)) out.push_back(std::move(v));
  return out;
}

std::vector<Monomial> ss_closure(std::span<const Monomial> gens, const Context& ctx) {
  guard(ctx);
  std::set<Monomial> seen;
  std::vector<Monomial> todo;
  for (const auto& u : gens) {
    require_t_spread(u, ctx);
    if (seen.insert(u).second) todo.push_back(u);
  }
  while (!todo.empty()) {
    Monomial u = std::move(todo.back());
    todo.pop_back();
    for (int j : u.indices()) {
      const Monomial rest = u.without(j);
      for (int i = 1; i < j; ++i) {
        if (rest.contains(i)) continue;
        Monomial v = rest.times(i);
        if (is_t_spread(v, ctx.t()) && seen.insert(v).second) todo.push_back(std::move(v));
      }
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  canonicalize(out);
  return out;
}

std::vector<Monomial> shadow(std::span<const Monomial> l, const Context& ctx) {
  guard(ctx);
  std::set<Monomial> out;
  for (const auto& u : l)
    for (int h = 1; h <= ctx.n(); ++h) {
      if (u.contains(h)) continue;
      Monomial w = u.times(h);
      if (is_t_spread(w, ctx)) out.insert(std::move(w));
    }
  std::vector<Monomial> v(out.begin(), out.end());
  canonicalize(v);
  return v;
}

MonomialIdeal ss_ideal(const MonomialIdeal& I) {
  const Context& ctx = I.context();
  guard(ctx);
  std::vector<Monomial> all;
  for (int d = 0; d <= ctx.max_degree(); ++d) {
    std::vector<Monomial> members;
    for (auto& w : enumerate_veronese(d, ctx))
      if (I.contains(w)) members.push_back(std::move(w));
    auto closed = ss_closure(members, ctx);
    all.insert(all.end(), closed.begin(), closed.end());
  }
  return MonomialIdeal(ctx, std::move(all));
}

FtVector ft_vector(const MonomialIdeal& I) {
  const Context& ctx = I.context();
  guard(ctx);
  FtVector f;
  for (int d = 0; d <= ctx.max_degree(); ++d) {
    long outside = 0;
    for (const auto& w : enumerate_veronese(d, ctx))
      if (!I.contains(w)) ++outside;
    f.values.push_back(outside);
  }
  return f;
}

}  // namespace tspread::oracle
