#include "tspread/construct.hpp"

#include <algorithm>
#include <string>

#include "tspread/error.hpp"

namespace tspread {

namespace {

void require_positive_degree(const Monomial& u) {
  if (u.degree() < 1)
    throw Error(ErrorCode::InvalidArgument, "segments need monomials of degree at least 1");
}

void require_same_degree(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DegreeMismatch, "monomials must have the same degree");
}

void require_uniform(std::span<const Monomial> l, const Context& ctx) {
  for (const auto& u : l) {
    require_t_spread(u, ctx);
    require_same_degree(u, l.front());
  }
}

// Shadow of a t-spread u, assumed validated.
std::vector<Monomial> shadow_of(const Monomial& u, const Context& ctx) {
  std::vector<Monomial> out;
  auto idx = u.indices();
  const int t = ctx.t();
  int lo = 1;
  for (std::size_t k = 0; k <= idx.size(); ++k) {
    const int hi = k < idx.size() ? idx[k] - t : ctx.n();
    for (int h = lo; h <= hi; ++h) out.push_back(u.times(h));
    if (k < idx.size()) lo = idx[k] + t;
  }
  return out;
}

// Replaces positions q.. of w by start, start+t, start+2t, ...
Monomial restart_tail(std::span<const int> w, std::size_t q, int start, int t) {
  std::vector<int> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(q));
  for (std::size_t k = q; k < w.size(); ++k) out.push_back(start + static_cast<int>(k - q) * t);
  return Monomial(std::move(out));
}

bool uniform_and_spread(const std::vector<Monomial>& l, const Context& ctx) {
  return std::all_of(l.begin(), l.end(), [&](const Monomial& u) {
    return u.degree() == l.front().degree() && is_t_spread(u, ctx);
  });
}

std::vector<Monomial> merge_sorted(std::vector<std::vector<Monomial>>& parts) {
  std::vector<Monomial> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  canonicalize(out);
  return out;
}

}  // namespace

std::vector<Monomial> t_shadow(const Monomial& u, const Context& ctx) {
  require_t_spread(u, ctx);
  return shadow_of(u, ctx);
}

std::vector<Monomial> t_shadow_set(std::span<const Monomial> l, const Context& ctx) {
  if (l.empty()) return {};
  require_uniform(l, ctx);
  std::vector<std::vector<Monomial>> parts(l.size());
  const auto count = static_cast<std::ptrdiff_t>(l.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < count; ++k) parts[k] = shadow_of(l[k], ctx);
  return merge_sorted(parts);
}

namespace serial {

std::vector<Monomial> t_shadow_set(std::span<const Monomial> l, const Context& ctx) {
  if (l.empty()) return {};
  require_uniform(l, ctx);
  std::vector<std::vector<Monomial>> parts;
  parts.reserve(l.size());
  for (const auto& u : l) parts.push_back(shadow_of(u, ctx));
  return merge_sorted(parts);
}

}  // namespace serial

std::optional<Monomial> t_next_lex(const Monomial& u, const Context& ctx) {
  require_t_spread(u, ctx);
  auto idx = u.indices();
  const int d = u.degree();
  for (int q = d - 1; q >= 0; --q) {
    if (idx[q] + 1 <= ctx.n() - (d - 1 - q) * ctx.t())
      return restart_tail(idx, static_cast<std::size_t>(q), idx[q] + 1, ctx.t());
  }
  return std::nullopt;
}

Segment t_lex_seg(const Monomial& v, const Monomial& u, const Context& ctx) {
  require_t_spread(v, ctx);
  require_t_spread(u, ctx);
  require_same_degree(v, u);
  require_positive_degree(u);
  if (slex_greater(u, v))
    throw Error(ErrorCode::SegmentOrder, "lex segment needs v >=slex u");
  Segment seg{SegmentKind::Lex, {v}};
  Monomial w = v;
  while (w != u) {
    w = *t_next_lex(w, ctx);
    seg.monomials.push_back(w);
  }
  return seg;
}

Segment t_lex_mon(const Monomial& u, const Context& ctx) {
  require_t_spread(u, ctx);
  require_positive_degree(u);
  return t_lex_seg(max_mon(u.degree(), ctx), u, ctx);
}

bool is_t_lex_seg(std::span<const Monomial> l, const Context& ctx) {
  std::vector<Monomial> sorted(l.begin(), l.end());
  canonicalize(sorted);
  if (sorted.empty()) return true;
  if (!uniform_and_spread(sorted, ctx)) return false;
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    auto next = t_next_lex(sorted[k], ctx);
    if (!next || *next != sorted[k + 1]) return false;
  }
  return true;
}

std::optional<Monomial> t_next_borel(const Monomial& w, const Monomial& u, const Context& ctx) {
  require_same_degree(w, u);
  if (!borel_geq(w, u))
    throw Error(ErrorCode::NotInBorelSet, "expected t-spread monomials belonging to B_t{u}");
  auto a = w.indices();
  auto b = u.indices();
  for (int q = w.degree() - 1; q >= 0; --q) {
    if (a[q] + 1 <= b[q]) return restart_tail(a, static_cast<std::size_t>(q), a[q] + 1, ctx.t());
  }
  return std::nullopt;
}

Segment t_ss_seg(const Monomial& v, const Monomial& u, const Context& ctx) {
  require_t_spread(v, ctx);
  require_t_spread(u, ctx);
  require_same_degree(v, u);
  require_positive_degree(u);
  if (!borel_geq(v, u))
    throw Error(ErrorCode::NotInBorelSet, "expected t-spread monomials belonging to B_t{u}");
  Segment seg{SegmentKind::Borel, {v}};
  for (auto w = t_next_borel(v, u, ctx); w; w = t_next_borel(*w, u, ctx))
    seg.monomials.push_back(*w);
  return seg;
}

Segment t_ss_mon(const Monomial& u, const Context& ctx) {
  require_t_spread(u, ctx);
  require_positive_degree(u);
  return t_ss_seg(max_mon(u.degree(), ctx), u, ctx);
}

std::vector<Monomial> t_ss_set(std::span<const Monomial> gens, const Context& ctx) {
  if (gens.empty()) return {};
  require_uniform(gens, ctx);
  std::vector<Monomial> out;
  for (const auto& u : gens) {
    auto seg = t_ss_mon(u, ctx);
    std::move(seg.monomials.begin(), seg.monomials.end(), std::back_inserter(out));
  }
  canonicalize(out);
  return out;
}

bool is_t_ss_seg(std::span<const Monomial> l, const Context& ctx) {
  std::vector<Monomial> sorted(l.begin(), l.end());
  canonicalize(sorted);
  if (sorted.empty()) return true;
  if (!uniform_and_spread(sorted, ctx)) return false;
  const Monomial& last = sorted.back();
  if (!borel_geq(sorted.front(), last)) return false;
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    auto next = t_next_borel(sorted[k], last, ctx);
    if (!next || *next != sorted[k + 1]) return false;
  }
  return true;
}

bool is_t_ss_set(std::span<const Monomial> l, const Context& ctx) {
  std::vector<Monomial> sorted(l.begin(), l.end());
  canonicalize(sorted);
  if (sorted.empty()) return true;
  if (!uniform_and_spread(sorted, ctx)) return false;
  // Closure under >=Borel is generated by lowering one index by one while
  // staying t-spread.
  for (const auto& u : sorted) {
    auto idx = u.indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const int lowered = idx[k] - 1;
      if (lowered < 1) continue;
      if (k > 0 && lowered - idx[k - 1] < ctx.t()) continue;
      std::vector<int> w(idx.begin(), idx.end());
      w[k] = lowered;
      if (!std::binary_search(sorted.begin(), sorted.end(), Monomial(std::move(w)))) return false;
    }
  }
  return true;
}

std::vector<Monomial> t_veronese(int d, const Context& ctx) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "Veronese degree must be at least 1");
  std::vector<Monomial> out;
  if (!ctx.has_degree(d)) return out;
  for (std::optional<Monomial> w = max_mon(d, ctx); w; w = t_next_lex(*w, ctx)) out.push_back(*w);
  return out;
}

MonomialIdeal t_veronese_ideal(int d, const Context& ctx) {
  return MonomialIdeal(ctx, t_veronese(d, ctx));
}

std::vector<Monomial> initial_lex_segment(int d, std::size_t count, const Context& ctx) {
  std::vector<Monomial> out;
  if (count == 0) return out;
  if (d < 0 || !ctx.has_degree(d))
    throw Error(ErrorCode::EmptyVeronese, "M_{n,d,t} is empty");
  out.reserve(count);
  std::optional<Monomial> w = max_mon(d, ctx);
  while (out.size() < count) {
    if (!w) throw Error(ErrorCode::InvalidArgument, "initial segment longer than M_{n,d,t}");
    out.push_back(*w);
    w = t_next_lex(*w, ctx);
  }
  return out;
}

void require_t_spread(const MonomialIdeal& I) {
  if (!I.is_t_spread()) throw Error(ErrorCode::NotTSpread, "expected a t-spread ideal");
}

std::vector<std::vector<Monomial>> t_spread_components(const MonomialIdeal& I) {
  require_t_spread(I);
  const Context& ctx = I.context();
  std::vector<std::vector<Monomial>> comps(static_cast<std::size_t>(ctx.max_degree()) + 1);
  auto unit = I.generators_of_degree(0);
  comps[0].assign(unit.begin(), unit.end());
  for (int j = 1; j <= ctx.max_degree(); ++j) {
    auto& cur = comps[j];
    cur = t_shadow_set(comps[j - 1], ctx);
    auto gens = I.generators_of_degree(j);
    cur.insert(cur.end(), gens.begin(), gens.end());
    canonicalize(cur);
  }
  return comps;
}

MonomialIdeal t_ss_ideal(const MonomialIdeal& I) {
  require_t_spread(I);
  std::vector<Monomial> all;
  for (int d : I.degrees()) {
    auto gens = I.generators_of_degree(d);
    auto closed = d == 0 ? std::vector<Monomial>(gens.begin(), gens.end())
                         : t_ss_set(gens, I.context());
    std::move(closed.begin(), closed.end(), std::back_inserter(all));
  }
  return MonomialIdeal(I.context(), std::move(all));
}

bool is_t_ss_ideal(const MonomialIdeal& I) {
  if (!I.is_t_spread()) return false;
  const int t = I.context().t();
  // Every exchange move is a chain of t-spread unit decrements, and a unit
  // decrement of g*m is either a multiple of g or (decremented g)*m. So
  // decrements of generators suffice.
  for (const auto& u : I.generators()) {
    auto idx = u.indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const int lowered = idx[k] - 1;
      if (lowered < 1 || (k > 0 && lowered - idx[k - 1] < t)) continue;
      std::vector<int> w(idx.begin(), idx.end());
      w[k] = lowered;
      if (!I.contains(Monomial(std::move(w)))) return false;
    }
  }
  return true;
}

bool is_t_lex_ideal(const MonomialIdeal& I) {
  auto comps = t_spread_components(I);
  for (std::size_t j = 1; j < comps.size(); ++j) {
    const auto& comp = comps[j];
    if (comp.empty()) continue;
    if (comp != initial_lex_segment(static_cast<int>(j), comp.size(), I.context())) return false;
  }
  return true;
}

}  // namespace tspread
