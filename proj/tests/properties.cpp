#include "properties.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "random_inputs.hpp"
#include "tspread/betti.hpp"
#include "tspread/construct.hpp"
#include "tspread/count.hpp"
#include "tspread/error.hpp"
#include "tspread/io.hpp"
#include "tspread/kk.hpp"
#include "tspread/oracle.hpp"

using namespace tspread;

namespace props {

namespace {

using Failure = std::optional<std::string>;
using Property = std::function<Failure(gen::Rng&)>;

std::string show(const Monomial& u) { return io::format_monomial(u); }

std::string show(const Context& ctx) {
  return "n=" + std::to_string(ctx.n()) + " t=" + std::to_string(ctx.t());
}

// Naive C_q straight from its recursive definition.
BigInt cq_naive(std::vector<long> a) {
  if (a.size() == 1) return a[0];
  const long last = a.back();
  a.pop_back();
  BigInt sum = 0;
  for (long r = 0; r < last; ++r) {
    std::vector<long> shifted = a;
    for (auto& x : shifted) x -= r;
    sum += cq_naive(shifted);
  }
  return sum;
}

// Degree-by-degree initial segments; succeeds iff each contains the shadow
// of the previous one.
bool constructible(const FtVector& f, const Context& ctx) {
  if (f.size() == 0 || f[0] != 1) return false;
  std::vector<Monomial> previous;
  for (int d = 1; d <= ctx.max_degree(); ++d) {
    const auto j = static_cast<std::size_t>(d);
    const BigInt fj = j < f.size() ? f[j] : BigInt(0);
    auto all = oracle::enumerate_veronese(d, ctx);
    if (fj < 0 || fj > all.size()) return false;
    all.resize(all.size() - static_cast<std::size_t>(fj));
    auto shadow = oracle::shadow(previous, ctx);
    if (!std::includes(all.begin(), all.end(), shadow.begin(), shadow.end())) return false;
    previous = std::move(all);
  }
  for (std::size_t j = static_cast<std::size_t>(ctx.max_degree()) + 1; j < f.size(); ++j)
    if (f[j] != 0) return false;
  return true;
}

std::vector<std::pair<std::string, Property>> properties() {
  std::vector<std::pair<std::string, Property>> p;

  // core

  p.emplace_back("slex is a total order on each degree", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 16, 3);
    const int d = gen::degree(rng, ctx);
    const Monomial a = gen::monomial(rng, d, ctx), b = gen::monomial(rng, d, ctx),
                   c = gen::monomial(rng, d, ctx);
    const int ab = (cmp_slex(a, b) > 0) + (cmp_slex(a, b) < 0) + (a == b);
    if (ab != 1) return "trichotomy fails for " + show(a) + " / " + show(b);
    if (cmp_slex(a, b) != 0 && cmp_slex(a, b) == cmp_slex(b, a)) return "not antisymmetric";
    if (slex_greater(a, b) && slex_greater(b, c) && !slex_greater(a, c)) return "not transitive";
    return std::nullopt;
  });

  p.emplace_back("Borel order refines into slex", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 16, 3);
    const int d = gen::degree(rng, ctx);
    const Monomial a = gen::monomial(rng, d, ctx), b = gen::monomial(rng, d, ctx);
    if (borel_geq(a, b) && slex_greater(b, a)) return show(a) + " >=Borel " + show(b) + " but below in slex";
    return std::nullopt;
  });

  p.emplace_back("minimal generators are minimal and idempotent", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 14, 2);
    std::vector<Monomial> gens;
    const int count = gen::uniform(rng, 1, 12);
    for (int k = 0; k < count; ++k) gens.push_back(gen::monomial(rng, gen::degree(rng, ctx), ctx));
    auto min = minimalize(gens);
    if (minimalize(min) != min) return std::string("not idempotent");
    for (const auto& g : gens)
      if (std::none_of(min.begin(), min.end(), [&](const Monomial& m) { return m.divides(g); }))
        return show(g) + " lost";
    for (std::size_t a = 0; a < min.size(); ++a)
      for (std::size_t b = 0; b < min.size(); ++b)
        if (a != b && min[a].divides(min[b])) return show(min[b]) + " is redundant";
    return std::nullopt;
  });

  // construct

  p.emplace_back("lex successor is the next smaller monomial", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 14, 3);
    const int d = gen::degree(rng, ctx);
    const Monomial u = gen::monomial(rng, d, ctx);
    auto all = oracle::enumerate_veronese(d, ctx);
    auto it = std::find(all.begin(), all.end(), u);
    auto next = t_next_lex(u, ctx);
    const bool last = std::next(it) == all.end();
    if (last != !next.has_value()) return "end of set mismatch at " + show(u);
    if (next && *next != *std::next(it)) return "wrong successor of " + show(u) + " at " + show(ctx);
    return std::nullopt;
  });

  p.emplace_back("segments nest and are recognized", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 13, 3);
    const int d = gen::degree(rng, ctx);
    Monomial a = gen::monomial(rng, d, ctx), b = gen::monomial(rng, d, ctx);
    if (slex_greater(a, b)) std::swap(a, b);  // a <=slex b
    auto la = t_lex_mon(a, ctx), lb = t_lex_mon(b, ctx);
    if (!std::includes(la.begin(), la.end(), lb.begin(), lb.end())) return "L{b} not inside L{a}";
    auto ba = t_ss_mon(a, ctx);
    if (!std::includes(la.begin(), la.end(), ba.begin(), ba.end())) return "B{a} not inside L{a}";
    if (!is_t_lex_seg(la.monomials, ctx)) return "lex segment not recognized";
    if (!is_t_ss_set(ba.monomials, ctx) || !is_t_ss_seg(ba.monomials, ctx)) return "Borel set not recognized";
    auto seg = t_lex_seg(b, a, ctx);
    if (seg.size() != la.size() - lb.size() + 1) return "L[b,a] has the wrong size";
    if (borel_geq(b, a)) {
      auto bs = t_ss_seg(b, a, ctx);
      for (const auto& w : bs)
        if (!borel_geq(w, a) || slex_greater(w, b)) return show(w) + " outside B[b,a]";
    }
    return std::nullopt;
  });

  p.emplace_back("shadow matches brute force", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 16, 3);
    const int d = gen::degree(rng, ctx);
    std::vector<Monomial> l;
    for (int k = 0, m = gen::uniform(rng, 1, 8); k < m; ++k) l.push_back(gen::monomial(rng, d, ctx));
    if (t_shadow_set(l, ctx) != oracle::shadow(l, ctx)) return "shadow differs at " + show(ctx);
    return std::nullopt;
  });

  p.emplace_back("Borel closure is the exchange-move closure", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 12, 3);
    const int d = gen::degree(rng, ctx);
    std::vector<Monomial> l;
    for (int k = 0, m = gen::uniform(rng, 1, 4); k < m; ++k) l.push_back(gen::monomial(rng, d, ctx));
    if (t_ss_set(l, ctx) != oracle::ss_closure(l, ctx)) return "closure differs at " + show(ctx);
    return std::nullopt;
  });

  p.emplace_back("strongly stable ideals match brute force", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 11, 3);
    auto I = gen::ideal(rng, ctx, 4);
    auto J = t_ss_ideal(I);
    if (J != oracle::ss_ideal(I)) return "closure differs at " + show(ctx);
    if (!is_t_ss_ideal(J)) return std::string("closure not recognized");
    if (is_t_ss_ideal(I) != (J == I)) return std::string("recognizer disagrees with closure");
    return std::nullopt;
  });

  // count

  p.emplace_back("counts match construction and brute force", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 14, 3);
    const int d = gen::degree(rng, ctx);
    const Monomial u = gen::monomial(rng, d, ctx);
    LexCountStats stats;
    if (count_t_lex_mon(u, ctx, &stats) != oracle::lex_set(u, ctx).size()) return "lex count at " + show(u);
    if (stats.terms != static_cast<std::uint64_t>(u.max() - (d - 1) * ctx.t())) return "lex term count";
    if (count_t_ss_mon(u, ctx) != oracle::borel_set(u, ctx).size()) return "Borel count at " + show(u);
    if (d >= 2) {
      std::uint64_t adds = 0;
      serial::count_t_ss_mon(u, ctx, &adds);
      if (count_terms_ss(u, ctx) != adds) return "term count at " + show(u);
    }
    return std::nullopt;
  });

  p.emplace_back("C_q operator matches its recursion", [](gen::Rng& rng) -> Failure {
    std::vector<long> a;
    long top = gen::uniform(rng, 1, 9);
    for (int k = 0, q = gen::uniform(rng, 1, 4); k < q; ++k) {
      a.push_back(top);
      top = gen::uniform(rng, 1, static_cast<int>(top));
    }
    if (cq_operator(a) != cq_naive(a)) return std::string("C_q mismatch");
    return std::nullopt;
  });

  // betti

  p.emplace_back("corners round-trip through realization", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 3, 13, 3);
    auto I = t_ss_ideal(gen::ideal(rng, ctx, 4));
    if (I.generators_of_degree(0).size() > 0) return std::nullopt;
    auto cfg = extremal_corners(I);
    auto r = realize_extremal_betti(cfg, ctx);
    if (extremal_corners(r.ideal) != cfg) return "round trip fails at " + show(ctx);
    if (graded_betti(r.ideal) != serial::graded_betti(r.ideal)) return std::string("parallel Betti mismatch");
    const auto table = graded_betti(r.ideal);
    for (std::size_t k = 0; k < cfg.corners.size(); ++k) {
      const auto& c = cfg.corners[k];
      if (table.at(c.k, c.l) != cfg.values[k]) return "corner value is not the Betti number";
      for (const auto& [key, v] : table.entries())
        if (key.first >= c.k && key.second >= c.l && key != std::pair{c.k, c.l})
          return "corner is not extremal";
    }
    return std::nullopt;
  });

  // kk

  p.emplace_back("Macaulay expansions are unique and exact", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 2, 20, 3);
    const int d = gen::degree(rng, ctx);
    const BigInt card = card_veronese(d, ctx);
    const BigInt a = gen::uniform(rng, 0, static_cast<int>(std::min<BigInt>(card, 100000)));
    auto e = t_macaulay_expansion(a, ctx.n(), d, ctx.t(), false);
    if (solve_binomial_expansion(e) != a) return "expansion does not sum to a";
    for (std::size_t k = 0; k < e.terms.size(); ++k) {
      const auto& term = e.terms[k];
      if (term.top < term.bottom || term.bottom < 1) return std::string("degenerate term");
      if (k > 0 && (term.top >= e.terms[k - 1].top || term.bottom >= e.terms[k - 1].bottom))
        return std::string("terms not strictly decreasing");
    }
    return std::nullopt;
  });

  p.emplace_back("shifted expansion bounds the shadow of lex segments", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 2, 10, 3);
    const int d = gen::uniform(rng, 1, std::max(1, ctx.max_degree() - 1));
    if (!ctx.has_degree(d + 1)) return std::nullopt;
    auto all = oracle::enumerate_veronese(d, ctx);
    const auto f = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(all.size())));
    all.resize(all.size() - f);
    const BigInt next = card_veronese(d + 1, ctx);
    const BigInt outside = next - oracle::shadow(all, ctx).size();
    const BigInt bound = solve_binomial_expansion(t_macaulay_expansion(f, ctx.n(), d, ctx.t(), true));
    if (std::min(bound, next) != outside) return "bound is not sharp at " + show(ctx);
    return std::nullopt;
  });

  p.emplace_back("f_t-vectors match brute force and lex ideals keep them", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 2, 10, 3);
    // Admissibility is a statement about t-strongly stable ideals.
    auto I = t_ss_ideal(gen::ideal(rng, ctx, 5));
    auto f = ft_vector(I);
    if (f != oracle::ft_vector(I)) return "f_t-vector differs at " + show(ctx);
    if (!is_ft_vector(f, ctx)) return "own f_t-vector rejected at " + show(ctx);
    auto L = t_lex_ideal_of(I);
    if (ft_vector(L) != f) return std::string("lex ideal changes the f_t-vector");
    if (!is_t_lex_ideal(L)) return std::string("lex ideal not recognized");
    if (!is_t_ss_ideal(L)) return std::string("lex ideal not strongly stable");
    if (t_lex_ideal_of(L) != L) return std::string("not idempotent");
    return std::nullopt;
  });

  p.emplace_back("numeric and constructive f_t tests agree", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 2, 10, 3);
    // Start from a real f_t-vector and nudge one entry.
    auto f = ft_vector(gen::ideal(rng, ctx, 4));
    const auto j = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<int>(f.size()) - 1));
    f.values[j] += gen::uniform(rng, -3, 3);
    if (f.values[j] < 0) f.values[j] = 0;
    if (gen::uniform(rng, 0, 1)) f.values.resize(static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<int>(f.size()))));
    if (is_ft_vector(f, ctx) != constructible(f, ctx)) return "disagreement at " + show(ctx);
    if (is_ft_vector(f, ctx)) {
      auto L = t_lex_ideal_from_f(f, ctx);
      auto g = ft_vector(L);
      if (!is_t_lex_ideal(L)) return std::string("not t-lex");
      for (std::size_t k = 0; k < g.size(); ++k)
        if (g[k] != (k < f.size() ? f[k] : BigInt(0))) return std::string("f_t-vector not reproduced");
    }
    return std::nullopt;
  });

  // io

  p.emplace_back("text and JSON forms round-trip", [](gen::Rng& rng) -> Failure {
    const Context ctx = gen::context(rng, 1, 40, 4);
    const Monomial u = gen::monomial(rng, gen::degree(rng, ctx, 0), ctx);
    if (io::parse_monomial(io::format_monomial(u)) != u) return "comma form of " + show(u);
    if (!u.is_one() && io::parse_monomial(io::format_monomial_product(u)) != u) return "product form of " + show(u);
    if (io::monomial_from_json(nlohmann::json::parse(io::to_json(u).dump())) != u) return "JSON of " + show(u);
    return std::nullopt;
  });

  return p;
}

}  // namespace

std::vector<Result> run_all(std::uint32_t seed, int rounds) {
  std::vector<Result> out;
  gen::Rng rng(seed);
  for (auto& [name, prop] : properties()) {
    Result r{name};
    for (int k = 0; k < rounds; ++k) {
      ++r.cases;
      Failure f;
      try {
        f = prop(rng);
      } catch (const std::exception& e) {
        f = std::string("threw: ") + e.what();
      }
      if (f) {
        if (r.failures++ == 0) r.first_failure = *f;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace props
