#include "tspread/count.hpp"

#include <algorithm>
#include <string>

#include "tspread/error.hpp"

namespace tspread {

using uint128 = unsigned __int128;

BigInt binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || top < bottom) return 0;
  const long b = std::min(bottom, top - bottom);
  BigInt r = 1;
  for (long k = 1; k <= b; ++k) {
    r *= top - b + k;
    r /= k;
  }
  return r;
}

BigInt card_veronese(int d, const Context& ctx) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  if (!ctx.has_degree(d)) return 0;
  return binomial(ctx.n() - static_cast<long>(d - 1) * (ctx.t() - 1), d);
}

std::vector<BinomialTerm> binomial_decomposition(long n, long q) {
  if (q < 1 || n < q)
    throw Error(ErrorCode::InvalidArgument, "binomial decomposition needs n >= q >= 1");
  std::vector<BinomialTerm> out;
  out.reserve(static_cast<std::size_t>(n - q + 1));
  for (long top = n - 1; top >= q - 1; --top) out.push_back({top, q - 1});
  return out;
}

BigInt count_t_lex_mon(const Monomial& u, const Context& ctx, LexCountStats* stats) {
  require_t_spread(u, ctx);
  const int d = u.degree();
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "counting needs degree at least 1");
  auto idx = u.indices();
  const long t = ctx.t();

  // The term under inspection counts the monomials sharing u's first k
  // indices; the leading `skip` terms of its decomposition lie strictly above u.
  BinomialTerm current{ctx.n() - (d - 1) * (t - 1), d};
  BigInt c = 0;
  std::uint64_t terms = 0;
  for (int k = 0; k < d; ++k) {
    const auto decomp = binomial_decomposition(current.top, current.bottom);
    const long skip = k == 0 ? idx[0] - 1 : idx[k] - idx[k - 1] - t;
    for (long s = 0; s < skip; ++s) c += decomp[static_cast<std::size_t>(s)].value();
    terms += static_cast<std::uint64_t>(skip);
    current = decomp[static_cast<std::size_t>(skip)];
  }
  c += current.value();  // C(n - i_d, 0): u itself
  ++terms;
  if (stats) stats->terms = terms;
  return c;
}

namespace {

BigInt to_bigint(uint128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  BigInt lo = static_cast<std::uint64_t>(x);
  return (hi << 64) + lo;
}

// The multi-index (s_1..s_p), p = d-1, with s_k ranging over
// [1, i_k - (s_1+...+s_{k-1}) - (k-1)(t-1)]. Each full index contributes
// base - (s_1+...+s_p), base = max(u) - (d-1)(t-1).
struct SsSum {
  std::span<const int> idx;  // i_1..i_d
  long t;
  long base;
  int levels;  // p

  long upper(int k, long prefix) const { return idx[k] - prefix - k * (t - 1); }

  // Runs the odometer over levels [start, p) below a fixed prefix sum.
  uint128 run(int start, long prefix, std::uint64_t& terms) const {
    if (start == levels) {
      ++terms;
      return static_cast<uint128>(base - prefix);
    }
    std::vector<long> s(levels, 0), bound(levels, 0), pre(levels + 1, 0);
    pre[start] = prefix;
    for (int k = start; k < levels; ++k) {
      s[k] = 1;
      bound[k] = upper(k, pre[k]);
      pre[k + 1] = pre[k] + 1;
    }
    uint128 sum = 0;
    while (true) {
      sum += static_cast<uint128>(base - pre[levels]);
      ++terms;
      int k = levels - 1;
      while (k >= start) {
        ++s[k];
        ++pre[k + 1];
        if (s[k] <= bound[k]) break;
        --k;
      }
      if (k < start) break;
      for (int j = k + 1; j < levels; ++j) {
        s[j] = 1;
        bound[j] = upper(j, pre[j]);
        pre[j + 1] = pre[j] + 1;
      }
    }
    return sum;
  }
};

SsSum prepare_ss(const Monomial& u, const Context& ctx) {
  require_t_spread(u, ctx);
  const int d = u.degree();
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "counting needs degree at least 1");
  const long t = ctx.t();
  return SsSum{u.indices(), t, u.max() - (d - 1) * (t - 1), d - 1};
}

}  // namespace

namespace serial {

BigInt count_t_ss_mon(const Monomial& u, const Context& ctx, std::uint64_t* innermost_additions) {
  const SsSum sum = prepare_ss(u, ctx);
  std::uint64_t terms = 0;
  BigInt c = to_bigint(sum.run(0, 0, terms));
  if (innermost_additions) *innermost_additions = terms;
  return c;
}

}  // namespace serial

BigInt count_t_ss_mon(const Monomial& u, const Context& ctx) {
  const SsSum sum = prepare_ss(u, ctx);
  const int depth = std::min(sum.levels, 2);

  // Leading prefixes (s_1) or (s_1, s_2), stored as (levels fixed, prefix sum).
  std::vector<long> prefixes;
  if (depth == 0) {
    prefixes.push_back(0);
  } else {
    for (long s1 = 1; s1 <= sum.upper(0, 0); ++s1) {
      if (depth == 1) {
        prefixes.push_back(s1);
        continue;
      }
      for (long s2 = 1; s2 <= sum.upper(1, s1); ++s2) prefixes.push_back(s1 + s2);
    }
  }

  std::vector<uint128> partial(prefixes.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    std::uint64_t terms = 0;
    partial[k] = sum.run(depth, prefixes[k], terms);
  }

  BigInt c = 0;
  for (auto p : partial) c += to_bigint(p);
  return c;
}

BigInt cq_operator(std::span<const long> args) {
  if (args.empty()) throw Error(ErrorCode::InvalidArgument, "C_q needs at least one argument");
  for (std::size_t r = 0; r < args.size(); ++r) {
    if (args[r] < 1) throw Error(ErrorCode::InvalidArgument, "C_q arguments must be positive");
    if (r > 0 && args[r] > args[r - 1])
      throw Error(ErrorCode::InvalidArgument, "C_q arguments must be nonincreasing");
  }
  // level[x] = C_k(a_1 - x, ..., a_k - x), for shifts x in [0, a_k).
  std::vector<BigInt> level(static_cast<std::size_t>(args[0]));
  for (long x = 0; x < args[0]; ++x) level[x] = args[0] - x;
  for (std::size_t k = 1; k < args.size(); ++k) {
    const long width = args[k];
    std::vector<BigInt> next(static_cast<std::size_t>(width));
    BigInt acc = 0;
    for (long x = width - 1; x >= 0; --x) {
      acc += level[x];
      next[x] = acc;
    }
    level = std::move(next);
  }
  return level[0];
}

BigInt count_terms_ss(const Monomial& u, const Context& ctx) {
  require_t_spread(u, ctx);
  const int d = u.degree();
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "term count needs degree at least 2");
  std::vector<long> args;
  for (int k = d - 1; k >= 1; --k) args.push_back(u[k - 1] - static_cast<long>(k - 1) * ctx.t());
  return cq_operator(args);
}

}  // namespace tspread
