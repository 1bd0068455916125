#include "tspread/monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "tspread/error.hpp"

namespace tspread {

Context::Context(int n, int t) : n_(n), t_(t) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "number of variables must be positive");
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "spread t must be positive");
}

Monomial::Monomial(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 1)
      throw Error(ErrorCode::InvalidArgument, "variable indices start at 1");
    if (k > 0 && indices_[k] <= indices_[k - 1])
      throw Error(ErrorCode::InvalidArgument, "monomial indices must be strictly increasing");
  }
}

Monomial::Monomial(std::initializer_list<int> indices)
    : Monomial(std::vector<int>(indices)) {}

bool Monomial::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool Monomial::divides(const Monomial& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

Monomial Monomial::times(int h) const {
  std::vector<int> out;
  out.reserve(indices_.size() + 1);
  auto pos = std::lower_bound(indices_.begin(), indices_.end(), h);
  out.insert(out.end(), indices_.begin(), pos);
  out.push_back(h);
  out.insert(out.end(), pos, indices_.end());
  return Monomial(std::move(out));
}

Monomial Monomial::without(int h) const {
  std::vector<int> out;
  out.reserve(indices_.size());
  for (int i : indices_)
    if (i != h) out.push_back(i);
  return Monomial(std::move(out));
}

bool is_t_spread(const Monomial& u, int t) {
  auto idx = u.indices();
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] - idx[k - 1] < t) return false;
  return true;
}

bool is_t_spread(const Monomial& u, const Context& ctx) {
  return u.max() <= ctx.n() && is_t_spread(u, ctx.t());
}

void require_t_spread(const Monomial& u, const Context& ctx) {
  if (u.max() > ctx.n())
    throw Error(ErrorCode::OutOfRange,
                "monomial uses x_" + std::to_string(u.max()) + " but n = " +
                    std::to_string(ctx.n()));
  if (!is_t_spread(u, ctx.t()))
    throw Error(ErrorCode::NotTSpread, "expected a t-spread monomial");
}

std::vector<Monomial> sieve_t_spread(std::span<const Monomial> l, const Context& ctx) {
  std::vector<Monomial> out;
  std::copy_if(l.begin(), l.end(), std::back_inserter(out),
               [&](const Monomial& u) { return is_t_spread(u, ctx); });
  return out;
}

std::strong_ordering cmp_slex(const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree())
    throw Error(ErrorCode::DegreeMismatch, ">slex compares monomials of equal degree only");
  // The smaller index at the first difference wins.
  return v <=> u;
}

bool borel_geq(const Monomial& v, const Monomial& u) {
  if (u.degree() != v.degree())
    throw Error(ErrorCode::DegreeMismatch, "Borel order compares monomials of equal degree only");
  auto a = v.indices();
  auto b = u.indices();
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a[s] > b[s]) return false;
  return true;
}

namespace {

void require_nonempty(int d, const Context& ctx) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  if (!ctx.has_degree(d))
    throw Error(ErrorCode::EmptyVeronese,
                "M_{n,d,t} is empty for n=" + std::to_string(ctx.n()) +
                    ", d=" + std::to_string(d) + ", t=" + std::to_string(ctx.t()));
}

}  // namespace

Monomial max_mon(int d, const Context& ctx) {
  require_nonempty(d, ctx);
  std::vector<int> idx(d);
  for (int k = 0; k < d; ++k) idx[k] = 1 + k * ctx.t();
  return Monomial(std::move(idx));
}

Monomial min_mon(int d, const Context& ctx) {
  require_nonempty(d, ctx);
  std::vector<int> idx(d);
  for (int k = 0; k < d; ++k) idx[k] = ctx.n() - (d - 1 - k) * ctx.t();
  return Monomial(std::move(idx));
}

void canonicalize(std::vector<Monomial>& monomials) {
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
}

namespace {

// Support as a bit set when every index fits in 64 bits; 0 otherwise.
std::uint64_t mask_of(const Monomial& u) {
  if (u.max() > 64) return 0;
  std::uint64_t m = 0;
  for (int i : u.indices()) m |= std::uint64_t{1} << (i - 1);
  return m;
}

bool fits_mask(const Monomial& u) { return u.max() <= 64; }

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  canonicalize(gens);
  const bool masked = std::all_of(gens.begin(), gens.end(), fits_mask);
  std::vector<Monomial> out;
  std::vector<std::uint64_t> masks;
  for (auto& w : gens) {
    // Only strictly lower degrees can divide w once duplicates are gone.
    bool redundant = false;
    if (masked) {
      const std::uint64_t wm = mask_of(w);
      for (std::size_t k = 0; k < out.size() && out[k].degree() < w.degree(); ++k)
        if ((masks[k] & ~wm) == 0) {
          redundant = true;
          break;
        }
    } else {
      redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& g) {
        return g.degree() < w.degree() && g.divides(w);
      });
    }
    if (redundant) continue;
    if (masked) masks.push_back(mask_of(w));
    out.push_back(std::move(w));
  }
  return out;
}

MonomialIdeal::MonomialIdeal(Context ctx, std::vector<Monomial> gens) : ctx_(ctx) {
  for (const auto& g : gens)
    if (g.max() > ctx.n())
      throw Error(ErrorCode::OutOfRange,
                  "generator uses x_" + std::to_string(g.max()) + " but n = " +
                      std::to_string(ctx.n()));
  gens_ = minimalize(std::move(gens));
  if (ctx.n() <= 64)
    for (const auto& g : gens_) masks_.push_back(mask_of(g));
}

std::span<const Monomial> MonomialIdeal::generators_of_degree(int d) const {
  auto lo = std::partition_point(gens_.begin(), gens_.end(),
                                 [d](const Monomial& g) { return g.degree() < d; });
  auto hi = std::partition_point(lo, gens_.end(),
                                 [d](const Monomial& g) { return g.degree() == d; });
  return {lo, hi};
}

std::vector<int> MonomialIdeal::degrees() const {
  std::vector<int> out;
  for (const auto& g : gens_)
    if (out.empty() || out.back() != g.degree()) out.push_back(g.degree());
  return out;
}

bool MonomialIdeal::is_t_spread() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return tspread::is_t_spread(g, ctx_.t()); });
}

bool MonomialIdeal::contains(const Monomial& w) const {
  if (!masks_.empty() && fits_mask(w)) {
    const std::uint64_t wm = mask_of(w);
    for (std::size_t k = 0; k < gens_.size() && gens_[k].degree() <= w.degree(); ++k)
      if ((masks_[k] & ~wm) == 0) return true;
    return false;
  }
  for (const auto& g : gens_) {
    if (g.degree() > w.degree()) break;
    if (g.divides(w)) return true;
  }
  return false;
}

}  // namespace tspread
