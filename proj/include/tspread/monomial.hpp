#ifndef TSPREAD_MONOMIAL_HPP
#define TSPREAD_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tspread {

/// Ambient parameters: n variables x_1..x_n and spread t >= 1.
class Context {
 public:
  Context(int n, int t);

  int n() const noexcept { return n_; }
  int t() const noexcept { return t_; }

  /// Largest degree d with a nonempty t-spread Veronese set, i.e. 1+(d-1)t <= n.
  int max_degree() const noexcept { return (n_ - 1) / t_ + 1; }

  /// True iff M_{n,d,t} is nonempty.
  bool has_degree(int d) const noexcept { return d >= 0 && d <= max_degree(); }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  int n_;
  int t_;
};

/// A squarefree monomial x_{i_1}...x_{i_d} stored as its support
/// i_1 < ... < i_d. The empty sequence is the monomial 1.
///
/// operator<=> is the plain lexicographic order on index sequences, used for
/// containers. On equal degrees it is exactly the reverse of >slex, so an
/// ascending sort yields a >slex-descending list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> indices);
  Monomial(std::initializer_list<int> indices);

  std::span<const int> indices() const noexcept { return indices_; }
  int degree() const noexcept { return static_cast<int>(indices_.size()); }
  bool is_one() const noexcept { return indices_.empty(); }
  int operator[](std::size_t pos) const { return indices_[pos]; }

  /// max(u) and min(u), with max(1) = min(1) = 0.
  int max() const noexcept { return indices_.empty() ? 0 : indices_.back(); }
  int min() const noexcept { return indices_.empty() ? 0 : indices_.front(); }

  bool contains(int index) const;
  /// Support inclusion, which is divisibility for squarefree monomials.
  bool divides(const Monomial& other) const;
  /// u * x_h; requires h not in the support.
  Monomial times(int h) const;
  /// u / x_h; requires h in the support.
  Monomial without(int h) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> indices_;
};

bool is_t_spread(const Monomial& u, int t);
bool is_t_spread(const Monomial& u, const Context& ctx);

/// Throws NotTSpread / OutOfRange unless u belongs to M_{n,deg u,t}.
void require_t_spread(const Monomial& u, const Context& ctx);

/// Keeps the t-spread members of l in input order.
std::vector<Monomial> sieve_t_spread(std::span<const Monomial> l, const Context& ctx);

/// Squarefree lexicographic comparison of equal-degree monomials:
/// greater means u >slex v. Throws DegreeMismatch on unequal degrees.
std::strong_ordering cmp_slex(const Monomial& u, const Monomial& v);

inline bool slex_greater(const Monomial& u, const Monomial& v) {
  return cmp_slex(u, v) == std::strong_ordering::greater;
}

/// v >=Borel u: every index of v is <= the matching index of u.
bool borel_geq(const Monomial& v, const Monomial& u);

/// x_1 x_{1+t} ... x_{1+(d-1)t}, the >slex-largest element of M_{n,d,t}.
Monomial max_mon(int d, const Context& ctx);
/// x_{n-(d-1)t} ... x_{n-t} x_n, the >slex-smallest element of M_{n,d,t}.
Monomial min_mon(int d, const Context& ctx);

/// Removes every monomial divisible by another member (and duplicates).
/// Output is sorted by degree, then >slex-descending.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Sorts by degree ascending, then >slex descending; drops duplicates.
void canonicalize(std::vector<Monomial>& monomials);

/// A monomial ideal kept as its minimal generating set G(I).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(Context ctx) : ctx_(ctx) {}
  /// Generators are minimalized; indices must lie in [1, n].
  MonomialIdeal(Context ctx, std::vector<Monomial> gens);

  const Context& context() const noexcept { return ctx_; }

  /// G(I), sorted by degree, then >slex-descending.
  std::span<const Monomial> generators() const noexcept { return gens_; }
  /// G(I)_d.
  std::span<const Monomial> generators_of_degree(int d) const;
  /// Distinct generator degrees in ascending order.
  std::vector<int> degrees() const;

  std::size_t num_generators() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_t_spread() const;
  /// Membership: some generator divides w.
  bool contains(const Monomial& w) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Context ctx_;
  std::vector<Monomial> gens_;
  std::vector<std::uint64_t> masks_;  // support bit sets, kept when n <= 64
};

}  // namespace tspread

#endif  // TSPREAD_MONOMIAL_HPP
