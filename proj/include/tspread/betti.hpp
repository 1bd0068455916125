#ifndef TSPREAD_BETTI_HPP
#define TSPREAD_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tspread/binomial.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// Graded Betti numbers beta_{i,i+j}, keyed by homological index i and
/// generator degree j. Only nonzero entries are stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (i, j)

  void add(int i, int j, const BigInt& value);
  /// beta_{i,i+j}; zero when absent.
  BigInt at(int i, int j) const;
  /// beta_i = sum over j of beta_{i,i+j}, for i = 0..max_homological_index().
  std::vector<BigInt> totals() const;
  int max_homological_index() const;
  const std::map<Key, BigInt>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, BigInt> entries_;
};

/// Graded Betti numbers of a t-strongly stable ideal:
/// beta_{i,i+j} = sum_{u in G(I)_j} C(max(u) - t(j-1) - 1, i).
/// Throws NotStronglyStable otherwise. OpenMP-parallel over generators.
BettiTable graded_betti(const MonomialIdeal& I);

struct Corner {
  int k = 0;  // homological position
  int l = 0;  // degree

  friend bool operator==(const Corner&, const Corner&) = default;
};

/// Corner positions and the matching extremal Betti values.
struct CornerConfig {
  std::vector<Corner> corners;
  std::vector<std::int64_t> values;

  /// Throws InvalidArgument unless k strictly decreases, l strictly
  /// increases, k >= 0, l >= 1, values are positive and lengths match.
  void validate() const;

  friend bool operator==(const CornerConfig&, const CornerConfig&) = default;
};

struct DegreeSequenceEntry {
  int degree = 0;   // l
  int max_index = 0;  // m_l = max { max(u) : u in G(I)_l }
  int k = 0;        // m_l - t(l-1) - 1

  friend bool operator==(const DegreeSequenceEntry&, const DegreeSequenceEntry&) = default;
};

/// One entry per generator degree, ascending.
std::vector<DegreeSequenceEntry> raw_degree_sequence(const MonomialIdeal& I);

/// Entries of raw_degree_sequence whose k strictly exceeds every k of a
/// higher degree; these are exactly the corners.
std::vector<DegreeSequenceEntry> degree_sequence(const MonomialIdeal& I);

/// Corners ordered k descending / l ascending, with values
/// |{u in G(I)_l : max(u) = k + t(l-1) + 1}|. Requires t-strong stability.
CornerConfig extremal_corners(const MonomialIdeal& I);

struct Realization {
  std::vector<Monomial> basic;
  MonomialIdeal ideal;
};

/// Builds basic monomials and the smallest t-strongly stable ideal with the
/// prescribed extremal Betti numbers, or throws Infeasible.
Realization realize_extremal_betti(const CornerConfig& config, const Context& ctx);

/// Plain-text grid: header of column indices i, a totals row, then one row
/// per degree j; zero entries print as "-".
std::string format_betti_table(const BettiTable& table);

namespace serial {

BettiTable graded_betti(const MonomialIdeal& I);

}  // namespace serial

}  // namespace tspread

#endif  // TSPREAD_BETTI_HPP
