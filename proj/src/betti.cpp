#include "tspread/betti.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "tspread/construct.hpp"
#include "tspread/error.hpp"

namespace tspread {

void BettiTable::add(int i, int j, const BigInt& value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

BigInt BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? BigInt(0) : it->second;
}

int BettiTable::max_homological_index() const {
  int out = -1;
  for (const auto& [key, value] : entries_) out = std::max(out, key.first);
  return out;
}

std::vector<BigInt> BettiTable::totals() const {
  std::vector<BigInt> out(static_cast<std::size_t>(max_homological_index() + 1));
  for (const auto& [key, value] : entries_) out[key.first] += value;
  return out;
}

namespace {

void require_strongly_stable(const MonomialIdeal& I) {
  if (!is_t_ss_ideal(I))
    throw Error(ErrorCode::NotStronglyStable, "expected a t-strongly stable ideal");
}

// Row C(N, 0..N) contributed by one generator.
std::vector<BigInt> generator_row(const Monomial& u, int t) {
  const int j = u.degree();
  if (j == 0) return {BigInt(1)};
  const long top = u.max() - static_cast<long>(t) * (j - 1) - 1;
  std::vector<BigInt> row;
  row.reserve(static_cast<std::size_t>(top + 1));
  BigInt c = 1;
  for (long i = 0; i <= top; ++i) {
    row.push_back(c);
    c = c * (top - i) / (i + 1);
  }
  return row;
}

BettiTable assemble(std::span<const Monomial> gens, const std::vector<std::vector<BigInt>>& rows) {
  BettiTable table;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < rows[g].size(); ++i)
      table.add(static_cast<int>(i), gens[g].degree(), rows[g][i]);
  return table;
}

}  // namespace

BettiTable graded_betti(const MonomialIdeal& I) {
  require_strongly_stable(I);
  auto gens = I.generators();
  const int t = I.context().t();
  std::vector<std::vector<BigInt>> rows(gens.size());
  const auto count = static_cast<std::ptrdiff_t>(gens.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t g = 0; g < count; ++g) rows[g] = generator_row(gens[g], t);
  return assemble(gens, rows);
}

namespace serial {

BettiTable graded_betti(const MonomialIdeal& I) {
  require_strongly_stable(I);
  auto gens = I.generators();
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(gens.size());
  for (const auto& u : gens) rows.push_back(generator_row(u, I.context().t()));
  return assemble(gens, rows);
}

}  // namespace serial

void CornerConfig::validate() const {
  if (corners.size() != values.size())
    throw Error(ErrorCode::InvalidArgument, "corner and value lists differ in length");
  for (std::size_t r = 0; r < corners.size(); ++r) {
    const auto& c = corners[r];
    if (c.k < 0 || c.l < 1)
      throw Error(ErrorCode::InvalidArgument, "corners need k >= 0 and l >= 1");
    if (values[r] < 1) throw Error(ErrorCode::InvalidArgument, "corner values must be positive");
    if (r > 0 && !(c.k < corners[r - 1].k && c.l > corners[r - 1].l))
      throw Error(ErrorCode::InvalidArgument,
                  "corners must have k strictly decreasing and l strictly increasing");
  }
}

std::vector<DegreeSequenceEntry> raw_degree_sequence(const MonomialIdeal& I) {
  const int t = I.context().t();
  std::vector<DegreeSequenceEntry> out;
  for (int l : I.degrees()) {
    int m = 0;
    for (const auto& u : I.generators_of_degree(l)) m = std::max(m, u.max());
    const int k = l == 0 ? 0 : m - t * (l - 1) - 1;
    out.push_back({l, m, k});
  }
  return out;
}

std::vector<DegreeSequenceEntry> degree_sequence(const MonomialIdeal& I) {
  auto raw = raw_degree_sequence(I);
  std::vector<DegreeSequenceEntry> kept;
  for (auto it = raw.rbegin(); it != raw.rend(); ++it)
    if (kept.empty() || it->k > kept.back().k) kept.push_back(*it);
  std::reverse(kept.begin(), kept.end());
  return kept;
}

CornerConfig extremal_corners(const MonomialIdeal& I) {
  require_strongly_stable(I);
  CornerConfig out;
  for (const auto& e : degree_sequence(I)) {
    auto gens = I.generators_of_degree(e.degree);
    auto value = std::count_if(gens.begin(), gens.end(),
                               [&](const Monomial& u) { return u.max() == e.max_index; });
    out.corners.push_back({e.k, e.degree});
    out.values.push_back(value);
  }
  return out;
}

namespace {

std::string describe(const Corner& c) {
  return "(" + std::to_string(c.k) + "," + std::to_string(c.l) + ")";
}

// Degree-l t-spread monomials with max index m, >slex-descending, outside I.
std::vector<Monomial> basic_candidates(int l, int m, std::int64_t wanted, const MonomialIdeal& I) {
  std::vector<Monomial> out;
  const int t = I.context().t();
  if (l == 1) {
    Monomial x{m};
    if (!I.contains(x)) out.push_back(std::move(x));
    return out;
  }
  if (m - t < 1) return out;
  const Context head(m - t, t);
  if (!head.has_degree(l - 1)) return out;
  for (std::optional<Monomial> w = max_mon(l - 1, head); w; w = t_next_lex(*w, head)) {
    Monomial cand = w->times(m);
    if (I.contains(cand)) continue;
    out.push_back(std::move(cand));
    if (static_cast<std::int64_t>(out.size()) == wanted) break;
  }
  return out;
}

}  // namespace

Realization realize_extremal_betti(const CornerConfig& config, const Context& ctx) {
  config.validate();
  std::vector<Monomial> basic;
  MonomialIdeal ideal(ctx);
  for (std::size_t r = 0; r < config.corners.size(); ++r) {
    const Corner& c = config.corners[r];
    const std::int64_t a = config.values[r];
    const long m = c.k + static_cast<long>(ctx.t()) * (c.l - 1) + 1;
    if (m > ctx.n())
      throw Error(ErrorCode::Infeasible, "corner " + describe(c) + " needs x_" +
                                             std::to_string(m) + " but n = " +
                                             std::to_string(ctx.n()));
    auto picked = basic_candidates(c.l, static_cast<int>(m), a, ideal);
    if (static_cast<std::int64_t>(picked.size()) < a)
      throw Error(ErrorCode::Infeasible,
                  "corner " + describe(c) + " admits only " + std::to_string(picked.size()) +
                      " basic monomials with max index " + std::to_string(m) + ", value " +
                      std::to_string(a) + " requested");
    basic.insert(basic.end(), picked.begin(), picked.end());
    ideal = t_ss_ideal(MonomialIdeal(ctx, basic));
  }

  const CornerConfig got = extremal_corners(ideal);
  if (got != config) {
    std::size_t r = 0;
    while (r < got.corners.size() && r < config.corners.size() &&
           got.corners[r] == config.corners[r] && got.values[r] == config.values[r])
      ++r;
    const std::string where =
        r < config.corners.size() ? describe(config.corners[r]) : std::string("(extra corner)");
    throw Error(ErrorCode::Infeasible, "configuration is not realizable at corner " + where);
  }
  return {std::move(basic), std::move(ideal)};
}

std::string format_betti_table(const BettiTable& table) {
  if (table.empty()) return "(zero)\n";
  const int columns = table.max_homological_index() + 1;
  int jmin = table.entries().begin()->first.second;
  int jmax = jmin;
  for (const auto& [key, value] : table.entries()) {
    jmin = std::min(jmin, key.second);
    jmax = std::max(jmax, key.second);
  }

  std::vector<std::string> labels{"", "total:"};
  std::vector<std::vector<std::string>> cells(2);
  for (int i = 0; i < columns; ++i) cells[0].push_back(std::to_string(i));
  for (const auto& v : table.totals()) cells[1].push_back(v.str());
  for (int j = jmin; j <= jmax; ++j) {
    labels.push_back(std::to_string(j) + ":");
    std::vector<std::string> row;
    for (int i = 0; i < columns; ++i) {
      BigInt v = table.at(i, j);
      row.push_back(v == 0 ? "-" : v.str());
    }
    cells.push_back(std::move(row));
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(columns, 0);
  for (const auto& row : cells)
    for (int i = 0; i < columns; ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << std::string(label_width - labels[r].size(), ' ') << labels[r];
    for (int i = 0; i < columns; ++i)
      os << ' ' << std::string(width[i] - cells[r][i].size(), ' ') << cells[r][i];
    os << '\n';
  }
  return os.str();
}

}  // namespace tspread
