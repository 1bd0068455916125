#ifndef TSPREAD_BINOMIAL_HPP
#define TSPREAD_BINOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace tspread {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(top, bottom); zero whenever bottom < 0, top < 0 or top < bottom.
BigInt binomial(long top, long bottom);

struct BinomialTerm {
  long top = 0;
  long bottom = 0;

  BigInt value() const { return binomial(top, bottom); }

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

}  // namespace tspread

#endif  // TSPREAD_BINOMIAL_HPP
