#ifndef TSPREAD_IO_HPP
#define TSPREAD_IO_HPP

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tspread/binomial.hpp"
#include "tspread/kk.hpp"
#include "tspread/monomial.hpp"

namespace tspread::io {

/// Accepts "2,5,9,14", "x_2*x_5*x_9*x_14", "x_2x_5x_9" and "[2,5,9]".
/// "()" and the empty string parse to the monomial 1.
Monomial parse_monomial(std::string_view text);

/// "2,5,9,14"; the monomial 1 prints as "()".
std::string format_monomial(const Monomial& u);
/// "x_2x_5x_9x_14"; the monomial 1 prints as "1".
std::string format_monomial_product(const Monomial& u);

nlohmann::json to_json(const Monomial& u);
nlohmann::json to_json(std::span<const Monomial> l);
Monomial monomial_from_json(const nlohmann::json& j);

/// One monomial per line; blank lines and lines starting with '#' are skipped.
std::vector<Monomial> read_monomials(std::istream& in);

/// "1,12,50" or "{1, 12, 50}" or "[1,12,50]".
std::vector<BigInt> parse_integer_list(std::string_view text);

/// "{1, 8, 21, 10, 0}".
std::string format_braced(std::span<const BigInt> values);

}  // namespace tspread::io

#endif  // TSPREAD_IO_HPP
