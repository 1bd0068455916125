#include "tspread/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "tspread/error.hpp"

namespace tspread::io {

namespace {

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Drops one pair of enclosing brackets of any kind.
std::string unwrap(std::string s) {
  if (s.size() >= 2) {
    const char a = s.front(), b = s.back();
    if ((a == '(' && b == ')') || (a == '[' && b == ']') || (a == '{' && b == '}'))
      return s.substr(1, s.size() - 2);
  }
  return s;
}

int to_index(std::string_view digits, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw Error(ErrorCode::InvalidArgument, "cannot parse monomial '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text) {
  const std::string s = unwrap(strip(text));
  std::vector<int> idx;
  if (s.empty()) return Monomial();
  if (s.find('x') != std::string::npos) {
    // x_2*x_5 or x_2x_5
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] == '*') {
        if (pos == 0 || pos + 1 == s.size() || s[pos + 1] == '*')
          throw Error(ErrorCode::InvalidArgument, "cannot parse monomial '" + std::string(text) + "'");
        ++pos;
        continue;
      }
      if (s.compare(pos, 2, "x_") != 0)
        throw Error(ErrorCode::InvalidArgument, "cannot parse monomial '" + std::string(text) + "'");
      pos += 2;
      std::size_t end = pos;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      idx.push_back(to_index(std::string_view(s).substr(pos, end - pos), text));
      pos = end;
    }
  } else {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t end = s.find(',', pos);
      if (end == std::string::npos) end = s.size();
      idx.push_back(to_index(std::string_view(s).substr(pos, end - pos), text));
      pos = end + 1;
    }
  }
  return Monomial(std::move(idx));
}

std::string format_monomial(const Monomial& u) {
  if (u.is_one()) return "()";
  std::string out;
  for (int i : u.indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

std::string format_monomial_product(const Monomial& u) {
  if (u.is_one()) return "1";
  std::string out;
  for (int i : u.indices()) out += "x_" + std::to_string(i);
  return out;
}

nlohmann::json to_json(const Monomial& u) {
  return nlohmann::json(std::vector<int>(u.indices().begin(), u.indices().end()));
}

nlohmann::json to_json(std::span<const Monomial> l) {
  auto out = nlohmann::json::array();
  for (const auto& u : l) out.push_back(to_json(u));
  return out;
}

Monomial monomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected a JSON index array");
  std::vector<int> idx;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw Error(ErrorCode::InvalidArgument, "expected a JSON index array");
    idx.push_back(e.get<int>());
  }
  return Monomial(std::move(idx));
}

std::vector<Monomial> read_monomials(std::istream& in) {
  std::vector<Monomial> out;
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank(line)) continue;
    const auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') continue;
    out.push_back(parse_monomial(line));
  }
  return out;
}

std::vector<BigInt> parse_integer_list(std::string_view text) {
  const std::string s = unwrap(strip(text));
  std::vector<BigInt> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    const std::string item = s.substr(pos, end - pos);
    const bool ok = !item.empty() &&
                    std::all_of(item.begin() + (item[0] == '-' ? 1 : 0), item.end(),
                                [](unsigned char c) { return std::isdigit(c); }) &&
                    item != "-";
    if (!ok) throw Error(ErrorCode::InvalidArgument, "cannot parse integer list '" + std::string(text) + "'");
    out.emplace_back(item.c_str());
    pos = end + 1;
  }
  return out;
}

std::string format_braced(std::span<const BigInt> values) {
  std::string out = "{";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ", ";
    out += values[k].str();
  }
  return out + "}";
}

}  // namespace tspread::io
