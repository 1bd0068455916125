#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tspread/betti.hpp"
#include "tspread/construct.hpp"
#include "tspread/count.hpp"
#include "tspread/error.hpp"
#include "tspread/io.hpp"
#include "tspread/kk.hpp"
#include "tspread/oracle.hpp"

using namespace tspread;
using nlohmann::json;

namespace {

constexpr long kOutputLimit = 1000000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int t = 1;
  std::string format = "text";
  bool oracle = false;
  bool force = false;
  bool shift = false;
  std::string input;
  std::vector<std::string> args;
};

bool json_mode(const Options& o) { return o.format == "json"; }

Context context_of(const Options& o) {
  if (o.n < 1) throw UsageError("--n is required");
  return Context(o.n, o.t);
}

Monomial monomial_arg(const std::string& text) {
  try {
    return io::parse_monomial(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<Monomial> monomial_args(const Options& o, std::size_t at_least) {
  if (o.args.size() < at_least) throw UsageError("expected at least " + std::to_string(at_least) + " monomial argument(s)");
  std::vector<Monomial> out;
  for (const auto& a : o.args) out.push_back(monomial_arg(a));
  return out;
}

Monomial single_monomial(const Options& o) {
  if (o.args.size() != 1) throw UsageError("expected exactly one monomial argument");
  return monomial_arg(o.args[0]);
}

std::vector<BigInt> integer_args(const Options& o) {
  std::vector<BigInt> out;
  try {
    for (const auto& a : o.args) {
      auto part = io::parse_integer_list(a);
      out.insert(out.end(), part.begin(), part.end());
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (out.empty()) throw UsageError("expected integer arguments");
  return out;
}

// Positional monomials, else --input, else stdin.
MonomialIdeal ideal_arg(const Options& o, const Context& ctx) {
  std::vector<Monomial> gens;
  if (!o.args.empty()) {
    gens = monomial_args(o, 1);
  } else {
    try {
      if (o.input.empty() || o.input == "-") {
        gens = io::read_monomials(std::cin);
      } else {
        std::ifstream in(o.input);
        if (!in) throw UsageError("cannot open " + o.input);
        gens = io::read_monomials(in);
      }
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  return MonomialIdeal(ctx, std::move(gens));
}

json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::int64_t>::max()) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

void print_monomials(const Options& o, std::span<const Monomial> l) {
  if (json_mode(o)) {
    std::cout << io::to_json(l).dump() << '\n';
    return;
  }
  for (const auto& u : l) std::cout << io::format_monomial(u) << '\n';
}

void print_value(const Options& o, const BigInt& v) {
  if (json_mode(o))
    std::cout << big_json(v).dump() << '\n';
  else
    std::cout << v << '\n';
}

void print_bool(bool b) { std::cout << (b ? "true" : "false") << '\n'; }

void print_optional(const Options& o, const std::optional<Monomial>& u) {
  if (json_mode(o))
    std::cout << (u ? io::to_json(*u) : json(nullptr)).dump() << '\n';
  else
    std::cout << (u ? io::format_monomial(*u) : std::string("none")) << '\n';
}

// Returns false (and reports) when the oracle disagrees.
bool report(const Options& o, bool agree) {
  if (!o.oracle) return true;
  std::cerr << (agree ? "oracle: agree" : "oracle: DISAGREE") << '\n';
  return agree;
}


void guard_size(const Options& o, const BigInt& size) {
  if (!o.force && size > kOutputLimit)
    throw UsageError("output would have " + size.str() + " monomials; pass --force");
}

using Handler = std::function<bool(const Options&)>;

std::map<std::string, std::pair<std::string, Handler>> commands() {
  std::map<std::string, std::pair<std::string, Handler>> c;

  c["check"] = {"report whether each monomial is t-spread", [](const Options& o) {
    const Context ctx = context_of(o);
    auto l = monomial_args(o, 1);
    if (json_mode(o)) {
      auto out = json::array();
      for (const auto& u : l) out.push_back(is_t_spread(u, ctx));
      std::cout << out.dump() << '\n';
    } else {
      for (const auto& u : l) print_bool(is_t_spread(u, ctx));
    }
    return true;
  }};

  c["sieve"] = {"keep the t-spread monomials", [](const Options& o) {
    const Context ctx = context_of(o);
    auto l = monomial_args(o, 0);
    auto kept = sieve_t_spread(l, ctx);
    print_monomials(o, kept);
    return true;
  }};

  c["shadow"] = {"t-shadow of equal-degree t-spread monomials", [](const Options& o) {
    const Context ctx = context_of(o);
    auto l = monomial_args(o, 1);
    auto s = t_shadow_set(l, ctx);
    print_monomials(o, s);
    return report(o, o.oracle && s == oracle::shadow(l, ctx));
  }};

  c["next-lex"] = {"t-lex successor", [](const Options& o) {
    const Context ctx = context_of(o);
    auto u = single_monomial(o);
    auto next = t_next_lex(u, ctx);
    print_optional(o, next);
    if (!o.oracle) return true;
    std::optional<Monomial> expect;
    for (const auto& w : oracle::enumerate_veronese(u.degree(), ctx))
      if (slex_greater(u, w)) {
        expect = w;
        break;
      }
    return report(o, expect == next);
  }};

  c["lex-seg"] = {"t-lex segment L_t[v,u]", [](const Options& o) {
    const Context ctx = context_of(o);
    if (o.args.size() != 2) throw UsageError("expected monomials v and u");
    const Monomial v = monomial_arg(o.args[0]);
    const Monomial u = monomial_arg(o.args[1]);
    require_t_spread(v, ctx);
    require_t_spread(u, ctx);
    if (v.degree() == u.degree() && !slex_greater(u, v))
      guard_size(o, count_t_lex_mon(u, ctx) - count_t_lex_mon(v, ctx) + 1);
    auto seg = t_lex_seg(v, u, ctx);
    print_monomials(o, seg.monomials);
    if (!o.oracle) return true;
    std::vector<Monomial> expect;
    for (const auto& w : oracle::lex_set(u, ctx))
      if (!slex_greater(w, v)) expect.push_back(w);
    return report(o, seg.monomials == expect);
  }};

  c["lex-mon"] = {"initial t-lex segment L_t{u}", [](const Options& o) {
    const Context ctx = context_of(o);
    auto u = single_monomial(o);
    guard_size(o, count_t_lex_mon(u, ctx));
    auto seg = t_lex_mon(u, ctx);
    print_monomials(o, seg.monomials);
    return report(o, o.oracle && seg.monomials == oracle::lex_set(u, ctx));
  }};

  c["count-lex"] = {"|L_t{u}| without construction", [](const Options& o) {
    const Context ctx = context_of(o);
    auto u = single_monomial(o);
    const BigInt c = count_t_lex_mon(u, ctx);
    print_value(o, c);
    return report(o, o.oracle && c == oracle::lex_set(u, ctx).size());
  }};

  c["ss-seg"] = {"t-strongly stable segment B_t[v,u]", [](const Options& o) {
    const Context ctx = context_of(o);
    if (o.args.size() != 2) throw UsageError("expected monomials v and u");
    const Monomial v = monomial_arg(o.args[0]);
    const Monomial u = monomial_arg(o.args[1]);
    require_t_spread(u, ctx);
    guard_size(o, count_t_ss_mon(u, ctx));
    auto seg = t_ss_seg(v, u, ctx);
    print_monomials(o, seg.monomials);
    if (!o.oracle) return true;
    std::vector<Monomial> expect;
    for (const auto& w : oracle::borel_set(u, ctx))
      if (!slex_greater(w, v)) expect.push_back(w);
    return report(o, seg.monomials == expect);
  }};

  c["ss-mon"] = {"initial t-strongly stable segment B_t{u}", [](const Options& o) {
    const Context ctx = context_of(o);
    auto u = single_monomial(o);
    guard_size(o, count_t_ss_mon(u, ctx));
    auto seg = t_ss_mon(u, ctx);
    print_monomials(o, seg.monomials);
    return report(o, o.oracle && seg.monomials == oracle::borel_set(u, ctx));
  }};

  c["count-ss"] = {"|B_t{u}| without construction", [](const Options& o) {
    const Context ctx = context_of(o);
    auto u = single_monomial(o);
    const BigInt c = count_t_ss_mon(u, ctx);
    print_value(o, c);
    return report(o, o.oracle && c == oracle::borel_set(u, ctx).size());
  }};

  c["cq"] = {"the C_q operator on a_1 >= ... >= a_q", [](const Options& o) {
    std::vector<long> a;
    for (const auto& v : integer_args(o)) a.push_back(static_cast<long>(v));
    print_value(o, cq_operator(a));
    return true;
  }};

  c["ss-ideal"] = {"smallest t-strongly stable ideal containing the input", [](const Options& o) {
    const Context ctx = context_of(o);
    auto I = ideal_arg(o, ctx);
    auto J = t_ss_ideal(I);
    print_monomials(o, J.generators());
    return report(o, o.oracle && J == oracle::ss_ideal(I));
  }};

  c["veronese"] = {"M_{n,d,t}", [](const Options& o) {
    const Context ctx = context_of(o);
    auto d = integer_args(o);
    if (d.size() != 1) throw UsageError("expected the degree d");
    const int deg = static_cast<int>(d[0]);
    guard_size(o, card_veronese(std::max(deg, 0), ctx));
    auto l = t_veronese(deg, ctx);
    print_monomials(o, l);
    return report(o, o.oracle && l == oracle::enumerate_veronese(deg, ctx));
  }};

  c["betti"] = {"graded Betti numbers of a t-strongly stable ideal", [](const Options& o) {
    const Context ctx = context_of(o);
    auto I = ideal_arg(o, ctx);
    auto table = graded_betti(I);
    if (json_mode(o)) {
      json out;
      out["totals"] = json::array();
      for (const auto& v : table.totals()) out["totals"].push_back(big_json(v));
      out["entries"] = json::array();
      for (const auto& [key, v] : table.entries())
        out["entries"].push_back({key.first, key.second, big_json(v)});
      std::cout << out.dump() << '\n';
    } else {
      std::cout << format_betti_table(table);
    }
    return report(o, o.oracle && table == serial::graded_betti(I));
  }};

  c["corners"] = {"extremal Betti numbers (k,l): value", [](const Options& o) {
    const Context ctx = context_of(o);
    auto I = ideal_arg(o, ctx);
    auto cfg = extremal_corners(I);
    if (json_mode(o)) {
      auto out = json::array();
      for (std::size_t r = 0; r < cfg.corners.size(); ++r)
        out.push_back({{"k", cfg.corners[r].k}, {"l", cfg.corners[r].l}, {"value", cfg.values[r]}});
      std::cout << out.dump() << '\n';
    } else {
      for (std::size_t r = 0; r < cfg.corners.size(); ++r)
        std::cout << "(" << cfg.corners[r].k << "," << cfg.corners[r].l << "): " << cfg.values[r] << '\n';
    }
    return true;
  }};

  c["realize-betti"] = {"ideal with prescribed extremal Betti numbers; arguments k,l=value", [](const Options& o) {
    const Context ctx = context_of(o);
    CornerConfig cfg;
    for (const auto& a : o.args) {
      const auto eq = a.find('=');
      if (eq == std::string::npos) throw UsageError("corner arguments look like k,l=value");
      std::vector<BigInt> kl, v;
      try {
        kl = io::parse_integer_list(a.substr(0, eq));
        v = io::parse_integer_list(a.substr(eq + 1));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      if (kl.size() != 2 || v.size() != 1) throw UsageError("corner arguments look like k,l=value");
      cfg.corners.push_back({static_cast<int>(kl[0]), static_cast<int>(kl[1])});
      cfg.values.push_back(static_cast<std::int64_t>(v[0]));
    }
    if (cfg.corners.empty()) throw UsageError("expected at least one corner");
    auto r = realize_extremal_betti(cfg, ctx);
    if (json_mode(o)) {
      json out;
      out["basic"] = io::to_json(r.basic);
      out["generators"] = io::to_json(r.ideal.generators());
      std::cout << out.dump() << '\n';
    } else {
      std::cout << "basic:\n";
      for (const auto& u : r.basic) std::cout << io::format_monomial(u) << '\n';
      std::cout << "generators:\n";
      for (const auto& u : r.ideal.generators()) std::cout << io::format_monomial(u) << '\n';
    }
    return report(o, o.oracle && r.ideal == oracle::ss_ideal(MonomialIdeal(ctx, r.basic)));
  }};

  c["ft-vector"] = {"f_t-vector of a t-spread ideal", [](const Options& o) {
    const Context ctx = context_of(o);
    auto I = ideal_arg(o, ctx);
    auto f = ft_vector(I);
    if (json_mode(o)) {
      auto out = json::array();
      for (const auto& v : f.values) out.push_back(big_json(v));
      std::cout << out.dump() << '\n';
    } else {
      std::cout << io::format_braced(f.values) << '\n';
    }
    return report(o, o.oracle && f == oracle::ft_vector(I));
  }};

  c["macaulay"] = {"d-th Macaulay expansion of a: arguments a d", [](const Options& o) {
    context_of(o);
    auto v = integer_args(o);
    if (v.size() != 2) throw UsageError("expected a and d");
    auto e = t_macaulay_expansion(v[0], o.n, static_cast<int>(v[1]), o.t, o.shift);
    const BigInt value = solve_binomial_expansion(e);
    if (json_mode(o)) {
      json out;
      out["terms"] = json::array();
      for (const auto& term : e.terms) out["terms"].push_back({term.top, term.bottom});
      out["value"] = big_json(value);
      std::cout << out.dump() << '\n';
    } else {
      std::string s = "{";
      for (std::size_t k = 0; k < e.terms.size(); ++k)
        s += (k ? ", {" : "{") + std::to_string(e.terms[k].top) + "," + std::to_string(e.terms[k].bottom) + "}";
      std::cout << s << "} = " << value << '\n';
    }
    return true;
  }};

  c["is-ft"] = {"whether f is an f_t-vector", [](const Options& o) {
    const Context ctx = context_of(o);
    print_bool(is_ft_vector({integer_args(o)}, ctx));
    return true;
  }};

  c["lex-ideal"] = {"t-lex ideal with the given f_t-vector, or of the input ideal with --input", [](const Options& o) {
    const Context ctx = context_of(o);
    MonomialIdeal L(ctx);
    if (o.input.empty()) {
      L = t_lex_ideal_from_f({integer_args(o)}, ctx);
    } else {
      L = t_lex_ideal_of(ideal_arg(o, ctx));
    }
    print_monomials(o, L.generators());
    return true;
  }};

  c["is-lex-ideal"] = {"whether the ideal is t-lex", [](const Options& o) {
    const Context ctx = context_of(o);
    print_bool(is_t_lex_ideal(ideal_arg(o, ctx)));
    return true;
  }};

  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-spread monomial toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--n", o.n, "number of variables")->check(CLI::PositiveNumber);
  app.add_option("--t", o.t, "spread")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--oracle", o.oracle, "cross-check with the brute-force oracle (stderr)");
  app.add_flag("--force", o.force, "allow outputs beyond 10^6 monomials");
  app.add_option("--input", o.input, "ideal file, one monomial per line ('-' for stdin)");
  app.add_flag("--shift", o.shift, "macaulay: apply the Kruskal-Katona shift");

  auto table = commands();
  std::map<CLI::App*, Handler> handlers;
  for (auto& [name, entry] : table) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->add_option("args", o.args, "positional arguments");
    handlers[sub] = entry.second;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto* sub : app.get_subcommands())
      if (!handlers.at(sub)(o)) return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
