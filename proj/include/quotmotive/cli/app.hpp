#pragma once

#include "quotmotive/cli/suite.hpp"
#include "quotmotive/quotmotive.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace quotmotive::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
};

/// Parameters shared by all subcommands; unset flags stay empty.
struct Params {
  std::optional<unsigned> n;
  std::optional<unsigned> r;
  std::optional<unsigned> g;
  std::optional<unsigned long long> q;
  std::optional<unsigned> order;
  std::optional<unsigned> points;
  std::optional<std::string> curve_path;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> grid_path;
  std::string kind;
  std::string method = "auto";
  unsigned threads = 0;
  bool json_output = false;
};

class UsageError : public SpecError {
public:
  using SpecError::SpecError;
};

namespace detail {

template <class T>
T required(const std::optional<T>& v, const char* flag) {
  if (!v) {
    throw UsageError(std::string("missing required flag ") + flag);
  }
  return *v;
}

inline unsigned rank_flag(const Params& p) {
  const unsigned r = required(p.r, "--r");
  if (r == 0) {
    throw UsageError("--r must be >= 1");
  }
  return r;
}

inline unsigned long long q_flag(const Params& p) {
  const unsigned long long q = required(p.q, "--q");
  if (!oracle::prime_power(q)) {
    throw UsageError("--q must be a prime power >= 2, got " + std::to_string(q));
  }
  return q;
}

inline oracle::OracleConfig oracle_config(const Params& p) {
  oracle::OracleConfig config;
  if (p.budget) {
    config.budget = *p.budget;
  }
  return config;
}

/// Curve from --curve, or the genus-0 curve when only --g 0 is given.
inline CurveSpec curve_flag(const Params& p) {
  if (p.curve_path) {
    return load_curve_spec(*p.curve_path);
  }
  if (p.g && *p.g == 0) {
    return CurveSpec::projective_line();
  }
  throw UsageError("point counts need --curve <path> (or --g 0 for the projective line)");
}

inline json params_json(const Params& p) {
  json j = json::object();
  if (p.n) {
    j["n"] = *p.n;
  }
  if (p.r) {
    j["r"] = *p.r;
  }
  if (p.g) {
    j["g"] = *p.g;
  }
  if (p.q) {
    j["q"] = *p.q;
  }
  if (p.order) {
    j["order"] = *p.order;
  }
  if (p.points) {
    j["points"] = *p.points;
  }
  return j;
}

inline json record(const std::string& op, const Params& p) { return {{"op", op}, {"params", params_json(p)}}; }

inline int cmd_class(const Params& p, std::ostream& out) {
  const MotiveClass c = motive::quot_class(required(p.n, "--n"), rank_flag(p));
  if (p.json_output) {
    json j = record("class", p);
    j["class"] = c.to_string();
    out << j.dump() << '\n';
  } else {
    out << c.to_string() << '\n';
  }
  return exit_ok;
}

inline int cmd_poincare(const Params& p, std::ostream& out) {
  const IntPoly poly = motive::poincare_polynomial(required(p.n, "--n"), rank_flag(p), required(p.g, "--g"));
  if (p.json_output) {
    json j = record("poincare", p);
    j["coefficients"] = poly_json(poly);
    j["polynomial"] = poly.to_string();
    out << j.dump() << '\n';
  } else {
    out << poly.to_string() << '\n';
  }
  return exit_ok;
}

inline int cmd_betti(const Params& p, std::ostream& out) {
  const auto betti = motive::betti_numbers(required(p.n, "--n"), rank_flag(p), required(p.g, "--g"));
  if (p.json_output) {
    json j = record("betti", p);
    json b = json::array();
    for (const auto& x : betti) {
      b.push_back(integer_to_json(x));
    }
    j["betti"] = b;
    out << j.dump() << '\n';
  } else {
    out << "k\tb_k\n";
    for (std::size_t k = 0; k < betti.size(); ++k) {
      out << k << '\t' << betti[k] << '\n';
    }
  }
  return exit_ok;
}

inline int cmd_euler(const Params& p, std::ostream& out) {
  const Integer chi = motive::euler_characteristic(required(p.n, "--n"), rank_flag(p), required(p.g, "--g"));
  if (p.json_output) {
    json j = record("euler", p);
    j["euler_characteristic"] = integer_to_json(chi);
    out << j.dump() << '\n';
  } else {
    out << chi << '\n';
  }
  return exit_ok;
}

inline int cmd_count_points(const Params& p, std::ostream& out) {
  const unsigned n = required(p.n, "--n");
  const unsigned r = rank_flag(p);
  const unsigned long long q = q_flag(p);
  const CurveSpec curve = oracle::with_zeta_numerator(curve_flag(p), q, oracle_config(p));
  const Integer count = motive::quot_point_count(n, r, curve, q);
  if (p.json_output) {
    json j = record("count-points", p);
    j["params"]["genus"] = curve.genus;
    j["count"] = integer_to_json(count);
    out << j.dump() << '\n';
  } else {
    out << count << '\n';
  }
  return exit_ok;
}

inline int cmd_punctual(const Params& p, std::ostream& out) {
  const MotiveClass c = motive::punctual_class(required(p.n, "--n"), rank_flag(p));
  std::optional<Integer> value;
  if (p.q) {
    value = detail::specialize_at(c, q_flag(p));
  }
  if (p.json_output) {
    json j = record("punctual", p);
    j["class"] = c.to_string();
    if (value) {
      j["count"] = integer_to_json(*value);
    }
    out << j.dump() << '\n';
  } else {
    out << c.to_string() << '\n';
    if (value) {
      out << "L=" << *p.q << '\t' << *value << '\n';
    }
  }
  return exit_ok;
}

inline int cmd_verify_stratification(const Params& p, std::ostream& out) {
  Params shown = p;
  shown.points = p.points.value_or(1);
  const auto check = motive::verify_stratification(required(p.n, "--n"), rank_flag(p), *shown.points);
  if (p.json_output) {
    json j = record("verify-stratification", shown);
    j["holds"] = check.holds;
    j["lhs"] = check.lhs.to_string();
    j["rhs"] = check.rhs.to_string();
    j["difference"] = check.difference.to_string();
    out << j.dump() << '\n';
  } else if (check.holds) {
    out << "OK\t" << check.lhs.to_string() << '\n';
  } else {
    out << "FAIL\tlhs = " << check.lhs.to_string() << "\n\trhs = " << check.rhs.to_string()
        << "\n\tdifference = " << check.difference.to_string() << '\n';
  }
  return check.holds ? exit_ok : exit_verification_failed;
}

inline int cmd_verify_product(const Params& p, std::ostream& out) {
  const unsigned r = rank_flag(p);
  const unsigned g = required(p.g, "--g");
  const unsigned order = required(p.order, "--order");
  const auto series = motive::poincare_series_product(r, g, order);
  bool all = true;
  json rows = json::array();
  if (!p.json_output) {
    out << "n\tstatus\tpoincare\n";
  }
  for (unsigned n = 0; n <= order; ++n) {
    const IntPoly direct = motive::poincare_polynomial(n, r, g);
    const bool ok = series[n] == direct;
    all = all && ok;
    if (p.json_output) {
      rows.push_back({{"n", n}, {"ok", ok}, {"poincare", poly_json(direct)}, {"product", poly_json(series[n])}});
    } else {
      out << n << '\t' << (ok ? "OK" : "FAIL") << '\t' << direct.to_string();
      if (!ok) {
        out << "\tproduct: " << series[n].to_string();
      }
      out << '\n';
    }
  }
  if (p.json_output) {
    json j = record("verify-product", p);
    j["rows"] = rows;
    j["all_ok"] = all;
    out << j.dump() << '\n';
  }
  return all ? exit_ok : exit_verification_failed;
}

inline oracle::PunctualMethod method_flag(const std::string& m) {
  if (m == "auto") {
    return oracle::PunctualMethod::automatic;
  }
  if (m == "walk") {
    return oracle::PunctualMethod::subspace_walk;
  }
  if (m == "hermite") {
    return oracle::PunctualMethod::local_hermite;
  }
  if (m == "both") {
    return oracle::PunctualMethod::both;
  }
  throw UsageError("--method must be one of auto, walk, hermite, both");
}

inline int cmd_oracle(const Params& p, std::ostream& out) {
  const oracle::OracleConfig config = oracle_config(p);
  json j = record(p.kind, p);
  if (p.kind == "curve-points" || p.kind == "sym-divisors") {
    const CurveSpec curve = load_curve_spec(required(p.curve_path, "--curve"));
    if (!curve.equation) {
      throw UsageError("oracle " + p.kind + " needs a curve spec with an equation");
    }
    const unsigned long long q = q_flag(p);
    if (p.kind == "curve-points") {
      const auto counts = oracle::curve_point_counts(*curve.equation, q, required(p.order, "--order"), config);
      json c = json::array();
      for (const auto& x : counts) {
        c.push_back(integer_to_json(x));
      }
      j["count"] = c;
    } else {
      j["count"] = integer_to_json(oracle::sym_point_count_bruteforce(*curve.equation, q, required(p.n, "--n"), config));
    }
  } else {
    const unsigned long long q = q_flag(p);
    const oracle::FqField field = oracle::FqField::of_size(q);
    const unsigned r = rank_flag(p);
    const unsigned n = required(p.n, "--n");
    Integer count;
    if (p.kind == "punctual") {
      count = oracle::count_punctual_quotients(field, r, n, method_flag(p.method), config);
    } else if (p.kind == "affine") {
      count = oracle::count_colength_submodules_affine(field, r, n, config);
    } else if (p.kind == "affine-framed") {
      count = oracle::count_colength_submodules_framed(field, r, n, config);
    } else if (p.kind == "p1") {
      count = oracle::quot_point_count_bruteforce_P1(field, r, n, config);
    } else {
      throw UsageError("unknown oracle kind " + p.kind);
    }
    j["count"] = integer_to_json(count);
  }
  out << j.dump() << '\n';
  return exit_ok;
}

inline int cmd_suite(const Params& p, std::ostream& out) {
  json grid = default_grid();
  if (p.grid_path) {
    std::ifstream in(*p.grid_path);
    if (!in) {
      throw SpecError("cannot read grid " + *p.grid_path);
    }
    try {
      in >> grid;
    } catch (const json::exception& e) {
      throw SpecError("malformed grid " + *p.grid_path + ": " + e.what());
    }
  }
  const SuiteReport report = run_suite(grid, oracle_config(p), p.threads);
  if (p.json_output) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_table();
  }
  if (report.any_error()) {
    return exit_usage;
  }
  return report.all_pass() ? exit_ok : exit_verification_failed;
}

} // namespace detail

/// Parses `args` (without the program name), runs one command, returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classes, Poincare polynomials and point counts of Quot schemes on curves"};
  app.require_subcommand(1);
  Params p;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", p.n, "length of the quotients");
    sub->add_option("--r", p.r, "rank of the bundle");
    sub->add_option("--g", p.g, "genus of the curve");
    sub->add_option("--q", p.q, "field size (prime power)");
    sub->add_option("--order", p.order, "truncation order");
    sub->add_option("--curve", p.curve_path, "curve spec JSON file");
    sub->add_option("--budget", p.budget, "oracle operation budget");
    sub->add_flag("--json", p.json_output, "machine-readable output");
  };
  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const Params&, std::ostream&);
  };
  const std::vector<Entry> entries{
      {"class", "class in the Grothendieck ring", detail::cmd_class},
      {"poincare", "Poincare polynomial", detail::cmd_poincare},
      {"betti", "Betti numbers", detail::cmd_betti},
      {"euler", "Euler characteristic", detail::cmd_euler},
      {"count-points", "number of F_q-points", detail::cmd_count_points},
      {"punctual", "class of the punctual fiber", detail::cmd_punctual},
      {"verify-stratification", "check the stratification identity", detail::cmd_verify_stratification},
      {"verify-product", "check the product formula for Poincare series", detail::cmd_verify_product},
      {"oracle", "brute-force enumeration over a finite field", detail::cmd_oracle},
      {"suite", "run a verification grid", detail::cmd_suite},
  };
  std::vector<CLI::App*> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    subs.push_back(sub);
  }
  subs[6]->add_option("--points", p.points, "number of removed rational points (default 1)");
  subs[8]->add_option("--kind", p.kind, "punctual | affine | affine-framed | p1 | curve-points | sym-divisors")
      ->required();
  subs[8]->add_option("--method", p.method, "punctual method: auto | walk | hermite | both");
  subs[9]->add_option("--grid", p.grid_path, "grid JSON file (default: full verification grid)");
  subs[9]->add_option("--threads", p.threads, "worker threads (0 = hardware)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!subs[i]->parsed()) {
      continue;
    }
    try {
      return entries[i].fn(p, out);
    } catch (const oracle::OracleDisagreementError& e) {
      err << "verification failed: " << e.what() << '\n';
      return exit_verification_failed;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }
  return exit_usage;
}

} // namespace quotmotive::cli
