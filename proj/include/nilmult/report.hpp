#pragma once

// Sweep reports: one entry per admissible tuple, serialized as JSON lines
// (one object per line, fixed key order) or as CSV with the same columns.
//
// Schema of a line:
//   params             {"p": int, "tuple": [alpha, beta, gamma, rho, sigma]}
//   canonical          [alpha, beta, gamma, rho, sigma]
//   family             "1a" | "1b" | "1c" | "2" | "3a" | "3b" | "3c"
//   label              "G1".."G7" | "K1".."K14" | null
//   capable            bool
//   two_capable        bool
//   multiplier_closed  [elementary divisors] | null
//   multiplier_oracle  [elementary divisors]
//   agreement          bool, false only when both multipliers exist and differ
// Integers that do not fit in 64 bits are written as decimal strings.

#include "nilmult/lattice.hpp"
#include "nilmult/oracle.hpp"
#include "nilmult/params.hpp"
#include "nilmult/theory.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace nilmult {

struct ReportEntry {
  GroupParams params;
  Classification classification;
  bool capable = false;
  bool two_capable = false;
  std::optional<AbelianInvariants> multiplier_closed;
  AbelianInvariants multiplier_oracle;
  bool agreement = true;
};

using Report = std::vector<ReportEntry>;

inline ReportEntry evaluate(const GroupParams& g) {
  ReportEntry e;
  e.params = g;
  e.classification = canonicalize(g);
  e.capable = is_capable(g);
  e.two_capable = is_2_capable(g);
  e.multiplier_closed = closed_form_multiplier(g);
  e.multiplier_oracle = multiplier_of(g);
  e.agreement = !e.multiplier_closed || *e.multiplier_closed == e.multiplier_oracle;
  return e;
}

// Admissible tuples for each prime with 1 <= alpha, beta, gamma <= max_exp,
// in (p, alpha, beta, gamma, rho, sigma) lexicographic order.
inline std::vector<GroupParams> sweep_params(const std::vector<Int>& primes, unsigned long max_exp) {
  std::vector<Int> ps = primes;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::vector<GroupParams> out;
  for (const auto& p : ps)
    for (unsigned long al = 1; al <= max_exp; ++al)
      for (unsigned long be = 1; be <= al; ++be)
        for (unsigned long ga = 1; ga <= be; ++ga)
          for (unsigned long rh = 0; rh <= ga; ++rh)
            for (unsigned long si = 0; si <= ga; ++si) {
              GroupParams g{p, al, be, ga, rh, si};
              if (admissible(g)) out.push_back(g);
            }
  return out;
}

// Evaluates every tuple on `jobs` threads; entries keep the input order.
inline Report run_sweep(const std::vector<GroupParams>& params, unsigned jobs = 1) {
  Report report(params.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < params.size();) report[i] = evaluate(params[i]);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(params.size())));
  if (jobs == 1) {
    work();
    return report;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  pool.clear();
  return report;
}

inline bool all_agree(const Report& report) {
  return std::all_of(report.begin(), report.end(), [](const ReportEntry& e) { return e.agreement; });
}

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json int_json(const Int& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return n.get_si();
  return n.get_str();
}

inline ordered_json tuple_json(const GroupParams& g) {
  return ordered_json::array({g.alpha, g.beta, g.gamma, g.rho, g.sigma});
}

inline ordered_json invariants_json(const AbelianInvariants& inv) {
  ordered_json out = ordered_json::array();
  for (const auto& d : inv.divisors) out.push_back(int_json(d));
  return out;
}

inline std::string csv_list(const AbelianInvariants& inv) {
  std::string s;
  for (const auto& d : inv.divisors) s += (s.empty() ? "" : " ") + d.get_str();
  return s;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ReportEntry& e) {
  using detail::ordered_json;
  ordered_json j;
  j["params"] = {{"p", detail::int_json(e.params.p)}, {"tuple", detail::tuple_json(e.params)}};
  j["canonical"] = detail::tuple_json(e.classification.canonical);
  j["family"] = family_name(e.classification.family);
  j["label"] = e.classification.label ? ordered_json(label_name(*e.classification.label))
                                      : ordered_json(nullptr);
  j["capable"] = e.capable;
  j["two_capable"] = e.two_capable;
  j["multiplier_closed"] = e.multiplier_closed ? detail::invariants_json(*e.multiplier_closed)
                                               : ordered_json(nullptr);
  j["multiplier_oracle"] = detail::invariants_json(e.multiplier_oracle);
  j["agreement"] = e.agreement;
  return j;
}

inline void write_jsonl(std::ostream& os, const Report& report) {
  for (const auto& e : report) os << to_json(e).dump() << '\n';
}

// Lists are space-separated inside one field; an absent value is empty.
inline void write_csv(std::ostream& os, const Report& report) {
  os << "p,tuple,canonical,family,label,capable,two_capable,multiplier_closed,multiplier_oracle,"
        "agreement\n";
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (const auto& e : report) {
    const auto& c = e.classification;
    os << e.params.p.get_str() << ",\"" << tuple_string(e.params) << "\",\""
       << tuple_string(c.canonical) << "\"," << family_name(c.family) << ','
       << (c.label ? label_name(*c.label) : "") << ',' << b(e.capable) << ',' << b(e.two_capable)
       << ',' << (e.multiplier_closed ? detail::csv_list(*e.multiplier_closed) : "") << ','
       << detail::csv_list(e.multiplier_oracle) << ',' << b(e.agreement) << '\n';
  }
}

}  // namespace nilmult
