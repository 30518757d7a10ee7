// nilmult: classify two-generator p-groups of class two and compute their
// 2-nilpotent multipliers.
//
// Exit status: 0 all checks passed, 1 mathematical disagreement, 2 usage or
// input error.

#include "nilmult/nilmult.hpp"
#include "nilmult/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace nilmult;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

unsigned long parse_exponent(const std::string& s) {
  Int n;
  try {
    n = parse_int(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (n < 0) throw UsageError("exponent " + s + " is negative");
  if (!n.fits_ulong_p()) throw UsageError("exponent " + s + " is too large");
  return n.get_ui();
}

Int parse_prime(const std::string& s) {
  Int p;
  try {
    p = parse_int(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!is_prime(p)) throw UsageError("p = " + p.get_str() + " is not prime");
  return p;
}

GroupParams parse_params(const std::string& p, const std::string& tuple) {
  const auto parts = split(tuple, ',');
  if (parts.size() != 5) throw UsageError("tuple must be alpha,beta,gamma,rho,sigma");
  GroupParams g{parse_prime(p), parse_exponent(parts[0]), parse_exponent(parts[1]),
                parse_exponent(parts[2]), parse_exponent(parts[3]), parse_exponent(parts[4])};
  validate(g);
  return g;
}

json params_json(const GroupParams& g) {
  json out;
  out["params"] = {{"p", detail::int_json(g.p)}, {"tuple", detail::tuple_json(g)}};
  return out;
}

json invariants(const AbelianInvariants& inv) { return detail::invariants_json(inv); }

std::string element_string(const GroupElement& d) { return to_string(element_word(d)); }

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// classify

int cmd_classify(const std::string& p, const std::string& tuple) {
  const GroupParams g = parse_params(p, tuple);
  const Classification c = canonicalize(g);
  json matches = json::array();
  for (Label l : matching_labels(c.canonical)) matches.push_back(label_name(l));
  json out = params_json(g);
  out["canonical"] = detail::tuple_json(c.canonical);
  out["family"] = family_name(c.family);
  out["label"] = c.label ? json(label_name(*c.label)) : json(nullptr);
  out["matches"] = matches;
  out["capable"] = is_capable(g);
  emit(out);
  return kOk;
}

// multiplier

int cmd_multiplier(const std::string& p, const std::string& tuple, const std::string& method) {
  const GroupParams g = parse_params(p, tuple);
  const Classification c = canonicalize(g);
  json out = params_json(g);
  out["label"] = c.label ? json(label_name(*c.label)) : json(nullptr);

  std::optional<AbelianInvariants> closed;
  if (method != "oracle") {
    closed = closed_form_multiplier(g);
    out["closed"] = closed ? invariants(*closed) : json("n/a");
  }
  std::optional<AbelianInvariants> oracle;
  if (method != "closed") {
    oracle = multiplier_of(g);
    out["oracle"] = invariants(*oracle);
    if (!closed) out["oracle_source"] = "computed";
  }
  int rc = kOk;
  if (method == "both") {
    if (closed) {
      out["agree"] = *closed == *oracle;
      if (!(*closed == *oracle)) rc = kDisagree;
    } else {
      out["agree"] = "n/a";
    }
  }
  emit(out);
  return rc;
}

int cmd_relators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  Presentation pres;
  pres.relators = parse_relators(in);
  json rel = json::array();
  for (const auto& w : pres.relators) rel.push_back(to_string(w));
  json out = {{"relators", rel}, {"oracle", invariants(two_nilpotent_multiplier(pres))}};
  emit(out);
  return kOk;
}

// sweep

int cmd_sweep(const std::string& primes, unsigned long max_exp, const std::string& out_path,
              const std::string& csv_path, unsigned jobs) {
  if (max_exp < 1) throw UsageError("--max-exp must be at least 1");
  std::vector<Int> ps;
  for (const auto& s : split(primes, ',')) ps.push_back(parse_prime(s));
  if (ps.empty()) throw UsageError("--primes is empty");

  const Report report = run_sweep(sweep_params(ps, max_exp), jobs);
  if (out_path.empty() || out_path == "-") {
    write_jsonl(std::cout, report);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    write_jsonl(out, report);
    if (!out) throw UsageError("error writing " + out_path);
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw UsageError("cannot write " + csv_path);
    write_csv(out, report);
    if (!out) throw UsageError("error writing " + csv_path);
  }
  std::size_t bad = 0;
  for (const auto& e : report)
    if (!e.agreement) {
      ++bad;
      std::cerr << "disagreement at " << to_string(e.params) << ": closed "
                << to_string(*e.multiplier_closed) << ", oracle " << to_string(e.multiplier_oracle)
                << '\n';
    }
  std::cerr << report.size() << " tuples, " << bad << " disagreements\n";
  return bad ? kDisagree : kOk;
}

// epicenter

int cmd_epicenter(const std::string& p, const std::string& tuple, const Int& max_order) {
  const GroupParams g = parse_params(p, tuple);
  const Classification c = canonicalize(g);
  const GroupParams& t = c.canonical;
  json out = params_json(g);
  out["canonical"] = detail::tuple_json(t);
  out["label"] = c.label ? json(label_name(*c.label)) : json(nullptr);

  if (is_capable(t)) {
    out["epicenter"] = "trivial";
    if (group_order(t) <= max_order) {
      json found = json::array();
      for (const auto& d : central_elements(t))
        if (epicenter_membership(t, d)) found.push_back(element_string(d));
      out["confirmed"] = found.empty();
      if (!found.empty()) out["members"] = found;
      emit(out);
      return found.empty() ? kOk : kDisagree;
    }
    out["confirmed"] = "skipped";
    emit(out);
    return kOk;
  }

  std::optional<GroupElement> w;
  try {
    w = epicenter_witness(t);
  } catch (const Error& e) {
    json found = json::array();
    for (const auto& d : epicenter_elements(t)) found.push_back(element_string(d));
    out["witness"] = nullptr;
    out["error"] = e.what();
    out["members"] = found;
    emit(out);
    return kDisagree;
  }
  const bool member = epicenter_membership(t, *w);
  out["witness"] = element_string(*w);
  out["membership"] = member;
  emit(out);
  return member ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify two-generator p-groups of class two and compute 2-nilpotent multipliers"};
  app.require_subcommand(1);

  std::string p, tuple, method = "both", relators, primes, out_path, csv_path;
  unsigned long max_exp = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string max_order = "729";

  auto* classify = app.add_subcommand("classify", "canonical tuple, family and label");
  classify->add_option("-p,--primes", p, "prime")->required();
  classify->add_option("-t,--tuple", tuple, "alpha,beta,gamma,rho,sigma")->required();

  auto* multiplier = app.add_subcommand("multiplier", "2-nilpotent multiplier");
  auto* mp = multiplier->add_option("-p,--primes", p, "prime");
  auto* mt = multiplier->add_option("-t,--tuple", tuple, "alpha,beta,gamma,rho,sigma");
  multiplier->add_option("--method", method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  auto* mr = multiplier->add_option("--relators", relators, "relator file, one word per line");
  mr->excludes(mt);
  mp->needs(mt);
  mt->needs(mp);

  auto* sweep = app.add_subcommand("sweep", "closed forms against the oracle over a range");
  sweep->add_option("-p,--primes", primes, "comma-separated primes")->required();
  sweep->add_option("--max-exp", max_exp, "bound on alpha, beta, gamma")->required();
  sweep->add_option("--out", out_path, "JSON-lines report (default stdout)");
  sweep->add_option("--csv", csv_path, "CSV copy of the report");
  sweep->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* epicenter = app.add_subcommand("epicenter", "2-epicenter witness and membership check");
  epicenter->add_option("-p,--primes", p, "prime")->required();
  epicenter->add_option("-t,--tuple", tuple, "alpha,beta,gamma,rho,sigma")->required();
  epicenter->add_option("--max-order", max_order,
                        "largest capable group whose center is searched exhaustively");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(p, tuple);
    if (*multiplier) {
      if (!relators.empty()) return cmd_relators(relators);
      if (tuple.empty()) throw UsageError("multiplier needs -p and -t, or --relators");
      return cmd_multiplier(p, tuple, method);
    }
    if (*sweep) return cmd_sweep(primes, max_exp, out_path, csv_path, jobs);
    if (*epicenter) return cmd_epicenter(p, tuple, parse_int(max_order));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
