#pragma once

// (p; alpha, beta, gamma; rho, sigma) names the class-two group
//
//   < a, b | [a,b]^(p^gamma) = [a,b,a] = [a,b,b] = 1,
//            a^(p^alpha) = [a,b]^(p^rho), b^(p^beta) = [a,b]^(p^sigma) >
//
// of order p^(alpha+beta+gamma).

#include "nilmult/bigint.hpp"
#include "nilmult/errors.hpp"

#include <tuple>
#include <ostream>
#include <string>

namespace nilmult {

struct GroupParams {
  Int p;
  unsigned long alpha = 1;
  unsigned long beta = 1;
  unsigned long gamma = 1;
  unsigned long rho = 0;
  unsigned long sigma = 0;

  Int pa() const { return ipow(p, alpha); }
  Int pb() const { return ipow(p, beta); }
  Int pg() const { return ipow(p, gamma); }
  Int pr() const { return ipow(p, rho); }
  Int ps() const { return ipow(p, sigma); }

  auto tuple() const { return std::tie(alpha, beta, gamma, rho, sigma); }

  friend bool operator==(const GroupParams& x, const GroupParams& y) {
    return x.p == y.p && x.tuple() == y.tuple();
  }
  friend bool operator<(const GroupParams& x, const GroupParams& y) {
    if (x.p != y.p) return x.p < y.p;
    return x.tuple() < y.tuple();
  }
};

inline std::string tuple_string(const GroupParams& g) {
  return std::to_string(g.alpha) + "," + std::to_string(g.beta) + "," + std::to_string(g.gamma) +
         "," + std::to_string(g.rho) + "," + std::to_string(g.sigma);
}

inline std::string to_string(const GroupParams& g) {
  return "p=" + g.p.get_str() + " (" + std::to_string(g.alpha) + "," + std::to_string(g.beta) +
         "," + std::to_string(g.gamma) + ";" + std::to_string(g.rho) + "," +
         std::to_string(g.sigma) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const GroupParams& g) { return os << to_string(g); }

// Throws InadmissibleParams naming the first violated condition.
inline void validate(const GroupParams& g) {
  if (!is_prime(g.p)) throw InadmissibleParams("p = " + g.p.get_str() + " is not prime");
  if (g.gamma < 1) throw InadmissibleParams("gamma >= 1 violated");
  if (g.alpha < g.beta) throw InadmissibleParams("alpha >= beta violated");
  if (g.beta < g.gamma) throw InadmissibleParams("beta >= gamma violated");
  if (g.rho > g.gamma) throw InadmissibleParams("rho <= gamma violated");
  if (g.sigma > g.gamma) throw InadmissibleParams("sigma <= gamma violated");
}

inline bool admissible(const GroupParams& g) {
  try {
    validate(g);
    return true;
  } catch (const InadmissibleParams&) {
    return false;
  }
}

}  // namespace nilmult
