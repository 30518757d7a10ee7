#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilmult {

using Int = mpz_class;

inline Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// n choose 2 and n choose 3 as polynomials in n, valid for negative n.
inline Int binom2(const Int& n) { return n * (n - 1) / 2; }
inline Int binom3(const Int& n) { return n * (n - 1) * (n - 2) / 6; }

// Floor-division remainder in [0, m) for m > 0, with the quotient written to q.
inline Int floor_divmod(const Int& n, const Int& m, Int& q) {
  Int r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int floor_mod(const Int& n, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_prime(const Int& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline Int parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Int r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return r;
}

}  // namespace nilmult
