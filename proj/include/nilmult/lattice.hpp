#pragma once

// Sublattices of Z^n given by spanning rows, and the finite abelian groups
// Z^n / L they cut out. Everything is exact over GMP integers.

#include "nilmult/bigint.hpp"
#include "nilmult/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace nilmult {

using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

struct IntLattice {
  std::size_t n = 0;
  IntMatrix rows;

  explicit IntLattice(std::size_t ambient = 0) : n(ambient) {}
  IntLattice(std::size_t ambient, IntMatrix r) : n(ambient), rows(std::move(r)) {
    for (const auto& row : rows)
      if (row.size() != n) throw std::invalid_argument("lattice row has wrong length");
  }

  void add_row(IntVector row) {
    if (row.size() != n) throw std::invalid_argument("lattice row has wrong length");
    rows.push_back(std::move(row));
  }
};

// Finite abelian group as its multiset of prime-power elementary divisors,
// sorted ascending. The empty list is the trivial group.
struct AbelianInvariants {
  std::vector<Int> divisors;

  Int order() const {
    Int r = 1;
    for (const auto& d : divisors) r *= d;
    return r;
  }

  bool trivial() const { return divisors.empty(); }

  // Builds from any list of cyclic orders (1s dropped, composites split).
  static AbelianInvariants from_cyclic(const std::vector<Int>& orders);

  // Invariant-factor form d1 | d2 | ... | dk.
  std::vector<Int> to_chain() const;

  friend bool operator==(const AbelianInvariants& x, const AbelianInvariants& y) {
    return x.divisors == y.divisors;
  }
};

inline std::string to_string(const AbelianInvariants& inv) {
  std::string out = "[";
  for (std::size_t i = 0; i < inv.divisors.size(); ++i) {
    if (i) out += ',';
    out += inv.divisors[i].get_str();
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const AbelianInvariants& inv) {
  return os << to_string(inv);
}

namespace detail {

// n > 1 as (prime, exponent) pairs by trial division. Inputs here are
// orders of small p-groups, so this never meets a hard factorization.
inline std::vector<std::pair<Int, unsigned>> factor(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  auto strip = [&](const Int& q) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
      n /= q;
      ++e;
    }
    if (e) out.emplace_back(q, e);
  };
  strip(2);
  for (Int q = 3; q * q <= n; q += 2) strip(q);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace detail

inline AbelianInvariants AbelianInvariants::from_cyclic(const std::vector<Int>& orders) {
  AbelianInvariants r;
  for (Int d : orders) {
    if (d < 0) d = -d;
    if (d == 0) throw InfiniteQuotient("cyclic factor of infinite order");
    if (d == 1) continue;
    for (const auto& [q, e] : detail::factor(d)) r.divisors.push_back(ipow(q, e));
  }
  std::sort(r.divisors.begin(), r.divisors.end());
  return r;
}

inline std::vector<Int> AbelianInvariants::to_chain() const {
  std::map<Int, std::vector<Int>> by_prime;
  for (const auto& d : divisors) by_prime[detail::factor(d).front().first].push_back(d);
  std::size_t len = 0;
  for (auto& [q, powers] : by_prime) {
    std::sort(powers.rbegin(), powers.rend());
    len = std::max(len, powers.size());
  }
  std::vector<Int> chain(len, Int(1));
  for (const auto& [q, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i) chain[len - 1 - i] *= powers[i];
  return chain;
}

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... (nonnegative).
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  std::vector<Int> diagonal;  // nonzero diagonal entries, in order
};

// rows x cols input; transforms are only tracked when requested.
inline SmithForm smith_form(IntMatrix a, std::size_t cols, bool with_transforms = false) {
  const std::size_t m = a.size();
  const std::size_t n = cols;
  SmithForm out;
  if (with_transforms) {
    out.u.assign(m, IntVector(m, Int(0)));
    for (std::size_t i = 0; i < m; ++i) out.u[i][i] = 1;
    out.v.assign(n, IntVector(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) out.v[i][i] = 1;
  }

  auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {  // row dst -= q * row src
    for (std::size_t j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
    if (with_transforms)
      for (std::size_t j = 0; j < m; ++j) out.u[dst][j] -= q * out.u[src][j];
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {  // col dst -= q * col src
    for (std::size_t i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
    if (with_transforms)
      for (std::size_t i = 0; i < n; ++i) out.v[i][dst] -= q * out.v[i][src];
  };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(a[x], a[y]);
    if (with_transforms) std::swap(out.u[x], out.u[y]);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    if (with_transforms)
      for (auto& row : out.v) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(a[i][i]);
        return out;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_axpy(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_axpy(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(t, bad, Int(-1));
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      if (with_transforms)
        for (auto& x : out.u[t]) x = -x;
    }
  }
  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (a[i][i] != 0) out.diagonal.push_back(a[i][i]);
  return out;
}

inline std::vector<Int> smith_invariants(const IntLattice& lattice) {
  return smith_form(lattice.rows, lattice.n).diagonal;
}

inline AbelianInvariants quotient_invariants(const IntLattice& lattice) {
  auto diag = smith_invariants(lattice);
  if (diag.size() < lattice.n)
    throw InfiniteQuotient("lattice has rank " + std::to_string(diag.size()) + " < " +
                           std::to_string(lattice.n));
  return AbelianInvariants::from_cyclic(diag);
}

// Fraction-free (Bareiss) determinant of a square matrix.
inline Int determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace nilmult
