#include "core/exact_count.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>

#include "core/charpoly.hpp"
#include "core/error.hpp"

namespace torlink {

namespace {

int msize(const IntMatrix& m) { return static_cast<int>(m.size()); }

void check_square(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw ValidationError("matrix is not square");
}

}  // namespace

mpz_class det_bareiss(IntMatrix m) {
  check_square(m);
  const int n = msize(m);
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv == -1) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 det_mod_p(const IntMatrix& m, u64 p) {
  const int n = msize(m);
  std::vector<std::vector<u64>> a(n, std::vector<u64>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      u64 r = mpz_fdiv_ui(m[i][j].get_mpz_t(), p);
      a[i][j] = r;
    }
  u64 det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k]) {
        piv = i;
        break;
      }
    if (piv == -1) return 0;
    if (piv != k) {
      std::swap(a[k], a[piv]);
      det = p - det;
      if (det == p) det = 0;
    }
    det = mulmod(det, a[k][k], p);
    u64 inv = powmod(a[k][k], p - 2, p);
    for (int i = k + 1; i < n; ++i) {
      if (!a[i][k]) continue;
      u64 f = mulmod(a[i][k], inv, p);
      for (int j = k; j < n; ++j) {
        u64 sub = mulmod(f, a[k][j], p);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + p - sub;
      }
    }
  }
  return det;
}

const std::vector<u64>& prime_pool(std::size_t count) {
  static std::vector<u64> primes;
  static mpz_class cursor = (mpz_class(1) << 62) + 1;
  while (primes.size() < count) {
    mpz_class p;
    mpz_nextprime(p.get_mpz_t(), cursor.get_mpz_t());
    cursor = p;
    primes.push_back(mpz_get_ui(p.get_mpz_t()));
  }
  return primes;
}

}  // namespace

mpz_class det_modular(const IntMatrix& m) {
  check_square(m);
  const int n = msize(m);
  if (n == 0) return 1;
  // Hadamard bound in bits.
  double bits = 1;
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (int j = 0; j < n; ++j) {
      double d = std::abs(m[i][j].get_d());
      s += d * d;
    }
    if (s == 0) return 0;
    bits += 0.5 * std::log2(s);
  }
  std::size_t nprimes = static_cast<std::size_t>(bits / 61.0) + 2;
  const auto& primes = prime_pool(nprimes);

  mpz_class residue = 0, modulus = 1;
  for (std::size_t i = 0; i < nprimes; ++i) {
    u64 p = primes[i];
    u64 r = det_mod_p(m, p);
    // Incremental CRT: residue += modulus * ((r - residue)/modulus mod p).
    u64 res_p = mpz_fdiv_ui(residue.get_mpz_t(), p);
    u64 mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    u64 diff = r >= res_p ? r - res_p : r + p - res_p;
    u64 t = mulmod(diff, powmod(mod_p, p - 2, p), p);
    residue += modulus * mpz_class(t);
    modulus *= mpz_class(p);
  }
  if (residue * 2 > modulus) residue -= modulus;
  return residue;
}

IntMatrix laplacian_matrix(const FiniteGraph& g) {
  g.validate();
  IntMatrix L(g.n_vertices, std::vector<mpz_class>(g.n_vertices, 0));
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    if (e.weight.get_den() != 1)
      throw ValidationError("tree counting requires integer weights");
    mpz_class c = e.weight.get_num();
    L[e.u][e.u] += c;
    L[e.v][e.v] += c;
    L[e.u][e.v] -= c;
    L[e.v][e.u] -= c;
  }
  return L;
}

namespace {

IntMatrix reduced_laplacian(const FiniteGraph& g) {
  IntMatrix L = laplacian_matrix(g);
  L.erase(L.begin());
  for (auto& row : L) row.erase(row.begin());
  return L;
}

}  // namespace

mpz_class tree_count_bareiss(const FiniteGraph& g) {
  if (!g.is_connected()) return 0;
  if (g.n_vertices == 1) return 1;
  return det_bareiss(reduced_laplacian(g));
}

mpz_class tree_count_modular(const FiniteGraph& g) {
  if (!g.is_connected()) return 0;
  if (g.n_vertices == 1) return 1;
  return det_modular(reduced_laplacian(g));
}

mpz_class tree_count(const FiniteGraph& g) {
  // The crossover favors Bareiss while entries stay small.
  return g.n_vertices <= 96 ? tree_count_bareiss(g) : tree_count_modular(g);
}

mpz_class brute_force_tree_count(const FiniteGraph& g) {
  g.validate();
  std::vector<std::pair<int, int>> es;
  std::vector<mpz_class> ws;
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    if (e.weight.get_den() != 1)
      throw ValidationError("tree counting requires integer weights");
    es.emplace_back(e.u, e.v);
    ws.push_back(e.weight.get_num());
  }
  const int ne = static_cast<int>(es.size());
  if (ne > 20) throw ValidationError("brute force limited to 20 edges");
  const int need = g.n_vertices - 1;
  if (need == 0) return 1;
  if (ne < need) return 0;
  mpz_class total = 0;
  std::vector<int> parent(g.n_vertices);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
    if (__builtin_popcount(mask) != need) continue;
    std::iota(parent.begin(), parent.end(), 0);
    int merges = 0;
    mpz_class w = 1;
    for (int i = 0; i < ne; ++i) {
      if (!(mask >> i & 1)) continue;
      int a = find(es[i].first), b = find(es[i].second);
      if (a == b) {
        merges = -1;
        break;
      }
      parent[a] = b;
      ++merges;
      w *= ws[i];
    }
    if (merges == need) total += w;
  }
  return total;
}

mpz_class ElementaryDivisors::nonzero_product() const {
  mpz_class p = 1;
  for (const auto& d : divisors) p *= d;
  return p;
}

ElementaryDivisors smith_normal_form(IntMatrix m) {
  const int rows = msize(m);
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (const auto& r : m)
    if (static_cast<int>(r.size()) != cols)
      throw ValidationError("ragged matrix");
  ElementaryDivisors out;
  int t = 0;
  const int lim = std::min(rows, cols);
  while (t < lim) {
    // Locate the minimal-absolute-value nonzero entry in the submatrix.
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0) {
          mpz_class a = abs(m[i][j]);
          if (pi == -1 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
    if (pi == -1) break;  // all zero from here on
    std::swap(m[t], m[pi]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      mpz_class q = m[i][t] / m[t][t];  // truncated division keeps |rem| small
      if (q != 0)
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      mpz_class q = m[t][j] / m[t][t];
      if (q != 0)
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank; repeat with the same t

    // Enforce divisibility of the remaining block by the pivot.
    bool fixed = false;
    for (int i = t + 1; i < rows && !fixed; ++i)
      for (int j = t + 1; j < cols && !fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }
  for (int i = 0; i < t; ++i) out.divisors.push_back(abs(m[i][i]));
  out.zeros = lim - t;
  return out;
}

mpz_class torsion_order(const FiniteGraph& g) {
  if (!g.is_connected())
    throw ValidationError("torsion order requires a connected graph");
  return smith_normal_form(laplacian_matrix(g)).nonzero_product();
}

namespace {

namespace mp = boost::multiprecision;
using BigFloat = mp::mpfr_float;

struct BigComplex {
  BigFloat re, im;
};

BigComplex cmul(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace

mpz_class fourier_tree_count(const TorusGraph& g, int n) {
  if (n <= 0) throw ValidationError("quotient order must be positive");
  g.validate();
  if (!g.is_connected_quotient())
    throw ValidationError("Fourier tree count requires a connected quotient");
  FiniteGraph h1 = torus_quotient(g, 1);
  mpz_class tau1 = tree_count(h1);
  LaurentPoly2 D = laplacian_poly(g);
  if (n == 1) return tau1;

  double log2_coefsum = 0;
  {
    mpz_class s = 0;
    for (const auto& [e, c] : D.terms()) s += abs(c);
    log2_coefsum = std::log2(s.get_d());
  }
  const long base_bits =
      static_cast<long>(2.0 * (double(n) * n * log2_coefsum + 64)) + 64;
  for (long bits = base_bits; bits <= 8 * base_bits; bits *= 2) {
    unsigned digits =
        static_cast<unsigned>(static_cast<double>(bits) * 0.30103) + 4;
    BigFloat::default_precision(digits);
    BigFloat pi_hp = mp::atan(BigFloat(1)) * 4;
    std::vector<BigComplex> zeta(n);
    for (int t = 0; t < n; ++t) {
      BigFloat ang = pi_hp * 2 * t / n;
      zeta[t] = {mp::cos(ang), mp::sin(ang)};
    }
    BigComplex prod{BigFloat(1), BigFloat(0)};
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j == 0 && k == 0) continue;
        BigComplex val{BigFloat(0), BigFloat(0)};
        for (const auto& [e, c] : D.terms()) {
          int tz = ((e.first % n) * j + (e.second % n) * k) % n;
          if (tz < 0) tz += n;
          BigFloat coef(c.get_str());
          val.re += coef * zeta[tz].re;
          val.im += coef * zeta[tz].im;
        }
        prod = cmul(prod, val);
      }
    BigFloat total = prod.re * BigFloat(tau1.get_str()) / (n * n);
    mpz_class rounded;
    BigFloat r = mp::round(total);
    mpfr_get_z(rounded.get_mpz_t(), r.backend().data(), MPFR_RNDN);
    BigFloat resid = mp::abs(total - r);
    BigFloat imag_ok = mp::abs(prod.im) * BigFloat(tau1.get_str()) / (n * n);
    if (resid < 0.25 && imag_ok < 0.25) return rounded;
  }
  throw Error("fourier_tree_count: precision budget exhausted");
}

double fourier_log_tree_count(const TorusGraph& g, int n) {
  mpz_class tau = fourier_tree_count(g, n);
  if (tau <= 0) throw Error("nonpositive tree count");
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, tau.get_mpz_t());
  return std::log(d) + static_cast<double>(exp2) * std::numbers::ln2;
}

}  // namespace torlink
