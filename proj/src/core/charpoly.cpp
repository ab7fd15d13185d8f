#include "core/charpoly.hpp"

#include <random>

#include "core/error.hpp"

namespace torlink {

LaurentPoly2 laplacian_poly(const TorusGraph& g) {
  g.validate();
  if (!g.is_connected_quotient())
    throw ValidationError("Laplacian polynomial requires a connected quotient");
  LaurentMatrix L(g.n_vertices);
  for (const auto& e : g.edges) {
    if (e.weight.get_den() != 1)
      throw ValidationError("Laplacian polynomial requires integer weights");
    mpz_class c = e.weight.get_num();
    int a = e.offset[0], b = e.offset[1];
    if (e.tail == e.head) {
      L.at(e.tail, e.tail) += LaurentPoly2::constant(2 * c);
      L.at(e.tail, e.tail) -= LaurentPoly2::monomial(c, a, b);
      L.at(e.tail, e.tail) -= LaurentPoly2::monomial(c, -a, -b);
    } else {
      L.at(e.tail, e.tail) += LaurentPoly2::constant(c);
      L.at(e.head, e.head) += LaurentPoly2::constant(c);
      L.at(e.tail, e.head) -= LaurentPoly2::monomial(c, a, b);
      L.at(e.head, e.tail) -= LaurentPoly2::monomial(c, -a, -b);
    }
  }
  return L.det();
}

std::vector<int> kasteleyn_signs(const OverlaidGraph& gb, unsigned seed) {
  const int nvars = static_cast<int>(gb.graph.edges.size());
  const int ncons = static_cast<int>(gb.quads.size());
  const int words = (nvars + 1 + 63) / 64;  // last bit column is the RHS
  std::vector<std::vector<std::uint64_t>> rows(
      ncons, std::vector<std::uint64_t>(words, 0));
  auto set_bit = [&](std::vector<std::uint64_t>& r, int c) {
    r[c >> 6] ^= 1ull << (c & 63);
  };
  for (int q = 0; q < ncons; ++q) {
    for (int e : gb.quads[q]) set_bit(rows[q], e);
    set_bit(rows[q], nvars);  // odd number of negatives
  }

  std::vector<int> pivot_of_row(ncons, -1);
  std::vector<int> row_of_col(nvars, -1);
  int rank = 0;
  for (int c = 0; c < nvars && rank < ncons; ++c) {
    int pr = -1;
    for (int r = rank; r < ncons; ++r)
      if (rows[r][c >> 6] >> (c & 63) & 1) {
        pr = r;
        break;
      }
    if (pr == -1) continue;
    std::swap(rows[rank], rows[pr]);
    for (int r = 0; r < ncons; ++r)
      if (r != rank && (rows[r][c >> 6] >> (c & 63) & 1))
        for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
    pivot_of_row[rank] = c;
    row_of_col[c] = rank;
    ++rank;
  }
  for (int r = rank; r < ncons; ++r) {
    bool lhs_zero = true;
    for (int w = 0; w < words; ++w) {
      std::uint64_t m = rows[r][w];
      if (w == (nvars >> 6)) m &= ~(1ull << (nvars & 63));
      if (m) lhs_zero = false;
    }
    if (lhs_zero && (rows[r][nvars >> 6] >> (nvars & 63) & 1))
      throw ValidationError("Kasteleyn parity system infeasible");
  }

  std::mt19937 rng(seed);
  std::vector<int> x(nvars, 0);
  for (int c = 0; c < nvars; ++c)
    if (row_of_col[c] == -1) x[c] = seed == 0 ? 0 : static_cast<int>(rng() & 1);
  for (int r = rank - 1; r >= 0; --r) {
    int pc = pivot_of_row[r];
    int val = rows[r][nvars >> 6] >> (nvars & 63) & 1;
    for (int c = pc + 1; c < nvars; ++c)
      if (rows[r][c >> 6] >> (c & 63) & 1) val ^= x[c];
    x[pc] = val;
  }

  std::vector<int> signs(nvars);
  for (int c = 0; c < nvars; ++c) signs[c] = x[c] ? -1 : 1;
  if (!check_kasteleyn(gb, signs))
    throw ValidationError("internal error: Kasteleyn solution check failed");
  return signs;
}

bool check_kasteleyn(const OverlaidGraph& gb, const std::vector<int>& signs) {
  if (signs.size() != gb.graph.edges.size()) return false;
  for (const auto& q : gb.quads) {
    int neg = 0;
    for (int e : q) neg += signs[e] < 0;
    if (neg % 2 == 0) return false;
  }
  return true;
}

LaurentPoly2 dimer_char_poly(const OverlaidGraph& gb,
                             const std::vector<int>& signs) {
  if (gb.n_black != gb.n_white)
    throw ValidationError("overlaid graph bipartition is unbalanced");
  if (signs.size() != gb.graph.edges.size())
    throw ValidationError("sign assignment size mismatch");
  LaurentMatrix K(gb.n_white);
  for (std::size_t i = 0; i < gb.graph.edges.size(); ++i) {
    const auto& e = gb.graph.edges[i];
    if (e.weight.get_den() != 1)
      throw ValidationError("dimer weights must be integers");
    mpz_class c = e.weight.get_num() * signs[i];
    int white = e.head - gb.n_black;
    K.at(white, e.tail) += LaurentPoly2::monomial(c, e.offset[0], e.offset[1]);
  }
  return canonical_gauge(K.det());
}

namespace {

// Three-way compare of canonical forms (term count, then term sequence).
int cmp_poly(const LaurentPoly2& a, const LaurentPoly2& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return cmp(ia->second, ib->second) < 0 ? -1 : 1;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

}  // namespace

LaurentPoly2 canonical_gauge(const LaurentPoly2& p) {
  if (p.is_zero()) return p;
  int amin = p.terms().begin()->first.first;
  int bmin = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first || e.second < bmin) bmin = e.second;
    first = false;
  }
  LaurentPoly2 base = p.shifted(-amin, -bmin);
  LaurentPoly2 best;
  bool have = false;
  for (int sx : {1, -1})
    for (int sy : {1, -1}) {
      LaurentPoly2 q = base.sign_flipped(sx, sy);
      if (q.terms().begin()->second < 0) q = -q;
      if (!have || cmp_poly(q, best) < 0) {
        best = q;
        have = true;
      }
    }
  return best;
}

}  // namespace torlink
