#include "core/mahler.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "core/error.hpp"

namespace torlink {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(m) for even m >= 2 by Euler-Maclaurin.
double zeta_even(int m) {
  static std::vector<double> cache;  // index n -> zeta(2n)
  int n = m / 2;
  if (n < static_cast<int>(cache.size()) && cache[n] != 0) return cache[n];
  const int K = 40;
  double s = 0;
  for (int k = K - 1; k >= 1; --k) s += std::pow(static_cast<double>(k), -m);
  double Km = std::pow(static_cast<double>(K), -m);
  s += Km * K / (m - 1);  // K^{1-m}/(m-1)
  s += Km / 2;
  s += m * Km / K / 12;
  s -= static_cast<double>(m) * (m + 1) * (m + 2) * Km / (K * K * K) / 720.0;
  if (n >= static_cast<int>(cache.size())) cache.resize(n + 1, 0.0);
  cache[n] = s;
  return s;
}

}  // namespace

double lobachevsky(double theta) {
  // Reduce by pi-periodicity to [-pi/2, pi/2], then use oddness.
  double t = std::remainder(theta, kPi);
  double sign = 1;
  if (t < 0) {
    t = -t;
    sign = -1;
  }
  if (t == 0) return 0;
  // Lambda(t) = t - t log(2t) + sum_{n>=1} zeta(2n) t^{2n+1} / (n(2n+1) pi^{2n})
  double acc = t - t * std::log(2 * t);
  const double u = (t / kPi) * (t / kPi);
  double upow = u;
  for (int n = 1; n <= 64; ++n) {
    double term = zeta_even(2 * n) * upow * t / (n * (2 * n + 1));
    acc += term;
    if (term < 1e-17 * std::max(1.0, std::abs(acc))) break;
    upow *= u;
  }
  return sign * acc;
}

VolumeConstants volume_constants() {
  return {3 * lobachevsky(kPi / 3), 8 * lobachevsky(kPi / 4)};
}

namespace {

using cd = std::complex<double>;

void horner_both(const std::vector<cd>& c, cd z, cd& p, cd& dp) {
  p = cd{0, 0};
  dp = cd{0, 0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

bool aberth(const std::vector<cd>& coef, std::vector<cd>& roots) {
  const int d = static_cast<int>(coef.size()) - 1;
  double lead = std::abs(coef.back());
  double maxc = 0;
  for (int i = 0; i < d; ++i) maxc = std::max(maxc, std::abs(coef[i]));
  double radius = 1.0 + maxc / lead;  // Cauchy bound
  roots.resize(d);
  for (int k = 0; k < d; ++k) {
    double th = 2 * kPi * k / d + 0.4;
    roots[k] = 0.5 * radius * cd{std::cos(th), std::sin(th)};
  }
  for (int iter = 0; iter < 200; ++iter) {
    double worst = 0;
    for (int k = 0; k < d; ++k) {
      cd p, dp;
      horner_both(coef, roots[k], p, dp);
      if (p == cd{0, 0}) continue;
      cd w = dp == cd{0, 0} ? cd{0, 0} : p / dp;
      cd s{0, 0};
      for (int j = 0; j < d; ++j)
        if (j != k) {
          cd diff = roots[k] - roots[j];
          if (std::abs(diff) < 1e-300) diff = cd{1e-12, 1e-12};
          s += 1.0 / diff;
        }
      cd denom = 1.0 - w * s;
      cd step = std::abs(denom) < 1e-300 ? w : w / denom;
      roots[k] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(roots[k])));
    }
    if (worst < 1e-15) break;
  }
  // Newton polish and residual check.
  double scale = 0;
  for (const auto& c : coef) scale += std::abs(c);
  for (int k = 0; k < d; ++k) {
    for (int it = 0; it < 4; ++it) {
      cd p, dp;
      horner_both(coef, roots[k], p, dp);
      if (std::abs(dp) < 1e-300) break;
      roots[k] -= p / dp;
    }
    cd p, dp;
    horner_both(coef, roots[k], p, dp);
    double grow = std::pow(std::max(1.0, std::abs(roots[k])), d);
    if (!(std::abs(p) <= 1e-8 * scale * grow)) return false;
  }
  return true;
}

std::vector<cd> companion_roots(const std::vector<cd>& coef) {
  const int d = static_cast<int>(coef.size()) - 1;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -coef[i] / coef[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<cd> out(d);
  for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

}  // namespace

std::vector<std::complex<double>> poly_roots(const ComplexPoly1& q) {
  if (q.degree() < 1) throw Error("poly_roots requires degree >= 1");
  // Factor out exact roots at the origin.
  std::vector<cd> c = q.coeffs;
  int zeros_at_origin = 0;
  while (c.size() > 1 && c.front() == cd{0, 0}) {
    c.erase(c.begin());
    ++zeros_at_origin;
  }
  std::vector<cd> roots;
  if (c.size() > 1 && !aberth(c, roots)) roots = companion_roots(c);
  roots.insert(roots.end(), zeros_at_origin, cd{0, 0});
  return roots;
}

double mahler_1var(const ComplexPoly1& q) {
  if (q.is_zero()) throw Error("Mahler measure of the zero polynomial");
  if (q.degree() == 0) return std::log(std::abs(q.coeffs[0]));
  double m = std::log(std::abs(q.coeffs.back()));
  for (const auto& r : poly_roots(q)) {
    double a = std::abs(r);
    if (a > 1.0) m += std::log(a);
  }
  return m;
}

namespace {

// Outer Jensen integrand: theta -> m_w(p(e^{i theta}, .)).  Nudges off the
// measure-zero set where the specialization vanishes identically.
double outer_integrand(const LaurentPoly2& p, double theta, long& samples) {
  for (double nudge : {0.0, 1e-9, 1e-7}) {
    auto sp = specialize_w(p, std::polar(1.0, theta + nudge));
    if (!sp.zero) {
      double v = mahler_1var(sp.poly);
      if (std::isfinite(v)) {
        ++samples;
        return v;
      }
    }
  }
  throw Error("outer Mahler integrand undefined on an open set (zero polynomial?)");
}

struct AdaptState {
  const LaurentPoly2* p;
  long samples = 0;
  double err_acc = 0;
  bool budget_ok = true;
};

double simpson(double fa, double fm, double fb, double h) {
  return (fa + 4 * fm + fb) * h / 6;
}

double adapt(AdaptState& st, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  double m = (a + b) / 2;
  double lm = (a + m) / 2, rm = (m + b) / 2;
  double flm = outer_integrand(*st.p, lm, st.samples);
  double frm = outer_integrand(*st.p, rm, st.samples);
  double left = simpson(fa, flm, fm, m - a);
  double right = simpson(fm, frm, fb, b - m);
  double delta = left + right - whole;
  if (depth <= 0) {
    st.budget_ok = false;
    st.err_acc += std::abs(delta) / 15;
    return left + right + delta / 15;
  }
  if (std::abs(delta) <= 15 * tol) {
    st.err_acc += std::abs(delta) / 15;
    return left + right + delta / 15;
  }
  return adapt(st, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adapt(st, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

MahlerResult mahler_2var(const LaurentPoly2& p, double tol) {
  if (p.is_zero()) throw Error("Mahler measure of the zero polynomial");
  if (tol <= 0) throw Error("tolerance must be positive");
  if (p.term_count() == 1)
    return {std::log(std::abs(p.terms().begin()->second.get_d())), 1e-16,
            "jensen-adaptive", 1, true};

  // Real coefficients give f(2pi - theta) = f(theta); integrate over [0, pi].
  AdaptState st;
  st.p = &p;
  const double a = 0, b = kPi;
  double integral = 0;
  // Seed with 8 panels so narrow features are not missed by the first probe.
  const int panels = 8;
  std::vector<double> fs(2 * panels + 1);
  for (int i = 0; i <= 2 * panels; ++i)
    fs[i] = outer_integrand(p, a + (b - a) * i / (2 * panels), st.samples);
  for (int k = 0; k < panels; ++k) {
    double pa = a + (b - a) * k / panels;
    double pb = a + (b - a) * (k + 1) / panels;
    double whole = simpson(fs[2 * k], fs[2 * k + 1], fs[2 * k + 2], pb - pa);
    integral += adapt(st, pa, pb, fs[2 * k], fs[2 * k + 1], fs[2 * k + 2],
                      whole, tol * kPi / panels / 2, 26);
  }
  MahlerResult r;
  r.value = integral / kPi;
  r.error_estimate = std::max(st.err_acc / kPi, 1e-16);
  r.method = "jensen-adaptive";
  r.samples = st.samples;
  r.tolerance_met = st.budget_ok;
  return r;
}

namespace {

double grid_mean(const LaurentPoly2& p, int N) {
  double sum = 0;
  for (int j = 0; j < N; ++j) {
    cd z = std::polar(1.0, kPi * (2.0 * j + 1.0) / N);
    auto sp = specialize_w(p, z);
    for (int k = 0; k < N; ++k) {
      cd w = std::polar(1.0, kPi * (2.0 * k + 1.0) / N);
      double mag = sp.zero ? 0.0 : std::abs(sp.poly.eval(w));
      sum += std::log(std::max(mag, 1e-300));
    }
  }
  return sum / (static_cast<double>(N) * N);
}

}  // namespace

MahlerResult mahler_2var_grid(const LaurentPoly2& p, int N) {
  if (p.is_zero()) throw Error("Mahler measure of the zero polynomial");
  if (N < 4) throw Error("grid size must be >= 4");
  double coarse = grid_mean(p, N / 2);
  double fine = grid_mean(p, N);
  MahlerResult r;
  r.value = fine;
  r.error_estimate = std::max(std::abs(fine - coarse), 1e-16);
  r.method = "grid";
  r.samples = static_cast<long>(N) * N + static_cast<long>(N / 2) * (N / 2);
  return r;
}

}  // namespace torlink
