#include "core/laurent.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "core/error.hpp"

namespace torlink {

LaurentPoly2 LaurentPoly2::constant(mpz_class c) {
  LaurentPoly2 p;
  p.add_term(0, 0, c);
  return p;
}

LaurentPoly2 LaurentPoly2::monomial(mpz_class c, int a, int b) {
  LaurentPoly2 p;
  p.add_term(a, b, c);
  return p;
}

void LaurentPoly2::add_term(int a, int b, const mpz_class& c) {
  if (c == 0) return;
  auto key = Exp2{a, b};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPoly2::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

LaurentPoly2 LaurentPoly2::scaled(const mpz_class& c) const {
  LaurentPoly2 r;
  if (c == 0) return r;
  for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int a, int b) const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_)
    r.terms_.emplace(Exp2{e.first + a, e.second + b}, c);
  return r;
}

LaurentPoly2 LaurentPoly2::sign_flipped(int sx, int sy) const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) {
    bool neg = (sx < 0 && (e.first & 1)) ^ (sy < 0 && (e.second & 1));
    r.terms_.emplace(e, neg ? mpz_class(-c) : c);
  }
  return r;
}

bool LaurentPoly2::conjugate_reciprocal() const {
  for (const auto& [e, c] : terms_)
    if (coeff(-e.first, -e.second) != c) return false;
  return true;
}

namespace {

std::complex<double> powi(std::complex<double> z, int e) {
  if (e < 0) {
    z = 1.0 / z;
    e = -e;
  }
  std::complex<double> r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::complex<double> LaurentPoly2::eval(std::complex<double> x,
                                        std::complex<double> y) const {
  // Group terms by x-exponent and run Horner in y within each group.
  std::complex<double> total{0.0, 0.0};
  auto it = terms_.begin();
  while (it != terms_.end()) {
    int a = it->first.first;
    // Terms with this x-exponent are contiguous and ascending in b.
    std::vector<std::pair<int, double>> grp;
    for (; it != terms_.end() && it->first.first == a; ++it)
      grp.emplace_back(it->first.second, it->second.get_d());
    std::complex<double> acc{0.0, 0.0};
    int bprev = 0;
    for (auto g = grp.rbegin(); g != grp.rend(); ++g) {
      if (g != grp.rbegin()) acc *= powi(y, bprev - g->first);
      acc += g->second;
      bprev = g->first;
    }
    acc *= powi(y, bprev);
    total += acc * powi(x, a);
  }
  return total;
}

std::complex<double> ComplexPoly1::eval(std::complex<double> w) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
  return acc;
}

SpecializedPoly specialize_w(const LaurentPoly2& p, std::complex<double> z0) {
  SpecializedPoly out;
  if (p.is_zero()) {
    out.zero = true;
    return out;
  }
  int bmin = 0, bmax = 0;
  bool first = true;
  double scale = 0.0;
  for (const auto& [e, c] : p.terms()) {
    if (first || e.second < bmin) bmin = e.second;
    if (first || e.second > bmax) bmax = e.second;
    first = false;
    scale += std::abs(c.get_d());
  }
  std::vector<std::complex<double>> cs(bmax - bmin + 1, {0.0, 0.0});
  for (const auto& [e, c] : p.terms())
    cs[e.second - bmin] += c.get_d() * powi(z0, e.first);
  // Trim leading coefficients that cancelled to numerical zero (degree drop
  // at special z0).
  const double thresh = 1e-13 * scale;
  while (!cs.empty() && std::abs(cs.back()) <= thresh) cs.pop_back();
  if (cs.empty()) {
    out.zero = true;
    return out;
  }
  out.poly.coeffs = std::move(cs);
  out.shift = -bmin;
  return out;
}

std::string LaurentPoly2::str(std::string_view xname,
                              std::string_view yname) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << mag.get_str() << "*" << xname << "^" << e.first << "*" << yname
       << "^" << e.second;
  }
  return os.str();
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long parse_int(std::string_view s, std::size_t& i, const char* what) {
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits)
    throw ParseError(std::string("expected ") + what + " in polynomial at offset " +
                     std::to_string(start));
  return std::stol(std::string(s.substr(start, i - start)));
}

void expect(std::string_view s, std::size_t& i, std::string_view tok) {
  if (s.substr(i, tok.size()) != tok)
    throw ParseError("expected '" + std::string(tok) + "' in polynomial at offset " +
                     std::to_string(i));
  i += tok.size();
}

}  // namespace

LaurentPoly2 LaurentPoly2::parse(std::string_view text, std::string_view xname,
                                 std::string_view yname) {
  LaurentPoly2 p;
  std::size_t i = 0;
  skip_ws(text, i);
  if (text.substr(i) == "0") return p;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
    skip_ws(text, i);
  }
  while (true) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) throw ParseError("expected coefficient at offset " + std::to_string(i));
    mpz_class c(std::string(text.substr(start, i - start)));
    if (neg) c = -c;
    expect(text, i, "*");
    expect(text, i, xname);
    expect(text, i, "^");
    long a = parse_int(text, i, "x-exponent");
    expect(text, i, "*");
    expect(text, i, yname);
    expect(text, i, "^");
    long b = parse_int(text, i, "y-exponent");
    p.add_term(static_cast<int>(a), static_cast<int>(b), c);
    skip_ws(text, i);
    if (i == text.size()) break;
    if (text[i] == '+')
      neg = false;
    else if (text[i] == '-')
      neg = true;
    else
      throw ParseError("unexpected character in polynomial at offset " +
                       std::to_string(i));
    ++i;
    skip_ws(text, i);
  }
  return p;
}

LaurentMatrix::LaurentMatrix(int dim) : dim_(dim), entries_(dim * dim) {
  if (dim < 1) throw ValidationError("matrix dimension must be >= 1");
}

LaurentPoly2& LaurentMatrix::at(int i, int j) { return entries_[i * dim_ + j]; }

const LaurentPoly2& LaurentMatrix::at(int i, int j) const {
  return entries_[i * dim_ + j];
}

LaurentMatrix LaurentMatrix::identity(int dim) {
  LaurentMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly2::constant(1);
  return m;
}

namespace {

// Laplace expansion over the subset of still-active columns, memoized on the
// column bitmask.  Row index is dim - popcount(mask).
LaurentPoly2 det_rec(const LaurentMatrix& m, std::uint32_t mask,
                     std::unordered_map<std::uint32_t, LaurentPoly2>& memo) {
  if (mask == 0) return LaurentPoly2::constant(1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int row = m.dim() - __builtin_popcount(mask);
  LaurentPoly2 acc;
  int sign = 1;
  for (int j = 0; j < m.dim(); ++j) {
    if (!(mask & (1u << j))) continue;
    const LaurentPoly2& e = m.at(row, j);
    if (!e.is_zero()) {
      LaurentPoly2 sub = det_rec(m, mask & ~(1u << j), memo);
      LaurentPoly2 contrib = e * sub;
      if (sign < 0) contrib = -contrib;
      acc += contrib;
    }
    sign = -sign;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

LaurentPoly2 LaurentMatrix::det() const {
  if (dim_ > 24)
    throw ValidationError("determinant dimension too large: " +
                          std::to_string(dim_));
  std::unordered_map<std::uint32_t, LaurentPoly2> memo;
  return det_rec(*this, (dim_ >= 32 ? ~0u : (1u << dim_) - 1u), memo);
}

}  // namespace torlink
