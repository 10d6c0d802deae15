#include "heartproof/polyz.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <sstream>

#include "heartproof/error.hpp"
#include "heartproof/gf.hpp"

namespace heartproof {

namespace {

using Rational = boost::multiprecision::cpp_rational;

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

std::vector<Rational> rational_remainder(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (!a.empty() && a.size() >= b.size()) {
    Rational coef = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= coef * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

PolyZ::PolyZ(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolyZ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& PolyZ::coeff(std::size_t i) const {
  static const BigInt zero = 0;
  return i < c_.size() ? c_[i] : zero;
}

const BigInt& PolyZ::leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }

PolyZ PolyZ::parse(std::string_view text) {
  std::string raw(text);
  for (std::size_t pos; (pos = raw.find("\xe2\x88\x92")) != std::string::npos;) raw.replace(pos, 3, "-");
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");

  if (s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::ParseError, "unterminated coefficient list");
    std::vector<BigInt> c;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw Error(ErrorCode::ParseError, "empty coefficient");
      try {
        c.emplace_back(item);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad coefficient '" + item + "'");
      }
    }
    PolyZ p(c);
    if (p.is_zero()) throw Error(ErrorCode::ParseError, "zero polynomial");
    return p;
  }

  std::vector<BigInt> c;
  std::size_t i = 0;
  auto digits = [&]() {
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(b, i - b);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error(ErrorCode::ParseError, "expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    BigInt coef = 1;
    bool have_coef = false;
    std::string num = digits();
    if (!num.empty()) {
      coef = BigInt(num);
      have_coef = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::size_t power = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e = digits();
        if (e.empty()) throw Error(ErrorCode::ParseError, "missing exponent");
        power = std::stoul(e);
        if (power > 10000) throw Error(ErrorCode::ParseError, "exponent too large");
      }
    } else if (!have_coef) {
      throw Error(ErrorCode::ParseError, "bad term at position " + std::to_string(i));
    }
    if (c.size() <= power) c.resize(power + 1, 0);
    c[power] += sign * coef;
  }
  PolyZ p(c);
  if (p.is_zero()) throw Error(ErrorCode::ParseError, "zero polynomial");
  return p;
}

PolyZ PolyZ::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * i);
  return PolyZ(d);
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return PolyZ(r);
}

PolyZ PolyZ::operator-(const PolyZ& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return PolyZ(r);
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
  if (is_zero() || o.is_zero()) return PolyZ();
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return PolyZ(r);
}

BigInt PolyZ::eval(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

gf::PolyFp PolyZ::mod(std::uint64_t p) const {
  std::vector<std::uint64_t> c;
  for (const auto& v : c_) c.push_back(static_cast<std::uint64_t>(mod_floor(v, p)));
  return gf::PolyFp(p, c);
}

std::string PolyZ::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    BigInt m = abs(a);
    if (i == 0 || m != 1) os << m;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

BigInt resultant(const PolyZ& f, const PolyZ& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  const std::size_t s = static_cast<std::size_t>(m + n);
  if (s == 0) return 1;
  std::vector<std::vector<BigInt>> a(s, std::vector<BigInt>(s, 0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = f.coeff(static_cast<std::size_t>(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = g.coeff(static_cast<std::size_t>(n - k));

  // Bareiss elimination.
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < s; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < s && a[piv][k] == 0) ++piv;
      if (piv == s) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < s; ++i) {
      for (std::size_t j = k + 1; j < s; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[s - 1][s - 1];
}

BigInt discriminant(const PolyZ& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::NotApplicable, "discriminant of a constant");
  BigInt res = resultant(f, f.derivative());
  BigInt d = res / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2) d = -d;
  return d;
}

BigInt discriminant_crt(const PolyZ& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::NotApplicable, "discriminant of a constant");
  // Hadamard bound on |res(f, f')| from the Sylvester row norms.
  BigInt norm_f = 0, norm_d = 0;
  const PolyZ d = f.derivative();
  for (const auto& c : f.coeffs()) norm_f += c * c;
  for (const auto& c : d.coeffs()) norm_d += c * c;
  BigInt bound_sq = 1;
  for (int i = 0; i < n - 1; ++i) bound_sq *= norm_f;
  for (int i = 0; i < n; ++i) bound_sq *= norm_d;
  const BigInt bound = boost::multiprecision::sqrt(bound_sq) + 1;

  BigInt modulus = 1, value = 0;
  for (std::uint64_t p = 1000003; modulus <= 2 * bound + 1; p += 2) {
    if (!gf::is_prime(p) || mod_floor(f.leading(), p) == 0) continue;
    // Resultant mod p by the Euclidean algorithm over F_p.
    gf::PolyFp a = f.mod(p), b = d.mod(p);
    std::uint64_t r = 1;
    if (b.degree() < 0) {
      r = 0;
    } else {
      while (true) {
        if (b.degree() < 0) {
          r = 0;
          break;
        }
        if (b.degree() == 0) {
          r = gf::mulmod(r, gf::powmod(b.leading(), static_cast<std::uint64_t>(a.degree()), p), p);
          break;
        }
        const auto da = static_cast<std::uint64_t>(a.degree()), db = static_cast<std::uint64_t>(b.degree());
        gf::PolyFp rem = a % b;
        if ((da * db) % 2) r = (p - r) % p;
        if (rem.degree() < 0) {
          r = 0;
          break;
        }
        r = gf::mulmod(r, gf::powmod(b.leading(), da - static_cast<std::uint64_t>(rem.degree()), p), p);
        a = b;
        b = rem;
      }
    }
    // Degree of f' mod p may drop only if p | n * lc, excluded above unless p | n.
    if (d.mod(p).degree() != n - 1) continue;
    // CRT combine (value mod modulus) with r mod p.
    BigInt pm = p;
    BigInt inv = 0;
    {
      const auto mm = static_cast<std::uint64_t>(mod_floor(modulus, pm));
      inv = gf::powmod(mm, p - 2, p);
    }
    BigInt delta = mod_floor(BigInt(r) - value, pm);
    value += modulus * mod_floor(delta * inv, pm);
    modulus *= pm;
  }
  BigInt res = value > modulus / 2 ? value - modulus : value;
  BigInt disc = res / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2) disc = -disc;
  return disc;
}

bool is_squarefree(const PolyZ& f) {
  if (f.degree() <= 0) return true;
  std::vector<Rational> a, b;
  for (const auto& c : f.coeffs()) a.emplace_back(c);
  const PolyZ d = f.derivative();
  for (const auto& c : d.coeffs()) b.emplace_back(c);
  while (!b.empty()) {
    auto r = rational_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

bool is_perfect_square(const BigInt& v) {
  if (v < 0) return false;
  BigInt r = boost::multiprecision::sqrt(v);
  return r * r == v;
}

}  // namespace heartproof
