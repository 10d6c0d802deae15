#include "heartproof/poly_fp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "heartproof/gf.hpp"

namespace heartproof::gf {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// p-th root of a polynomial whose derivative vanishes: f(x) = h(x^p) = h(x)^p
// because the Frobenius fixes F_p.
PolyFp pth_root(const PolyFp& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeff(i));
  return PolyFp(p, std::move(c));
}

void squarefree_pieces(const PolyFp& f, std::vector<PolyFp>& out) {
  if (f.degree() <= 0) return;
  const PolyFp d = f.derivative();
  if (d.is_zero()) {
    squarefree_pieces(pth_root(f), out);
    return;
  }
  PolyFp c = gcd(f, d);
  PolyFp w = f / c;
  while (!w.is_one()) {
    PolyFp y = gcd(w, c);
    PolyFp fac = w / y;
    if (fac.degree() > 0) out.push_back(fac.monic());
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_pieces(pth_root(c), out);
}

bool poly_less(const PolyFp& a, const PolyFp& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                      b.coeffs().rend());
}

}  // namespace

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("polynomial modulus must be a prime");
  for (auto& x : c_) x %= p_;
  trim();
}

PolyFp PolyFp::x(std::uint64_t p) { return PolyFp(p, {0, 1}); }

PolyFp PolyFp::constant(std::uint64_t p, std::uint64_t c) { return PolyFp(p, {c}); }

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t PolyFp::eval(std::uint64_t x) const {
  std::uint64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (mulmod(r, x, p_) + *it) % p_;
  return r;
}

PolyFp PolyFp::monic() const {
  if (c_.empty()) return *this;
  std::uint64_t inv = inv_mod(c_.back(), p_);
  std::vector<std::uint64_t> c(c_);
  for (auto& x : c) x = mulmod(x, inv, p_);
  return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::derivative() const {
  std::vector<std::uint64_t> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(mulmod(c_[i], i % p_, p_));
  return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
  std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeff(i) + o.coeff(i)) % p_;
  return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
  std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
  return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
  if (c_.empty() || o.c_.empty()) return PolyFp(p_);
  std::vector<std::uint64_t> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = (c[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  }
  return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::operator%(const PolyFp& o) const { return divmod(*this, o).remainder; }
PolyFp PolyFp::operator/(const PolyFp& o) const { return divmod(*this, o).quotient; }

std::string PolyFp::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::uint64_t a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {PolyFp(p), a};
  std::vector<std::uint64_t> r(a.coeffs());
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const std::uint64_t inv = inv_mod(b.leading(), p);
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t i = r.size(); i-- > db;) {
    std::uint64_t coef = mulmod(r[i], inv, p);
    if (coef == 0) continue;
    q[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) {
      std::uint64_t sub = mulmod(coef, b.coeff(j), p);
      r[i - db + j] = (r[i - db + j] + p - sub) % p;
    }
  }
  return {PolyFp(p, std::move(q)), PolyFp(p, std::move(r))};
}

PolyFp gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyFp powmod(const PolyFp& base, const BigInt& exponent, const PolyFp& modulus) {
  PolyFp result = PolyFp::constant(base.modulus(), 1) % modulus;
  PolyFp b = base % modulus;
  BigInt e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result = (result * b) % modulus;
    e >>= 1;
    if (e > 0) b = (b * b) % modulus;
  }
  return result;
}

bool is_squarefree(const PolyFp& f) {
  if (f.degree() <= 0) return true;
  PolyFp d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

bool is_irreducible(const PolyFp& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  if (!is_squarefree(f)) return false;
  auto parts = distinct_degree_factorization(f.monic());
  return parts.size() == 1 && parts.front().first == f.degree();
}

std::vector<std::pair<int, PolyFp>> distinct_degree_factorization(const PolyFp& f_in) {
  const std::uint64_t p = f_in.modulus();
  std::vector<std::pair<int, PolyFp>> out;
  PolyFp f = f_in.monic();
  const PolyFp x = PolyFp::x(p);
  PolyFp h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, BigInt(p), f);
    PolyFp g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.degree(), f);
  return out;
}

std::vector<PolyFp> equal_degree_factorization(const PolyFp& g_in, int d, std::mt19937_64& rng) {
  const std::uint64_t p = g_in.modulus();
  PolyFp g = g_in.monic();
  if (g.degree() == d) return {g};
  if (g.degree() < d || g.degree() % d != 0) throw std::invalid_argument("bad equal-degree input");

  const BigInt q_d = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d));
  while (true) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(g.degree()));
    for (auto& x : c) x = rng() % p;
    PolyFp a(p, std::move(c));
    if (a.degree() <= 0) continue;
    PolyFp b(p);
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)).
      PolyFp t = a % g;
      PolyFp acc = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % g;
        acc = acc + t;
      }
      b = acc;
    } else {
      b = powmod(a, (q_d - 1) / 2, g) - PolyFp::constant(p, 1);
    }
    PolyFp h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      auto left = equal_degree_factorization(h, d, rng);
      auto right = equal_degree_factorization(g / h, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<PolyFp> factor_squarefree(const PolyFp& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PolyFp> out;
  for (auto& [d, g] : distinct_degree_factorization(f.monic())) {
    auto parts = equal_degree_factorization(g, d, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<PolyFp> distinct_irreducible_factors(const PolyFp& f, std::uint64_t seed) {
  std::vector<PolyFp> pieces;
  squarefree_pieces(f.monic(), pieces);
  std::vector<PolyFp> out;
  for (const auto& piece : pieces) {
    for (auto& fac : factor_squarefree(piece, seed)) {
      if (std::find(out.begin(), out.end(), fac) == out.end()) out.push_back(fac);
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

}  // namespace heartproof::gf
