#include "heartproof/ext_field.hpp"

#include "heartproof/error.hpp"
#include "heartproof/gf.hpp"
#include "heartproof/poly_fp.hpp"

namespace heartproof::gf {

namespace {

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t ell, std::uint32_t r) {
  std::vector<std::uint32_t> d(r, 0);
  for (std::uint32_t i = 0; i < r; ++i) {
    d[i] = a % ell;
    a /= ell;
  }
  return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t ell) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * ell + d[i];
  return a;
}

}  // namespace

ExtField::ExtField(std::uint32_t ell, std::uint32_t r) : ell_(ell), r_(r), q_(1) {
  if (!is_prime(ell)) throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(ell) + " is not prime");
  if (r == 0) throw Error(ErrorCode::InvalidField, "extension degree must be at least 1");
  for (std::uint32_t i = 0; i < r; ++i) {
    q_ *= ell;
    if (q_ > (1u << 16)) throw Error(ErrorCode::InvalidField, "field too large");
  }

  if (r == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t code = 0; code < q_; ++code) {
      std::vector<std::uint64_t> c;
      for (auto d : digits(code, ell, r)) c.push_back(d);
      c.push_back(1);
      if (is_irreducible(PolyFp(ell, c))) {
        modulus_ = digits(code, ell, r);
        modulus_.push_back(1);
        break;
      }
    }
  }

  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::vector<std::uint32_t> powers;
    std::uint32_t x = 1;
    do {
      powers.push_back(x);
      x = mul_slow(x, g);
    } while (x != 1 && powers.size() < q_);
    if (powers.size() == q_ - 1) {
      exp_ = std::move(powers);
      break;
    }
  }
  for (std::uint32_t k = 0; k < exp_.size(); ++k) log_[exp_[k]] = k;
}

std::uint32_t ExtField::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (r_ == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % ell_);
  auto da = digits(a, ell_, r_);
  auto db = digits(b, ell_, r_);
  std::vector<std::uint32_t> prod(2 * r_ - 1, 0);
  for (std::uint32_t i = 0; i < r_; ++i)
    for (std::uint32_t j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % ell_;
  for (std::size_t k = prod.size(); k-- > r_;) {
    std::uint32_t c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < r_; ++j)
      prod[k - r_ + j] = (prod[k - r_ + j] + ell_ * ell_ - c * modulus_[j]) % ell_;
    prod[k] = 0;
  }
  prod.resize(r_);
  return encode(prod, ell_);
}

std::uint32_t ExtField::add(std::uint32_t a, std::uint32_t b) const {
  auto da = digits(a, ell_, r_);
  auto db = digits(b, ell_, r_);
  for (std::uint32_t i = 0; i < r_; ++i) da[i] = (da[i] + db[i]) % ell_;
  return encode(da, ell_);
}

std::uint32_t ExtField::neg(std::uint32_t a) const {
  auto da = digits(a, ell_, r_);
  for (auto& d : da) d = (ell_ - d) % ell_;
  return encode(da, ell_);
}

std::uint32_t ExtField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t ExtField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t ExtField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t ExtField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

}  // namespace heartproof::gf
