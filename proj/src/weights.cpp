#include "heartproof/weights.hpp"

#include <numeric>
#include <sstream>

#include "heartproof/error.hpp"
#include "heartproof/gf.hpp"

namespace heartproof {

CurveParams CurveParams::make(std::uint32_t n, std::uint32_t p, std::uint32_t r) {
  if (p < 3 || !gf::is_prime(p)) throw Error(ErrorCode::InvalidField, "p = " + std::to_string(p) + " is not an odd prime");
  if (r == 0) throw Error(ErrorCode::InvalidField, "r must be at least 1");
  return {n, p, r};
}

std::uint64_t euler_phi_prime_power(std::uint64_t p, unsigned r) { return r == 0 ? 1 : ipow(p, r - 1) * (p - 1); }

BigInt genus(const CurveParams& c) {
  const BigInt q = c.q();
  if (c.n % c.p != 0) return (q - 1) * (c.n - 1) / 2;
  if (c.n % c.q() == 0) return (q - 1) * (c.n - 2) / 2;
  throw Error(ErrorCode::HypothesisViolated,
              "p = " + std::to_string(c.p) + " divides n = " + std::to_string(c.n) + " but q does not");
}

WeightProfile weight_profile(const CurveParams& c) {
  if (c.n % c.p == 0) throw Error(ErrorCode::NotApplicable, "the multiplicity formula needs p not dividing n");
  WeightProfile w;
  w.params = c;
  const std::uint64_t q = c.q();
  for (std::uint64_t i = 1; i < q; ++i) {
    if (i % c.p == 0) continue;
    const std::uint64_t m = c.n * i / q;
    w.mults.emplace_back(i, m);
    w.gcd = std::gcd(w.gcd, m);
    w.support += m != 0;
  }
  w.genus = genus(c);
  const std::uint64_t phi = euler_phi_prime_power(c.p, c.r);
  w.dimension = BigInt(phi) * (c.n - 1) / 2;
  if ((2 * w.dimension) % phi == 0) w.h_E = 2 * w.dimension / phi;
  return w;
}

std::string format_profile(const WeightProfile& w) {
  std::ostringstream os;
  os << "i, n_sigma_i\n";
  for (const auto& [i, m] : w.mults) os << i << ", " << m << '\n';
  os << "genus " << w.genus;
  if (w.dimension != w.genus) os << " dimension " << w.dimension;
  os << " gcd " << w.gcd << " support " << w.support;
  if (w.h_E) os << " h_E " << *w.h_E;
  os << '\n';
  return os.str();
}

bool csa_constraints(const WeightProfile& w, std::uint64_t d) {
  if (d == 0) return false;
  for (const auto& [i, m] : w.mults)
    if (m != 0 && m % d != 0) return false;
  return BigInt(d) * w.support <= w.dimension;
}

PolyZ cyclotomic_prime_power(std::uint64_t p, unsigned i) {
  const std::uint64_t step = ipow(p, i - 1);
  std::vector<BigInt> c((p - 1) * step + 1, 0);
  for (std::uint64_t j = 0; j < p; ++j) c[j * step] = 1;
  return PolyZ(c);
}

CyclotomicData cyclotomic_data(std::uint64_t p, unsigned r) {
  CyclotomicData d;
  d.p = p;
  d.r = r;
  d.product = PolyZ({1});
  for (unsigned i = 1; i <= r; ++i) {
    d.factors.push_back(cyclotomic_prime_power(p, i));
    d.degrees.push_back(static_cast<std::uint64_t>(d.factors.back().degree()));
    d.total_degree += d.degrees.back();
    d.product = d.product * d.factors.back();
  }
  d.geometric = PolyZ(std::vector<BigInt>(ipow(p, r), 1));
  return d;
}

BigInt h_E(const BigInt& dim_Z, std::uint64_t p, unsigned r) {
  const std::uint64_t phi = euler_phi_prime_power(p, r);
  if ((2 * dim_Z) % phi != 0)
    throw Error(ErrorCode::NotDivisible, "phi(p^r) = " + std::to_string(phi) + " does not divide 2 dim(Z) = " + BigInt(2 * dim_Z).str());
  return 2 * dim_Z / phi;
}

}  // namespace heartproof
