#include "heartproof/meataxe.hpp"

#include <random>

#include "heartproof/error.hpp"

namespace heartproof {

using gf::Matrix;
using gf::PolyFp;
using gf::Vec;

PolyFp characteristic_polynomial(const Matrix& a_in) {
  if (!a_in.is_square()) throw Error(ErrorCode::InvalidField, "characteristic polynomial of a non-square matrix");
  const auto& F = a_in.field();
  const std::size_t n = a_in.rows();
  const std::uint64_t p = F.p();
  Matrix H = a_in;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = j + 1; i < n; ++i)
      if (H(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(H(piv, c), H(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(H(r, piv), H(r, j + 1));
    }
    const gf::Elem inv = F.inv(H(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const gf::Elem u = F.mul(H(i, j), inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) H(i, c) = F.sub(H(i, c), F.mul(u, H(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) H(r, j + 1) = F.add(H(r, j + 1), F.mul(u, H(r, i)));
    }
  }

  std::vector<PolyFp> P{PolyFp::constant(p, 1)};
  for (std::size_t m = 1; m <= n; ++m) {
    PolyFp next = PolyFp(p, {F.neg(H(m - 1, m - 1)), 1}) * P[m - 1];
    gf::Elem t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, H(m - i, m - i - 1));
      const gf::Elem c = F.mul(t, H(m - i - 1, m - 1));
      if (c != 0) next = next - PolyFp::constant(p, c) * P[m - i - 1];
    }
    P.push_back(std::move(next));
  }
  return P[n];
}

Matrix evaluate(const PolyFp& f, const Matrix& a) {
  const auto& F = a.field();
  Matrix r(F, a.rows(), a.cols());
  for (int i = f.degree(); i >= 0; --i) {
    r = r * a;
    const auto c = static_cast<gf::Elem>(f.coeff(static_cast<std::size_t>(i)));
    for (std::size_t k = 0; k < a.rows(); ++k) r(k, k) = F.add(r(k, k), c);
  }
  return r;
}

namespace {

// Annihilator in the original space of a subspace of the dual.
std::vector<Vec> annihilator(const gf::PrimeField& F, const std::vector<Vec>& dual_rows, std::size_t dim) {
  return gf::kernel_basis(gf::matrix_from_rows(F, dual_rows, dim));
}

}  // namespace

IrreducibilityResult is_irreducible(const GModule& m, std::uint64_t seed, std::size_t budget) {
  IrreducibilityResult res;
  const std::size_t d = m.dim();
  if (d == 0) throw Error(ErrorCode::InvalidField, "zero-dimensional module");
  if (d == 1) {
    res.irreducible = true;
    res.certificate = "dimension 1";
    return res;
  }
  const auto& F = m.field();
  const std::uint32_t p = F.p();
  std::mt19937_64 rng(seed);

  std::vector<Matrix> gens = m.generators();
  std::vector<Matrix> gens_t;
  for (const auto& g : gens) gens_t.push_back(g.transpose());

  std::vector<Matrix> pool = gens;
  if (pool.empty()) pool.push_back(Matrix::identity(F, d));
  constexpr std::size_t kPoolCap = 16;

  for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
    res.attempts = attempt;
    const Matrix prod = pool[rng() % pool.size()] * pool[rng() % pool.size()];
    if (pool.size() < kPoolCap)
      pool.push_back(prod);
    else
      pool[gens.size() + rng() % (kPoolCap - gens.size())] = prod;

    Matrix theta(F, d, d);
    for (const auto& w : pool) theta = theta + w.scaled(static_cast<gf::Elem>(rng() % p));

    const PolyFp chi = characteristic_polynomial(theta);
    for (const auto& f : gf::distinct_irreducible_factors(chi, seed + attempt)) {
      const Matrix N = evaluate(f, theta);
      const auto ker = gf::kernel_basis(N);
      if (ker.empty()) continue;
      auto sub = spin(gens, {ker.front()});
      if (sub.dimension() < d) {
        res.invariant_subspace = sub.rows();
        return res;
      }
      const auto ker_t = gf::kernel_basis(N.transpose());
      auto sub_t = spin(gens_t, {ker_t.front()});
      if (sub_t.dimension() < d) {
        res.invariant_subspace = annihilator(F, sub_t.rows(), d);
        return res;
      }
      if (ker.size() == static_cast<std::size_t>(f.degree())) {
        res.irreducible = true;
        res.certificate = "nullity of f(theta) equals deg f = " + std::to_string(f.degree()) + " for f = " + f.to_string();
        return res;
      }
    }
  }
  throw Error(ErrorCode::RandomnessExhausted,
              "no decisive algebra element within " + std::to_string(budget) + " attempts (retry with another seed)");
}

}  // namespace heartproof
