#include "heartproof/sl2f5.hpp"

#include <array>
#include <map>

#include "heartproof/error.hpp"
#include "heartproof/subgroups.hpp"

namespace heartproof {

namespace {

using M2 = std::array<std::uint32_t, 4>;  // row-major a b / c d

struct Ring {
  std::uint32_t p;
  M2 mul(const M2& x, const M2& y) const {
    auto f = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
      return static_cast<std::uint32_t>((a * b + c * d) % p);
    };
    return {f(x[0], y[0], x[1], y[2]), f(x[0], y[1], x[1], y[3]), f(x[2], y[0], x[3], y[2]), f(x[2], y[1], x[3], y[3])};
  }
  std::uint32_t trace(const M2& x) const { return (x[0] + x[3]) % p; }
  std::uint32_t det(const M2& x) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(x[0]) * x[3] % p + p -
                                       static_cast<std::uint64_t>(x[1]) * x[2] % p) % p);
  }
  M2 minus_one() const { return {p - 1, 0, 0, p - 1}; }
  M2 power(M2 x, unsigned e) const {
    M2 r{1, 0, 0, 1};
    while (e--) r = mul(r, x);
    return r;
  }
};

// Elements of <s, t> in breadth-first order, or empty if larger than `cap`.
std::vector<M2> closure(const Ring& R, const M2& s, const M2& t, std::size_t cap) {
  std::map<M2, std::size_t> index;
  std::vector<M2> elems{{1, 0, 0, 1}};
  index[elems[0]] = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : {s, t}) {
      M2 y = R.mul(g, elems[i]);
      if (index.emplace(y, elems.size()).second) {
        elems.push_back(y);
        if (elems.size() > cap) return {};
      }
    }
  }
  return elems;
}

gf::Matrix to_matrix(const gf::PrimeField& F, const M2& x) { return gf::Matrix(F, 2, 2, {x[0], x[1], x[2], x[3]}); }

}  // namespace

SL2F5Reps sl2f5_two_dim_reps(std::uint32_t p) {
  if (p <= 5 || !gf::is_prime(p) || (p % 5 != 1 && p % 5 != 4))
    throw Error(ErrorCode::BadCongruence, "p = " + std::to_string(p) + " is not a prime > 5 congruent to +-1 mod 5");
  const gf::PrimeField F(p);
  const Ring R{p};
  const auto root5 = gf::sqrt_mod_p(5, p);
  if (!root5) throw Error(ErrorCode::BadCongruence, "5 is not a square mod " + std::to_string(p));
  const std::uint32_t inv2 = F.inv(2);
  const std::uint32_t tau1 = F.mul(F.add(1, static_cast<gf::Elem>(*root5)), inv2);
  const std::uint32_t tau2 = F.mul(F.sub(1, static_cast<gf::Elem>(*root5)), inv2);
  const M2 neg = R.minus_one();

  auto for_each_sl2 = [&](auto&& fn) {
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c)
          for (std::uint32_t d = 0; d < p; ++d) {
            M2 x{a, b, c, d};
            if (R.det(x) == 1 && fn(x)) return true;
          }
    return false;
  };

  M2 s{};
  for_each_sl2([&](const M2& x) {
    if (R.power(x, 3) != neg) return false;
    s = x;
    return true;
  });

  auto find_t = [&](std::uint32_t tau, M2& out) {
    return for_each_sl2([&](const M2& x) {
      if (R.trace(x) != tau || R.power(x, 5) != neg) return false;
      const M2 st = R.mul(s, x);
      if (R.mul(st, st) != neg) return false;
      if (closure(R, s, x, 120).size() != 120) return false;
      out = x;
      return true;
    });
  };
  M2 t1{}, t2{};
  if (!find_t(tau1, t1) || !find_t(tau2, t2))
    throw Error(ErrorCode::BadCongruence, "no generating pair found over F_" + std::to_string(p));

  // Regular representation of gamma = <s, t1>.
  const auto elems = closure(R, s, t1, 120);
  std::map<M2, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::uint32_t> ls(120), lt(120);
  for (std::uint32_t i = 0; i < 120; ++i) {
    ls[i] = index.at(R.mul(s, elems[i]));
    lt[i] = index.at(R.mul(t1, elems[i]));
  }
  auto gamma = std::make_shared<const PermGroup>(120, std::vector<Permutation>{Permutation(ls), Permutation(lt)});
  if (gamma->order() != 120) throw Error(ErrorCode::BadCongruence, "regular representation has wrong order");

  // s -> s, t1 -> t2 must extend to a homomorphism on gamma.
  {
    std::vector<M2> image(120);
    std::vector<bool> known(120, false);
    image[0] = {1, 0, 0, 1};
    known[0] = true;
    std::vector<std::uint32_t> queue{0};
    const std::array<M2, 2> g1{s, t1}, g2{s, t2};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto x = queue[i];
      for (std::size_t k = 0; k < 2; ++k) {
        const auto y = index.at(R.mul(g1[k], elems[x]));
        const M2 img = R.mul(g2[k], image[x]);
        if (!known[y]) {
          known[y] = true;
          image[y] = img;
          queue.push_back(y);
        } else if (image[y] != img) {
          throw Error(ErrorCode::BadCongruence, "second pair does not define a representation of the same group");
        }
      }
    }
  }

  GModule v1(F, 2, {to_matrix(F, s), to_matrix(F, t1)}, gamma);
  GModule v2(F, 2, {to_matrix(F, s), to_matrix(F, t2)}, gamma);

  // gamma / {+-1} on 60 points, then the coset action on an order-12 subgroup.
  std::vector<std::uint32_t> lz(120);
  for (std::uint32_t i = 0; i < 120; ++i) lz[i] = index.at(R.mul(neg, elems[i]));
  PermGroup center(120, {Permutation(lz)});
  PermGroup psl25 = coset_action(*gamma, center);
  SubgroupSearchOptions opts;
  opts.admissible = [](std::uint64_t m) { return 12 % m == 0; };
  opts.stop_at = [](std::uint64_t m) { return m == 12; };
  std::vector<Permutation> h12;
  for (const auto& c : subgroup_classes(psl25, opts))
    if (c.order == 12) {
      h12 = c.generators;
      break;
    }
  if (h12.empty()) throw Error(ErrorCode::NotSubgroup, "no order-12 subgroup in PSL(2,5)");
  PermGroup a5 = coset_action(psl25, PermGroup(60, h12));

  std::vector<gf::Matrix> heart_gens;
  for (const auto& g : a5.generators()) heart_gens.push_back(heart_matrix(F, g));
  GModule pulled(F, 4, std::move(heart_gens), gamma);

  return SL2F5Reps{p, gamma, std::move(v1), std::move(v2), std::move(a5), std::move(pulled), gamma->rank(center.generators().front())};
}

std::vector<gf::Matrix> tensor_factor_subalgebra(const gf::PrimeField& F, std::size_t d1, std::size_t d2, bool left) {
  std::vector<gf::Matrix> out;
  const std::size_t d = left ? d1 : d2;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      gf::Matrix E(F, d, d);
      E(i, j) = 1;
      out.push_back(left ? gf::kronecker(E, gf::Matrix::identity(F, d2)) : gf::kronecker(gf::Matrix::identity(F, d1), E));
    }
  return out;
}

bool subalgebra_is_normal(const GModule& m, const std::vector<gf::Matrix>& basis) {
  gf::SubspaceBasis span(m.field(), m.dim() * m.dim());
  for (const auto& b : basis) span.insert(b.entries());
  for (const auto& g : m.generators()) {
    auto gi = gf::inverse(g);
    for (const auto& b : basis)
      if (!span.contains((g * b * *gi).entries())) return false;
  }
  return true;
}

}  // namespace heartproof
