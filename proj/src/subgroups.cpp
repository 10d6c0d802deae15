#include "heartproof/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "heartproof/error.hpp"

namespace heartproof {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

bool test(const Bits& b, std::uint64_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set(Bits& b, std::uint64_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

bool is_prime_power(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    return m == 1;
  }
  return true;
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const PermGroup& G, const SubgroupSearchOptions& options) {
  if (G.order() > kSubgroupEnumerationLimit)
    throw Error(ErrorCode::TooLarge, "subgroup enumeration limited to order " + std::to_string(kSubgroupEnumerationLimit));
  const std::size_t n = G.degree();
  const auto elems = G.elements();
  const std::uint64_t M = elems.size();
  const std::size_t words = (M + 63) / 64;

  std::vector<std::vector<std::uint32_t>> conj(G.generators().size(), std::vector<std::uint32_t>(M));
  for (std::size_t k = 0; k < G.generators().size(); ++k) {
    const auto& g = G.generators()[k];
    const auto gi = g.inverse();
    for (std::uint64_t x = 0; x < M; ++x) conj[k][x] = static_cast<std::uint32_t>(G.rank(gi * elems[x] * g));
  }

  // Canonical generators (minimal rank) of cyclic subgroups of prime-power order.
  std::vector<std::uint32_t> cyclic;
  {
    std::vector<bool> covered(M, false);
    for (std::uint64_t x = 0; x < M; ++x) {
      if (covered[x]) continue;
      auto ord = elems[x].order();
      if (!is_prime_power(ord)) continue;
      for (std::uint64_t k = 1; k < ord; ++k)
        if (std::gcd(k, ord) == 1) covered[G.rank(elems[x].pow(static_cast<std::int64_t>(k)))] = true;
      cyclic.push_back(static_cast<std::uint32_t>(x));
    }
  }

  struct Rep {
    Bits bits;
    std::vector<Permutation> gens;
    std::uint64_t order;
  };
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<SubgroupClass> out;
  std::deque<Rep> queue;

  auto register_class = [&](Rep rep) {
    std::vector<Bits> cls{rep.bits};
    seen.insert(rep.bits);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t k = 0; k < conj.size(); ++k) {
        Bits img(words, 0);
        for (std::uint64_t x = 0; x < M; ++x)
          if (test(cls[i], x)) set(img, conj[k][x]);
        if (seen.insert(img).second) cls.push_back(std::move(img));
      }
    }
    out.push_back({rep.order, cls.size(), rep.gens});
    queue.push_back(std::move(rep));
  };

  {
    Bits triv(words, 0);
    set(triv, G.rank(Permutation::identity(n)));
    register_class({std::move(triv), {}, 1});
  }
  if (options.stop_at && options.stop_at(1)) return out;

  while (!queue.empty()) {
    Rep H = std::move(queue.front());
    queue.pop_front();
    for (auto c : cyclic) {
      if (test(H.bits, c)) continue;
      std::vector<Permutation> gens = H.gens;
      gens.push_back(elems[c]);
      PermGroup K(n, gens);
      const std::uint64_t order = K.order_u64();
      if (options.admissible && !options.admissible(order)) continue;
      Bits bits(words, 0);
      for (const auto& k : K.elements()) set(bits, G.rank(k));
      if (seen.count(bits)) continue;
      register_class({std::move(bits), std::move(gens), order});
      if (options.stop_at && options.stop_at(order)) return out;
    }
  }
  return out;
}

IndexSearchResult exists_subgroup_of_index_dividing(const PermGroup* G, const std::optional<GroupTag>& tag,
                                                    const BigInt& N) {
  IndexSearchResult res;
  if (N <= 1) {
    res.witness = "N has no divisor greater than 1";
    return res;
  }
  BigInt order = G ? G->order() : (tag ? tag->order() : BigInt(0));
  if (order == 0) throw Error(ErrorCode::TooLarge, "no concrete group and no family table");

  std::vector<BigInt> relevant;  // divisors d > 1 of N that divide |G|
  for (BigInt d = 2; d <= N; ++d)
    if (N % d == 0 && order % d == 0) relevant.push_back(d);
  if (relevant.empty()) {
    res.method = IndexMethod::Trivial;
    res.witness = "no divisor d > 1 of " + N.str() + " divides the group order " + order.str();
    return res;
  }

  if (tag) {
    if (auto fact = min_index_fact(*tag)) {
      bool decided = true;
      for (const auto& d : relevant) {
        if (d == 2 && fact->index_two_exists) {
          res.exists = true;
          res.method = IndexMethod::Table;
          res.index = 2;
          res.witness = fact->statement;
          return res;
        }
        if (d >= fact->min_index) decided = false;
      }
      if (decided) {
        res.method = IndexMethod::Table;
        res.witness = fact->statement;
        return res;
      }
    }
  }

  if (!G || G->order() > kSubgroupEnumerationLimit)
    throw Error(ErrorCode::TooLarge, "group of order " + order.str() + " exceeds the enumeration limit and no table fact decides");

  const std::uint64_t M = G->order_u64();
  std::vector<std::uint64_t> targets;  // subgroup orders M / d
  for (const auto& d : relevant) targets.push_back(M / static_cast<std::uint64_t>(d));
  SubgroupSearchOptions opts;
  opts.admissible = [&](std::uint64_t m) {
    return std::any_of(targets.begin(), targets.end(), [m](std::uint64_t t) { return t % m == 0; });
  };
  opts.stop_at = [&](std::uint64_t m) {
    return std::find(targets.begin(), targets.end(), m) != targets.end();
  };
  auto classes = subgroup_classes(*G, opts);
  res.method = IndexMethod::Enumeration;
  for (const auto& c : classes) {
    if (opts.stop_at(c.order)) {
      res.exists = true;
      res.index = M / c.order;
      res.witness = "subgroup of order " + std::to_string(c.order) + " and index " + std::to_string(M / c.order);
      return res;
    }
  }
  res.witness = "enumerated " + std::to_string(classes.size()) + " admissible subgroup classes, none of index dividing " + N.str();
  return res;
}

IndexSearchResult exists_subgroup_of_index_dividing(const PermGroup& G, const BigInt& N) {
  return exists_subgroup_of_index_dividing(&G, std::nullopt, N);
}

PermGroup coset_action(const PermGroup& G, const PermGroup& H) {
  if (H.degree() != G.degree()) throw Error(ErrorCode::NotSubgroup, "degree mismatch");
  for (const auto& h : H.generators())
    if (!G.contains(h)) throw Error(ErrorCode::NotSubgroup, "a generator of H is not in G");
  if (G.order() % H.order() != 0) throw Error(ErrorCode::NotSubgroup, "order of H does not divide order of G");
  const auto index = static_cast<std::size_t>(G.order() / H.order());
  if (index > 100000) throw Error(ErrorCode::TooLarge, "coset space too large");

  std::vector<Permutation> reps{Permutation::identity(G.degree())};
  std::vector<Permutation> rep_inv{reps[0]};
  auto find = [&](const Permutation& x) -> std::size_t {
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (H.contains(rep_inv[j] * x)) return j;
    return reps.size();
  };
  std::vector<std::vector<std::uint32_t>> images(G.generators().size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t k = 0; k < G.generators().size(); ++k) {
      Permutation x = G.generators()[k] * reps[i];
      std::size_t j = find(x);
      if (j == reps.size()) {
        reps.push_back(x);
        rep_inv.push_back(x.inverse());
      }
      images[k].push_back(static_cast<std::uint32_t>(j));
    }
  }
  if (reps.size() != index) throw Error(ErrorCode::NotSubgroup, "coset enumeration did not close");
  std::vector<Permutation> gens;
  for (auto& img : images) gens.emplace_back(std::move(img));
  return PermGroup(index, std::move(gens));
}

}  // namespace heartproof
