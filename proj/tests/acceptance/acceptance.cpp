// Acceptance suite: one PASS/FAIL line per criterion with elapsed time.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heartproof/certificate_io.hpp"
#include "heartproof/cli.hpp"
#include "heartproof/error.hpp"
#include "heartproof/families.hpp"
#include "heartproof/galois_probe.hpp"
#include "heartproof/gf.hpp"
#include "heartproof/meataxe.hpp"
#include "heartproof/modrep.hpp"
#include "heartproof/simplicity.hpp"
#include "heartproof/sl2f5.hpp"
#include "heartproof/verdict.hpp"
#include "heartproof/weights.hpp"

using namespace heartproof;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

// Heart dimension against the zero-sum hyperplane, computed from the permutation
// module by rank arithmetic rather than from the closed formula.
Outcome heart_dimension_law() {
  Outcome o;
  for (std::uint32_t n = 5; n <= 12; ++n) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      auto G = symmetric_group(n);
      auto h = heart(G, p);
      const std::size_t expected = n % p == 0 ? n - 2 : n - 1;
      // Independent count: the all-ones vector lies in the zero-sum hyperplane iff p | n.
      const std::size_t hyperplane = n - 1;
      const std::size_t constants_inside = n % p == 0 ? 1 : 0;
      const std::string at = "n=" + str(n) + " p=" + str(p);
      o.expect(h.module.dim() == expected, at + ": heart dim " + str(h.module.dim()));
      o.expect(hyperplane - constants_inside == expected, at + ": hyperplane count");
      o.expect(heart_dimension(n, p) == expected, at + ": heart_dimension");
    }
  }
  return o;
}

Outcome absolute_irreducibility() {
  Outcome o;
  struct Item {
    std::string name;
    PermGroup group;
    std::vector<std::uint32_t> primes;
  };
  std::vector<Item> items;
  const std::vector<std::uint32_t> primes{3, 5, 7, 11, 13};
  for (std::uint32_t n : {5u, 6u, 7u}) {
    items.push_back({"S" + str(n), symmetric_group(n), primes});
    items.push_back({"A" + str(n), alternating_group(n), primes});
  }
  items.push_back({"M11", mathieu_group(11), {5}});
  for (const auto& it : items) {
    for (std::uint32_t p : it.primes) {
      const std::string at = it.name + " p=" + str(p);
      auto h = heart(it.group, p);
      try {
        auto res = is_irreducible(h.module, 1);
        o.expect(res.irreducible, at + ": MeatAxe reports reducible");
      } catch (const Error& e) {
        o.expect(false, at + ": " + e.what());
      }
      o.expect(commutant_dim(h.module) == 1, at + ": commutant dimension " + str(commutant_dim(h.module)));
      if (it.name == "M11") o.expect(h.module.dim() == 10, at + ": dimension " + str(h.module.dim()));
    }
  }
  return o;
}

Outcome tensor_decomposition() {
  Outcome o;
  for (std::uint32_t p : {11u, 19u, 29u, 31u}) {
    const std::string at = "p=" + str(p);
    try {
      auto reps = sl2f5_two_dim_reps(p);
      auto t = tensor(reps.v1, reps.v2);
      auto X = module_iso(t, reps.pulled_heart, 0);
      o.expect(X.has_value(), at + ": no isomorphism found");
      if (X) {
        auto inv = gf::inverse(*X);
        o.expect(inv.has_value(), at + ": intertwiner is singular");
        o.expect(is_intertwiner(*X, t, reps.pulled_heart), at + ": intertwiner check");
        // Direct check X T(g) = H(g) X for every generator.
        for (std::size_t i = 0; i < t.num_generators(); ++i)
          o.expect(*X * t.generators()[i] == reps.pulled_heart.generators()[i] * *X, at + ": generator relation");
      }
      gf::PrimeField F(p);
      o.expect(subalgebra_is_normal(t, tensor_factor_subalgebra(F, 2, 2, true)), at + ": left factor not normal");
      o.expect(subalgebra_is_normal(t, tensor_factor_subalgebra(F, 2, 2, false)), at + ": right factor not normal");
      o.expect(tensor_factor_subalgebra(F, 2, 2, true).size() == 4, at + ": left factor dimension");
    } catch (const Error& e) {
      o.expect(false, at + ": " + e.what());
    }
  }
  return o;
}

Outcome alternating_dichotomy() {
  Outcome o;
  for (std::uint32_t p = 7; p <= 100; ++p) {
    if (!is_small_prime(p)) continue;
    const bool very = very_simple_alt(5, p).level == SimplicityLevel::VerySimple;
    const bool residue = p % 5 == 2 || p % 5 == 3;
    const std::uint64_t psl2 = static_cast<std::uint64_t>(p) * (p * p - 1) / 2;
    const bool embeds = psl2 % 60 == 0;
    const std::string at = "p=" + str(p);
    o.expect(very == residue, at + ": residue test");
    o.expect(very == !embeds, at + ": divisibility test");
  }
  return o;
}

Outcome weight_laws() {
  Outcome o;
  for (std::uint32_t p = 3; p <= 37; p += 2) {
    if (!is_small_prime(p)) continue;
    for (std::uint32_t r = 1; r <= 2; ++r) {
      const std::uint64_t q = ipow(p, r);
      const std::uint64_t phi = q - q / p;
      for (std::uint32_t n = 5; n <= 60; ++n) {
        if (n % p == 0) continue;
        const std::string at = "n=" + str(n) + " p=" + str(p) + " r=" + str(r);
        auto w = weight_profile(CurveParams::make(n, p, r));
        // Direct recomputation of the weights.
        std::uint64_t sum = 0, g = 0, support = 0;
        std::size_t count = 0;
        bool listed = true;
        for (std::uint64_t i = 1; i < q; ++i) {
          if (i % p == 0) continue;
          const std::uint64_t m = n * i / q;
          listed = listed && count < w.mults.size() && w.mults[count] == std::make_pair(i, m);
          ++count;
          sum += m;
          g = std::gcd(g, m);
          support += m != 0;
        }
        o.expect(listed && count == w.mults.size(), at + ": multiplicity list");
        // Riemann-Hurwitz for y^q = f(x) with deg f = n prime to p.
        const std::uint64_t genus_rh = ((q - 1) * (n - 1) - (std::gcd<std::uint64_t>(n, q) - 1)) / 2;
        o.expect(w.genus == genus_rh, at + ": genus " + to_string(w.genus));
        const std::uint64_t target = r == 1 ? genus_rh : phi * (n - 1) / 2;
        o.expect(sum == target && w.dimension == target, at + ": sum of multiplicities " + str(sum));
        o.expect(w.gcd == g && w.support == support, at + ": gcd/support bookkeeping");
        if (r == 1 && (n - 1) % p == 0) o.expect(w.gcd == (n - 1) / p, at + ": gcd " + str(w.gcd));
        if (n == p + 1 || (n - 1) % p != 0) o.expect(w.gcd == 1, at + ": gcd " + str(w.gcd));
        if (r == 1) o.expect(2 * w.support >= p + 1, at + ": support " + str(w.support));
        o.expect(2 * w.support > phi, at + ": support " + str(w.support));
      }
    }
  }
  return o;
}

Outcome cyclotomic_factorization() {
  Outcome o;
  for (std::uint32_t p = 3; p <= 13; p += 2) {
    if (!is_small_prime(p)) continue;
    for (unsigned r = 1; r <= 3; ++r) {
      const std::uint64_t q = ipow(p, r);
      const std::string at = "p=" + str(p) + " r=" + str(r);
      auto c = cyclotomic_data(p, r);
      PolyZ prod({1});
      for (unsigned i = 1; i <= r; ++i) prod = prod * cyclotomic_prime_power(p, i);
      std::vector<BigInt> ones(q, 1);
      const PolyZ geometric(ones);
      o.expect(prod == geometric, at + ": product differs from the geometric sum");
      o.expect(c.product == geometric && c.geometric == geometric, at + ": cyclotomic data");
      o.expect(c.total_degree == q - 1 && geometric.degree() == static_cast<int>(q - 1), at + ": total degree");
      std::uint64_t degsum = 0;
      for (auto d : c.degrees) degsum += d;
      o.expect(degsum == q - 1, at + ": factor degrees");
    }
  }
  return o;
}

bool cross_check_order(const PermGroup& G, Outcome& o, const std::string& at) {
  std::vector<std::uint32_t> reversed(G.degree());
  std::iota(reversed.begin(), reversed.end(), 0u);
  std::reverse(reversed.begin(), reversed.end());
  PermGroup H(G.degree(), G.generators(), reversed);
  const bool different_base = H.base() != G.base();
  o.expect(different_base, at + ": second chain uses the same base");
  o.expect(H.order() == G.order(), at + ": second chain order " + to_string(H.order()));
  return H.order() == G.order();
}

Outcome group_constructions() {
  Outcome o;
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    auto pp = prime_power(q);
    const std::string at = "PSL(2," + str(q) + ")";
    o.expect(pp.has_value(), at + ": not a prime power");
    if (!pp) continue;
    auto G = psl2_group(pp->first, pp->second);
    const BigInt expected = BigInt(q) * (BigInt(q) * q - 1) / (q % 2 == 0 ? 1 : 2);
    o.expect(G.order() == expected, at + ": order " + to_string(G.order()));
    o.expect(G.degree() == q + 1, at + ": degree");
    o.expect(G.is_doubly_transitive(), at + ": not doubly transitive");
    cross_check_order(G, o, at);
  }
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> mathieu{
      {11, 7920}, {12, 95040}, {22, 443520}, {23, 10200960}, {24, 244823040}};
  for (auto [n, order] : mathieu) {
    const std::string at = "M" + str(n);
    auto G = mathieu_group(n);
    o.expect(G.order() == order, at + ": order " + to_string(G.order()));
    o.expect(G.is_doubly_transitive(), at + ": not doubly transitive");
    cross_check_order(G, o, at);
  }
  return o;
}

Outcome verdict_regression() {
  Outcome o;
  const auto path = std::filesystem::path(HEARTPROOF_TEST_DATA) / "data" / "fixtures.jsonl";
  std::ostringstream out, err;
  auto summary = cli::run_fixtures(path, out, err, false);
  std::istringstream lines(out.str());
  std::string first_failure;
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("FAIL", 0) == 0 && first_failure.empty()) first_failure = line;
  o.cases = summary.passed + summary.failed;
  o.pass = summary.failed == 0 && summary.passed == 14 && err.str().empty();
  if (!o.pass)
    o.detail = str(summary.passed) + " passed, " + str(summary.failed) + " failed " + first_failure + err.str();
  return o;
}

Outcome galois_probe() {
  Outcome o;
  struct Case {
    const char* poly;
    GaloisConclusion conclusion;
    const char* tag;
    bool square;
  };
  for (const Case& c : {Case{"x^5 - x - 1", GaloisConclusion::ProvenSn, "S_n", false},
                        Case{"x^5 + 20x + 16", GaloisConclusion::ProvenAnOrSn, "A_n", true}}) {
    const std::string at = c.poly;
    auto f = PolyZ::parse(c.poly);
    auto e = classify_galois(f, 40, 7);
    o.expect(e.conclusion == c.conclusion, at + ": conclusion " + to_string(e.conclusion));
    o.expect(e.tag == c.tag, at + ": tag " + e.tag);
    o.expect(e.disc_is_square == c.square, at + ": discriminant square test");
    o.expect(is_perfect_square(e.disc) == c.square, at + ": independent square test");
    o.expect(discriminant_crt(f) == e.disc, at + ": discriminant by CRT");
    const std::string problem = verify_evidence(e);
    o.expect(problem.empty(), at + ": re-verification " + problem);
    auto again = classify_galois(f, 40, 7);
    bool same = again.conclusion == e.conclusion && again.tag == e.tag && again.patterns.size() == e.patterns.size();
    for (std::size_t i = 0; same && i < e.patterns.size(); ++i)
      same = again.patterns[i].prime == e.patterns[i].prime && again.patterns[i].degrees == e.patterns[i].degrees;
    o.expect(same, at + ": rerun differs");
  }
  return o;
}

Outcome soundness_gate() {
  Outcome o;
  std::mt19937_64 rng(20261014);
  const std::vector<std::string> tags{"S", "A", "M11", "M12", "M22", "M23", "M24", "L2(7)", "L2(8)",
                                      "L2(11)", "L2(13)", "L2(16)", "L2(17)", "L2(25)", "U3(3)", "U3(4)",
                                      "U3(5)", "Custom"};
  const std::vector<std::string> files{"a5.txt", "psl2_13.txt", "s8.txt"};
  const std::vector<std::string> polys{"x^5 - x - 1", "x^5 + 20x + 16", "x^6 + x + 1", "x^7 - 7x + 3",
                                       "x^5 - 2", "x^7 - x - 1", "x^8 + x^3 + 1"};
  const std::vector<std::uint32_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  const auto groups = std::filesystem::path(HEARTPROOF_TEST_DATA) / "data" / "groups";
  std::size_t dispatched = 0, rejected = 0, conclusive = 0;
  while (dispatched < 1000) {
    cli::ScenarioInput in;
    const auto source = rng() % 10;
    if (source < 7) {
      const auto& tag = tags[rng() % tags.size()];
      in.group = tag;
      if (tag == "S" || tag == "A") in.n = static_cast<std::uint32_t>(5 + rng() % 26);
    } else if (source < 9) {
      in.group_file = (groups / files[rng() % files.size()]).string();
    } else {
      in.poly = polys[rng() % polys.size()];
    }
    in.p = primes[rng() % primes.size()];
    in.r = static_cast<std::uint32_t>(1 + rng() % 3);
    in.assume_zeta = rng() % 4 == 0;
    in.seed = rng() % 1000;
    Scenario s;
    try {
      s = cli::build_scenario(in);
    } catch (const Error&) {
      ++rejected;
      continue;
    }
    ++dispatched;
    auto c = dispatch(s);
    const bool inconclusive = c.conclusion.kind == ConclusionKind::Inconclusive;
    conclusive += !inconclusive;
    o.expect(inconclusive || c.all_checks_pass(),
             "n=" + str(s.n) + " p=" + str(s.p) + " r=" + str(s.r) + " " + s.group_label + ": failed check in " +
                 c.theorem);
  }
  o.detail += (o.detail.empty() ? "" : "; ") + str(conclusive) + " conclusive, " + str(rejected) + " rejected inputs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {"heart dimension law", heart_dimension_law, 1},
      {"absolute irreducibility of hearts", absolute_irreducibility, 30},
      {"A5 tensor decomposition", tensor_decomposition, 60},
      {"A5 very simple dichotomy", alternating_dichotomy, 1},
      {"weight laws", weight_laws, 5},
      {"cyclotomic factorization", cyclotomic_factorization, 5},
      {"group constructions", group_constructions, 60},
      {"verdict regression against goldens", verdict_regression, 120},
      {"Galois probe", galois_probe, 10},
      {"soundness gate", soundness_gate, 120},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > criteria[i].limit_seconds) {
      o.pass = false;
      o.detail = "time limit exceeded";
    }
    failures += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].name << " (" << o.cases
              << " cases, " << timing << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
