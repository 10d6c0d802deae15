#include "heartproof/galois_probe.hpp"

#include <algorithm>
#include <numeric>

#include "heartproof/error.hpp"
#include "heartproof/gf.hpp"

namespace heartproof {

std::string to_string(GaloisConclusion c) {
  switch (c) {
    case GaloisConclusion::ProvenSn: return "ProvenSn";
    case GaloisConclusion::ProvenAnOrSn: return "ProvenAnOrSn";
    case GaloisConclusion::ContainsTag: return "ContainsTag";
    case GaloisConclusion::Heuristic: return "Heuristic";
    case GaloisConclusion::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::vector<std::uint32_t> factor_degrees_mod_p(const PolyZ& f, std::uint64_t p, std::uint64_t seed) {
  if (!gf::is_prime(p)) throw Error(ErrorCode::BadReduction, std::to_string(p) + " is not prime");
  gf::PolyFp fp = f.mod(p);
  if (fp.degree() != f.degree()) throw Error(ErrorCode::BadReduction, "p = " + std::to_string(p) + " divides the leading coefficient");
  if (!gf::is_squarefree(fp)) throw Error(ErrorCode::BadReduction, "f mod " + std::to_string(p) + " has a repeated factor");
  std::vector<std::uint32_t> out;
  for (const auto& g : gf::factor_squarefree(fp, seed)) out.push_back(static_cast<std::uint32_t>(g.degree()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_small_prime(std::uint64_t v) { return v >= 2 && gf::is_prime(v); }

// Exactly one part equal to 2, all other parts odd.
bool powers_to_transposition(const std::vector<std::uint32_t>& d) {
  std::size_t twos = 0;
  for (auto x : d) {
    if (x == 2) ++twos;
    else if (x % 2 == 0) return false;
  }
  return twos == 1;
}

// Exactly one part equal to a prime l (l <= n-3 or l = 3), others prime to l.
bool powers_to_prime_cycle(const std::vector<std::uint32_t>& d, std::uint32_t n) {
  for (auto l : d) {
    if (!is_small_prime(l) || l == 2 || !(l + 3 <= n || l == 3) || l >= n) continue;
    std::size_t hits = 0;
    bool ok = true;
    for (auto x : d) {
      if (x == l) ++hits;
      else if (x % l == 0) ok = false;
    }
    if (ok && hits == 1) return true;
  }
  return false;
}

bool has_part(const std::vector<std::uint32_t>& d, std::uint32_t len) {
  return std::find(d.begin(), d.end(), len) != d.end();
}

}  // namespace

GaloisEvidence classify_galois(const PolyZ& f, std::uint64_t budget, std::uint64_t seed) {
  GaloisEvidence e;
  e.f = f;
  e.budget = budget;
  e.seed = seed;
  if (f.degree() < 1) throw Error(ErrorCode::NotApplicable, "constant polynomial");
  e.n = static_cast<std::uint32_t>(f.degree());
  if (!is_squarefree(f)) throw Error(ErrorCode::NotApplicable, "polynomial has repeated roots");
  e.disc = discriminant(f);
  if (e.disc == 0) throw Error(ErrorCode::NotApplicable, "polynomial has repeated roots");
  e.disc_is_square = is_perfect_square(e.disc);
  const BigInt bad = f.leading() * e.disc;

  std::uint64_t sampled = 0;
  for (std::uint64_t p = 3; sampled < budget; p += 2) {
    if (!gf::is_prime(p) || bad % p == 0) continue;
    ++sampled;
    CyclePattern pat{p, factor_degrees_mod_p(f, p, seed)};
    const auto& d = pat.degrees;
    if (d.size() == 1 && !e.irreducible_witness) e.irreducible_witness = p;
    if (!e.transposition_witness && powers_to_transposition(d)) e.transposition_witness = p;
    if (!e.two_transitive_witness && e.n >= 3 && d.size() == 2 && has_part(d, 1) && has_part(d, e.n - 1))
      e.two_transitive_witness = p;
    if (!e.prime_cycle_witness && powers_to_prime_cycle(d, e.n)) e.prime_cycle_witness = p;
    e.patterns.push_back(std::move(pat));
  }

  const bool transitive = e.irreducible_witness.has_value();
  e.primitive = transitive && (gf::is_prime(e.n) || e.two_transitive_witness.has_value());
  if (e.primitive && e.transposition_witness && e.disc_is_square == false) {
    e.conclusion = GaloisConclusion::ProvenSn;
    e.tag = "S_n";
  } else if (e.primitive && e.prime_cycle_witness) {
    e.conclusion = GaloisConclusion::ProvenAnOrSn;
    e.tag = *e.disc_is_square ? "A_n" : "S_n";
  } else if (transitive && e.two_transitive_witness) {
    e.conclusion = GaloisConclusion::ContainsTag;
    e.tag = "2-transitive";
  } else if (transitive) {
    e.conclusion = GaloisConclusion::Heuristic;
    e.tag = *e.disc_is_square ? "A_n?" : "S_n?";
  } else {
    e.conclusion = GaloisConclusion::Unknown;
  }
  return e;
}

std::string verify_evidence(const GaloisEvidence& e) {
  auto check_pattern = [&](std::uint64_t p, auto&& pred, const char* what) -> std::string {
    try {
      if (!pred(factor_degrees_mod_p(e.f, p, e.seed + 1))) return std::string(what) + " pattern mod " + std::to_string(p) + " not reproduced";
    } catch (const Error& err) {
      return err.what();
    }
    return {};
  };
  const std::uint32_t n = e.n;
  if (e.conclusion == GaloisConclusion::ProvenSn || e.conclusion == GaloisConclusion::ProvenAnOrSn) {
    if (!e.irreducible_witness) return "no irreducibility witness";
    if (auto s = check_pattern(*e.irreducible_witness, [](const auto& d) { return d.size() == 1; }, "irreducible"); !s.empty()) return s;
    if (!gf::is_prime(n)) {
      if (!e.two_transitive_witness) return "no primitivity witness";
      if (auto s = check_pattern(*e.two_transitive_witness,
                                 [n](const auto& d) { return d.size() == 2 && has_part(d, 1) && has_part(d, n - 1); }, "(n-1)-cycle");
          !s.empty())
        return s;
    }
    const BigInt d1 = discriminant(e.f), d2 = discriminant_crt(e.f);
    if (d1 != d2) return "discriminants disagree: " + d1.str() + " vs " + d2.str();
    if (d1 != e.disc) return "recorded discriminant differs from recomputation";
    if (is_perfect_square(d1) != e.disc_is_square.value_or(!is_perfect_square(d1))) return "square test not reproduced";
  }
  if (e.conclusion == GaloisConclusion::ProvenSn) {
    if (!e.transposition_witness) return "no transposition witness";
    if (auto s = check_pattern(*e.transposition_witness, [](const auto& d) { return powers_to_transposition(d); }, "transposition"); !s.empty())
      return s;
    if (*e.disc_is_square) return "square discriminant contradicts S_n";
  }
  if (e.conclusion == GaloisConclusion::ProvenAnOrSn) {
    if (!e.prime_cycle_witness) return "no prime-cycle witness";
    if (auto s = check_pattern(*e.prime_cycle_witness, [n](const auto& d) { return powers_to_prime_cycle(d, n); }, "prime cycle"); !s.empty())
      return s;
  }
  return {};
}

}  // namespace heartproof
