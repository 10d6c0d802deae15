#include "heartproof/verdict.hpp"

#include <functional>
#include <sstream>

#include "heartproof/error.hpp"
#include "heartproof/gf.hpp"
#include "heartproof/modrep.hpp"
#include "heartproof/simplicity.hpp"
#include "heartproof/subgroups.hpp"

namespace heartproof {

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Arithmetic: return "arithmetic";
    case CheckKind::Computed: return "computed";
    case CheckKind::Table: return "table";
    case CheckKind::Assumed: return "assumed";
  }
  return "arithmetic";
}

CheckKind check_kind_from_string(const std::string& s) {
  if (s == "arithmetic") return CheckKind::Arithmetic;
  if (s == "computed") return CheckKind::Computed;
  if (s == "table") return CheckKind::Table;
  if (s == "assumed") return CheckKind::Assumed;
  throw Error(ErrorCode::ParseError, "unknown check kind '" + s + "'");
}

std::string to_string(ConclusionKind k) {
  switch (k) {
    case ConclusionKind::RingEqualsZZetaP: return "RingEqualsZZeta_p";
    case ConclusionKind::AlgebraEqualsProductCyclotomic: return "AlgebraEqualsProductCyclotomic";
    case ConclusionKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

ConclusionKind conclusion_kind_from_string(const std::string& s) {
  if (s == "RingEqualsZZeta_p") return ConclusionKind::RingEqualsZZetaP;
  if (s == "AlgebraEqualsProductCyclotomic") return ConclusionKind::AlgebraEqualsProductCyclotomic;
  if (s == "Inconclusive") return ConclusionKind::Inconclusive;
  throw Error(ErrorCode::ParseError, "unknown conclusion kind '" + s + "'");
}

bool Certificate::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::optional<std::size_t> Certificate::first_failure() const {
  for (std::size_t i = 0; i < checks.size(); ++i)
    if (!checks[i].pass) return i;
  return std::nullopt;
}

void validate(const Scenario& s) {
  auto bad = [](const std::string& m) { throw Error(ErrorCode::InvalidScenario, m); };
  if (s.n < 5) bad("n = " + std::to_string(s.n) + " is below 5");
  if (s.p < 3 || !gf::is_prime(s.p)) bad("p = " + std::to_string(s.p) + " is not an odd prime");
  if (s.r == 0) bad("r must be at least 1");
  if (s.r > 6 || s.p > 100000) bad("q = p^r is too large");
  if (s.n % s.p == 0 && s.n % s.q() != 0)
    bad("p = " + std::to_string(s.p) + " divides n = " + std::to_string(s.n) + " but q = " + std::to_string(s.q()) + " does not");
  switch (s.source) {
    case GroupSource::Tag:
      if (s.tag.family == Family::Custom) bad("a tag scenario needs a named family");
      if (s.tag.degree() != s.n) bad("group " + s.tag.name() + " acts on " + std::to_string(s.tag.degree()) + " points, not n = " + std::to_string(s.n));
      break;
    case GroupSource::ConcreteGroup:
      if (!s.group) bad("concrete-group scenario without generators");
      if (s.group->degree() != s.n) bad("group degree " + std::to_string(s.group->degree()) + " differs from n = " + std::to_string(s.n));
      break;
    case GroupSource::PolynomialEvidence:
      if (!s.evidence) bad("polynomial scenario without evidence");
      if (s.evidence->n != s.n) bad("polynomial degree differs from n");
      break;
  }
}

namespace {

class Context {
 public:
  explicit Context(const Scenario& s) : s_(s) {
    if (s.source == GroupSource::PolynomialEvidence) {
      const auto& e = *s.evidence;
      if (e.conclusion == GaloisConclusion::ProvenSn ||
          (e.conclusion == GaloisConclusion::ProvenAnOrSn && e.disc_is_square == false))
        tag_ = GroupTag::symmetric(s.n);
      else if (e.conclusion == GaloisConclusion::ProvenAnOrSn)
        tag_ = GroupTag::alternating(s.n);
    } else if (s.tag.family != Family::Custom) {
      tag_ = s.tag;
    }
    if (s.group) group_ = s.group;
  }

  const Scenario& s() const { return s_; }
  const std::optional<GroupTag>& tag() const { return tag_; }
  Family family() const { return tag_ ? tag_->family : Family::Custom; }

  const PermGroup* group() {
    if (!group_ && !group_tried_ && tag_) {
      group_tried_ = true;
      if (auto g = concrete_group(*tag_)) group_ = std::make_shared<const PermGroup>(std::move(*g));
    }
    return group_.get();
  }

  BigInt order() {
    if (auto* g = group()) return g->order();
    return tag_ ? tag_->order() : BigInt(0);
  }

  const SimplicityVerdict& simplicity() {
    if (!simp_) {
      try {
        simp_ = decide_heart_simplicity(group(), tag_, s_.p, s_.seed);
      } catch (const Error& e) {
        SimplicityVerdict v;
        v.evidence.push_back({EvidenceKind::Computation, "simplicity undecided", e.what()});
        simp_ = v;
      }
    }
    return *simp_;
  }

 private:
  const Scenario& s_;
  std::optional<GroupTag> tag_;
  std::shared_ptr<const PermGroup> group_;
  bool group_tried_ = false;
  std::optional<SimplicityVerdict> simp_;
};

class Checklist {
 public:
  /// Records a check; returns whether evaluation may continue.
  bool add(std::string anchor, CheckKind kind, bool pass, std::string detail) {
    checks.push_back({std::move(anchor), kind, pass, std::move(detail)});
    return pass;
  }
  std::vector<HypothesisCheck> checks;
};

std::string num(std::uint64_t v) { return std::to_string(v); }

EndoConclusion conclusion_for(std::uint32_t p, std::uint32_t r) {
  EndoConclusion c;
  const std::uint64_t q = ipow(p, r);
  for (std::uint32_t i = 1; i <= r; ++i) c.fields.push_back("Q(ζ_" + num(ipow(p, i)) + ")");
  c.dimension = BigInt(q - 1);
  if (r == 1) {
    c.kind = ConclusionKind::RingEqualsZZetaP;
    c.ring = "Z[ζ_" + num(p) + "]";
  } else {
    c.kind = ConclusionKind::AlgebraEqualsProductCyclotomic;
  }
  return c;
}

bool check_zeta(Checklist& cl, Context& ctx) {
  const auto& s = ctx.s();
  const std::string root = s.r == 1 ? "p" : "q";
  const std::string anchor = "K contains a primitive " + root + "-th root of unity";
  const std::string qs = num(s.q());
  if (s.zeta_q_in_K) return cl.add(anchor, CheckKind::Assumed, true, "asserted for " + root + " = " + qs);
  if (ctx.tag() && ctx.tag()->is_simple_nonabelian())
    return cl.add(anchor, CheckKind::Table, true,
                  ctx.tag()->name() + " is simple nonabelian, so adjoining ζ_" + qs + " leaves the Galois group unchanged");
  return cl.add(anchor, CheckKind::Assumed, false, "not asserted for " + root + " = " + qs + " and the group is not known to be simple nonabelian");
}

bool check_doubly_transitive(Checklist& cl, Context& ctx) {
  const std::string anchor = "H acts doubly transitively on the n roots";
  if (const auto* g = ctx.group()) {
    const bool dt = g->is_doubly_transitive();
    return cl.add(anchor, CheckKind::Computed, dt,
                  std::string(dt ? "point stabilizer is transitive on the remaining " : "not doubly transitive on ") + num(g->degree() - (dt ? 1 : 0)) + " points");
  }
  if (ctx.family() == Family::PSU3)
    return cl.add(anchor, CheckKind::Table, true, ctx.tag()->name() + " acts doubly transitively on its " + num(ctx.tag()->degree()) + " isotropic points");
  return cl.add(anchor, CheckKind::Computed, false, "no concrete group available");
}

bool check_index(Checklist& cl, Context& ctx, std::uint64_t N) {
  const std::string anchor = "the index of every maximal subgroup of H does not divide " + num(N);
  try {
    auto res = exists_subgroup_of_index_dividing(ctx.group(), ctx.tag(), N);
    const CheckKind kind = res.method == IndexMethod::Enumeration ? CheckKind::Computed
                           : res.method == IndexMethod::Table     ? CheckKind::Table
                                                                  : CheckKind::Arithmetic;
    return cl.add(anchor, kind, !res.exists, res.witness);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    return cl.add(anchor, CheckKind::Computed, false, std::string("Unknown: ") + e.what());
  }
}

bool check_prime_to_order(Checklist& cl, Context& ctx) {
  const BigInt ord = ctx.order();
  const bool ok = ord % ctx.s().p != 0;
  return cl.add("p does not divide |H|", CheckKind::Arithmetic, ok,
                "|H| = " + ord.str() + (ok ? " is prime to p = " : " is divisible by p = ") + num(ctx.s().p));
}

struct RouteOutcome {
  std::string theorem;
  std::vector<HypothesisCheck> checks;
  std::vector<std::string> notes;
  bool passed = false;
};

using Route = std::function<std::optional<RouteOutcome>(Context&)>;

std::optional<RouteOutcome> route_alternating_symmetric(Context& ctx) {
  const auto& s = ctx.s();
  const bool poly = s.source == GroupSource::PolynomialEvidence;
  if (!poly && ctx.family() != Family::Symmetric && ctx.family() != Family::Alternating) return std::nullopt;
  RouteOutcome out;
  out.theorem = s.r == 1 ? "alternating-or-symmetric" : "alternating-or-symmetric-algebra";
  Checklist cl;
  bool ok = cl.add("f has degree n >= 5", CheckKind::Arithmetic, s.n >= 5, "n = " + num(s.n));
  if (ok) {
    if (poly) {
      const auto& e = *s.evidence;
      ok = cl.add("f is irreducible over K", CheckKind::Computed, e.irreducible_witness.has_value(),
                  e.irreducible_witness ? "f is irreducible mod " + num(*e.irreducible_witness) : "no prime with irreducible reduction found");
      if (ok) {
        const bool proven = ctx.tag().has_value();
        ok = cl.add("the Galois group of f is S_n or A_n", CheckKind::Computed, proven,
                    "probe conclusion " + to_string(e.conclusion) + (proven ? ", group " + ctx.tag()->name() : ""));
      }
    } else {
      ok = cl.add("f is irreducible over K", CheckKind::Assumed, true, ctx.tag()->name() + " is transitive on the roots");
      if (ok) ok = cl.add("the Galois group of f is S_n or A_n", CheckKind::Assumed, true, "group given as " + ctx.tag()->name());
    }
  }
  if (ok && s.r > 1)
    ok = cl.add("p does not divide n or q divides n", CheckKind::Arithmetic, s.n % s.p != 0 || s.n % s.q() == 0,
                "n = " + num(s.n) + ", q = " + num(s.q()));
  out.checks = std::move(cl.checks);
  out.passed = ok;
  return out;
}

std::optional<RouteOutcome> route_mathieu(Context& ctx) {
  const auto& s = ctx.s();
  if (ctx.family() != Family::Mathieu || s.r != 1) return std::nullopt;
  RouteOutcome out;
  out.theorem = "mathieu";
  Checklist cl;
  bool ok = cl.add("the Galois group is the Mathieu group M_n", CheckKind::Assumed, true, "group given as " + ctx.tag()->name());
  if (ok) ok = check_doubly_transitive(cl, ctx);
  if (ok)
    ok = cl.add("p > 3 when n = 11", CheckKind::Arithmetic, s.n != 11 || s.p > 3,
                s.n == 11 ? "n = 11, p = " + num(s.p) : "n = " + num(s.n) + ", no extra condition");
  out.checks = std::move(cl.checks);
  out.passed = ok;
  return out;
}

std::optional<RouteOutcome> route_psl2(Context& ctx) {
  const auto& s = ctx.s();
  if (ctx.family() != Family::PSL2 || s.r != 1) return std::nullopt;
  const auto& t = *ctx.tag();
  RouteOutcome out;
  out.theorem = "psl2-borel";
  Checklist cl;
  bool ok = cl.add("n = q + 1 for the field size q of L2(q)", CheckKind::Arithmetic, s.n == t.q + 1,
                   "n = " + num(s.n) + ", q = " + num(t.q));
  if (ok) ok = cl.add("q > 11", CheckKind::Arithmetic, t.q > 11, "q = " + num(t.q));
  if (ok)
    ok = cl.add("p differs from the characteristic of F_q, or q = p", CheckKind::Arithmetic, s.p != t.ell || t.q == s.p,
                "p = " + num(s.p) + ", q = " + num(t.ell) + "^" + num(t.r));
  if (ok) ok = check_doubly_transitive(cl, ctx);
  if (ok) {
    const BigInt borel = psl2_order(t.q) / (t.q + 1);
    const BigInt stab = ctx.order() / s.n;
    ok = cl.add("point stabilizers are Borel subgroups of index q + 1", CheckKind::Computed, stab == borel,
                "stabilizer order " + stab.str() + ", Borel order " + borel.str());
  }
  out.checks = std::move(cl.checks);
  out.passed = ok;
  return out;
}

std::optional<RouteOutcome> route_psu3(Context& ctx) {
  const auto& s = ctx.s();
  if (ctx.family() != Family::PSU3 || s.r != 1) return std::nullopt;
  const auto& t = *ctx.tag();
  RouteOutcome out;
  out.theorem = "psu3-borel";
  Checklist cl;
  bool ok = cl.add("n = q^3 + 1 for the field size q of U3(q)", CheckKind::Arithmetic, s.n == t.degree(),
                   "n = " + num(s.n) + ", q = " + num(t.q));
  if (ok) ok = cl.add("q is neither 2 nor 5", CheckKind::Arithmetic, t.q != 2 && t.q != 5, "q = " + num(t.q));
  if (ok) ok = cl.add("p differs from the characteristic of F_q", CheckKind::Arithmetic, s.p != t.ell, "p = " + num(s.p) + ", characteristic " + num(t.ell));
  if (ok) ok = cl.add("p does not divide q + 1", CheckKind::Arithmetic, (t.q + 1) % s.p != 0, "q + 1 = " + num(t.q + 1) + ", p = " + num(s.p));
  if (ok) ok = check_doubly_transitive(cl, ctx);
  if (ok)
    ok = cl.add("point stabilizers are Borel subgroups of index q^3 + 1", CheckKind::Table, true,
                "the stabilizer of an isotropic point in U3(" + num(t.q) + ") is a Borel subgroup");
  out.checks = std::move(cl.checks);
  out.passed = ok;
  return out;
}

std::optional<RouteOutcome> route_prime_to_order(Context& ctx) {
  const auto& s = ctx.s();
  RouteOutcome out;
  out.theorem = s.r == 1 ? "order-prime-to-p" : "order-prime-to-p-algebra";
  Checklist cl;
  bool ok = check_zeta(cl, ctx);
  if (ok) ok = check_doubly_transitive(cl, ctx);
  if (ok) ok = check_prime_to_order(cl, ctx);
  if (ok) ok = check_index(cl, ctx, s.n - 1);
  out.checks = std::move(cl.checks);
  out.passed = ok;
  return out;
}

bool side_condition_p(std::uint32_t n, std::uint32_t p) { return n == p + 1 || (n - 1) % p != 0; }

bool side_condition_q(std::uint32_t n, std::uint32_t p, std::uint64_t q) {
  return (n % p != 0 && (n - 1) % q != 0) || n == q + 1 || n % q == 0;
}

RouteOutcome generic_route(Context& ctx, const PermGroup* H) {
  const auto& s = ctx.s();
  RouteOutcome out;
  out.theorem = s.r == 1 ? "central-simple-heart" : "central-simple-heart-algebra";
  Checklist cl;
  const std::uint64_t N = heart_dimension(s.n, s.p);
  bool ok = check_zeta(cl, ctx);
  if (ok) {
    if (H) {
      const bool dt = H->is_doubly_transitive();
      ok = cl.add("H acts doubly transitively on the n roots", CheckKind::Computed, dt, dt ? "verified on the concrete group" : "not doubly transitive");
    } else {
      ok = check_doubly_transitive(cl, ctx);
    }
  }
  const SimplicityVerdict* sv = nullptr;
  if (ok) {
    sv = &ctx.simplicity();
    const bool abs = sv->at_least(SimplicityLevel::AbsolutelySimple);
    const bool computed = !sv->evidence.empty() && sv->evidence.front().kind == EvidenceKind::Computation;
    std::string detail = "heart of dimension " + num(N) + ": " + to_string(sv->level);
    if (!sv->evidence.empty()) detail += " (" + sv->evidence.front().detail + ")";
    ok = cl.add("the heart is an absolutely irreducible H-module", computed ? CheckKind::Computed : CheckKind::Table, abs, detail);
  }
  if (ok) ok = check_index(cl, ctx, N);
  if (ok) {
    const bool very = sv->level == SimplicityLevel::VerySimple;
    std::string anchor, detail;
    bool side;
    if (s.r == 1) {
      anchor = "n = p + 1, or n - 1 is not divisible by p, or the heart is very simple";
      side = side_condition_p(s.n, s.p);
      detail = "n = " + num(s.n) + ", p = " + num(s.p);
    } else {
      anchor = "p does not divide n and q does not divide n - 1, or n = q + 1, or q divides n, or the heart is very simple";
      side = side_condition_q(s.n, s.p, s.q());
      detail = "n = " + num(s.n) + ", q = " + num(s.q());
      if (side != side_condition_p(s.n, s.p))
        out.notes.push_back("the side condition stated with p instead of q would " + std::string(side ? "fail" : "hold") +
                            " here; the q form is used");
    }
    if (side)
      detail += ": arithmetic condition holds";
    else if (very)
      detail += ": arithmetic condition fails, heart is very simple (" + sv->evidence.back().detail + ")";
    else
      detail += ": arithmetic condition fails and very simplicity is not established";
    ok = cl.add(anchor, side ? CheckKind::Arithmetic : (very ? CheckKind::Table : CheckKind::Arithmetic), side || very, detail);
  }
  out.checks = std::move(cl.checks);
  out.passed = ok;
  return out;
}

std::optional<RouteOutcome> route_generic(Context& ctx) { return generic_route(ctx, nullptr); }

}  // namespace

std::vector<HypothesisCheck> check_generic_route(const Scenario& s, const PermGroup& H) {
  validate(s);
  Scenario copy = s;
  copy.source = GroupSource::ConcreteGroup;
  copy.group = std::make_shared<const PermGroup>(H);
  Context ctx(copy);
  return generic_route(ctx, &H).checks;
}

Certificate dispatch(const Scenario& s) {
  validate(s);
  Context ctx(s);
  const std::vector<Route> routes{route_alternating_symmetric, route_mathieu, route_psl2, route_psu3,
                                  route_prime_to_order, route_generic};
  std::optional<RouteOutcome> first_applicable;
  std::optional<RouteOutcome> winner;
  std::vector<std::string> skipped;
  for (const auto& route : routes) {
    auto res = route(ctx);
    if (!res) continue;
    if (!first_applicable) first_applicable = *res;
    if (res->passed) {
      winner = std::move(res);
      break;
    }
    skipped.push_back("route " + res->theorem + " fails at: " + res->checks.back().anchor);
  }
  Certificate c;
  c.n = s.n;
  c.p = s.p;
  c.r = s.r;
  c.group = s.group_label.empty() ? (ctx.tag() ? ctx.tag()->name() : "Custom") : s.group_label;
  const RouteOutcome& chosen = winner ? *winner : *first_applicable;
  c.theorem = chosen.theorem;
  c.checks = chosen.checks;
  c.notes = skipped;
  if (!winner && !skipped.empty()) c.notes.erase(c.notes.begin());
  c.notes.insert(c.notes.end(), chosen.notes.begin(), chosen.notes.end());
  if (winner && c.all_checks_pass()) {
    c.conclusion = conclusion_for(s.p, s.r);
  } else {
    c.conclusion.kind = ConclusionKind::Inconclusive;
  }
  return c;
}

std::string explain(const Certificate& c) {
  std::ostringstream os;
  os << "theorem: " << c.theorem << '\n';
  os << "scenario: n=" << c.n << " p=" << c.p << " r=" << c.r << " group=" << c.group << '\n';
  os << "hypotheses:\n";
  for (std::size_t i = 0; i < c.checks.size(); ++i) {
    const auto& h = c.checks[i];
    os << "  [" << i + 1 << "] " << (h.pass ? "PASS" : "FAIL") << " (" << to_string(h.kind) << ") " << h.anchor;
    if (!h.detail.empty()) os << ": " << h.detail;
    os << '\n';
  }
  if (!c.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : c.notes) os << "  - " << n << '\n';
  }
  os << "conclusion: ";
  switch (c.conclusion.kind) {
    case ConclusionKind::RingEqualsZZetaP:
      os << "End(J) = " << c.conclusion.ring;
      break;
    case ConclusionKind::AlgebraEqualsProductCyclotomic: {
      os << "End^0(J) = ";
      for (std::size_t i = 0; i < c.conclusion.fields.size(); ++i) os << (i ? " x " : "") << c.conclusion.fields[i];
      break;
    }
    case ConclusionKind::Inconclusive: {
      os << "Inconclusive";
      if (auto f = c.first_failure()) os << "; first failed hypothesis: " << c.checks[*f].anchor;
      break;
    }
  }
  if (c.conclusion.dimension) os << ", dimension " << *c.conclusion.dimension << " over Q";
  os << '\n';
  return os.str();
}

}  // namespace heartproof
