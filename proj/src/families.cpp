#include "heartproof/families.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "heartproof/error.hpp"
#include "heartproof/ext_field.hpp"
#include "heartproof/gf.hpp"

namespace heartproof {

namespace detail {
extern const char* const kMathieuGenerators;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t ell = 2; ell * ell <= q; ++ell) {
    if (q % ell) continue;
    std::uint32_t r = 0;
    while (q % ell == 0) {
      q /= ell;
      ++r;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(ell), r);
  }
  return std::make_pair(static_cast<std::uint32_t>(q), 1u);
}

GroupTag GroupTag::mathieu(std::uint32_t n) {
  if (n != 11 && n != 12 && n != 22 && n != 23 && n != 24)
    throw Error(ErrorCode::UnsupportedDegree, "no Mathieu group of degree " + std::to_string(n));
  return {Family::Mathieu, n, 0, 0, 0};
}

GroupTag GroupTag::psl2(std::uint32_t ell, std::uint32_t r) {
  if (!gf::is_prime(ell)) throw Error(ErrorCode::InvalidField, std::to_string(ell) + " is not prime");
  if (r == 0) throw Error(ErrorCode::InvalidField, "extension degree must be positive");
  return {Family::PSL2, 0, ell, r, static_cast<std::uint32_t>(ipow(ell, r))};
}

GroupTag GroupTag::psu3(std::uint32_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorCode::InvalidField, std::to_string(q) + " is not a prime power");
  return {Family::PSU3, 0, pp->first, pp->second, q};
}

GroupTag GroupTag::parse(const std::string& text, std::uint32_t n) {
  auto number = [&](const std::string& s) -> std::uint32_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad group tag '" + text + "'");
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  auto paren = [&](std::size_t prefix) {
    if (text.size() < prefix + 3 || text[prefix] != '(' || text.back() != ')')
      throw Error(ErrorCode::ParseError, "bad group tag '" + text + "'");
    return number(text.substr(prefix + 1, text.size() - prefix - 2));
  };
  if (text == "Custom" || text == "custom") return custom();
  if (text.rfind("L2", 0) == 0) {
    auto q = paren(2);
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorCode::InvalidField, std::to_string(q) + " is not a prime power");
    return psl2(pp->first, pp->second);
  }
  if (text.rfind("U3", 0) == 0) return psu3(paren(2));
  if (text == "S" || text == "A") {
    if (n == 0) throw Error(ErrorCode::ParseError, "tag '" + text + "' needs a degree");
    return text == "S" ? symmetric(n) : alternating(n);
  }
  if (text.size() >= 2 && (text[0] == 'S' || text[0] == 'A' || text[0] == 'M')) {
    auto d = number(text.substr(1));
    if (text[0] == 'M') return mathieu(d);
    return text[0] == 'S' ? symmetric(d) : alternating(d);
  }
  throw Error(ErrorCode::ParseError, "unknown group tag '" + text + "'");
}

std::uint32_t GroupTag::degree() const {
  switch (family) {
    case Family::Symmetric:
    case Family::Alternating:
    case Family::Mathieu: return n;
    case Family::PSL2: return q + 1;
    case Family::PSU3: return q * q * q + 1;
    case Family::Custom: return 0;
  }
  return 0;
}

BigInt GroupTag::order() const {
  switch (family) {
    case Family::Symmetric: return factorial(n);
    case Family::Alternating: return factorial(n) / 2;
    case Family::Mathieu: {
      static const std::map<std::uint32_t, std::uint64_t> orders{
          {11, 7920}, {12, 95040}, {22, 443520}, {23, 10200960}, {24, 244823040}};
      return orders.at(n);
    }
    case Family::PSL2: return psl2_order(q);
    case Family::PSU3: return psu3_order(q);
    case Family::Custom: return 0;
  }
  return 0;
}

std::string GroupTag::name() const {
  switch (family) {
    case Family::Symmetric: return "S" + std::to_string(n);
    case Family::Alternating: return "A" + std::to_string(n);
    case Family::Mathieu: return "M" + std::to_string(n);
    case Family::PSL2: return "L2(" + std::to_string(q) + ")";
    case Family::PSU3: return "U3(" + std::to_string(q) + ")";
    case Family::Custom: return "Custom";
  }
  return "Custom";
}

bool GroupTag::is_simple_nonabelian() const {
  switch (family) {
    case Family::Symmetric: return false;
    case Family::Alternating: return n >= 5;
    case Family::Mathieu: return true;
    case Family::PSL2: return q >= 4;
    case Family::PSU3: return q >= 3;
    case Family::Custom: return false;
  }
  return false;
}

PermGroup symmetric_group(std::uint32_t n) {
  if (n <= 1) return PermGroup(n, {Permutation::identity(n)});
  std::vector<std::uint32_t> cyc(n), tr(n);
  std::iota(tr.begin(), tr.end(), 0u);
  for (std::uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::swap(tr[0], tr[1]);
  return PermGroup(n, {Permutation(cyc), Permutation(tr)});
}

PermGroup alternating_group(std::uint32_t n) {
  if (n <= 2) return PermGroup(n, {Permutation::identity(n)});
  // 3-cycles (0 1 i) generate A_n.
  std::vector<Permutation> gens;
  for (std::uint32_t i = 2; i < n; ++i) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    img[0] = 1;
    img[1] = i;
    img[i] = 0;
    gens.emplace_back(img);
  }
  return PermGroup(n, gens);
}

PermGroup cyclic_group(std::uint32_t n) {
  std::vector<std::uint32_t> cyc(n);
  for (std::uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(cyc)});
}

PermGroup mathieu_group(std::uint32_t n) {
  GroupTag::mathieu(n);
  const std::string key = "M" + std::to_string(n);
  std::istringstream in(detail::kMathieuGenerators);
  std::string line;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name;
    std::size_t degree = 0;
    ls >> name >> degree;
    if (name != key) continue;
    std::string rest;
    std::getline(ls, rest);
    gens.push_back(Permutation::from_cycles(degree, rest));
  }
  if (gens.empty()) throw Error(ErrorCode::UnsupportedDegree, "no generator data for " + key);
  return PermGroup(n, gens);
}

PermGroup psl2_group(std::uint32_t ell, std::uint32_t r) {
  gf::ExtField F(ell, r);
  const std::uint32_t q = F.order();
  if (q < 4) throw Error(ErrorCode::InvalidField, "PSL(2,q) needs q >= 4");
  const std::uint32_t inf = q;
  const std::uint32_t w2 = F.mul(F.primitive_element(), F.primitive_element());
  std::vector<std::uint32_t> translate(q + 1), scale(q + 1), invert(q + 1);
  for (std::uint32_t z = 0; z < q; ++z) {
    translate[z] = F.add(z, 1);
    scale[z] = F.mul(w2, z);
    invert[z] = z == 0 ? inf : F.neg(F.inv(z));
  }
  translate[inf] = inf;
  scale[inf] = inf;
  invert[inf] = 0;
  return PermGroup(q + 1, {Permutation(translate), Permutation(scale), Permutation(invert)});
}

std::optional<PermGroup> concrete_group(const GroupTag& tag) {
  switch (tag.family) {
    case Family::Symmetric: return symmetric_group(tag.n);
    case Family::Alternating: return alternating_group(tag.n);
    case Family::Mathieu: return mathieu_group(tag.n);
    case Family::PSL2: return psl2_group(tag.ell, tag.r);
    default: return std::nullopt;
  }
}

BigInt psl2_order(std::uint64_t q) {
  BigInt Q = q;
  return Q * (Q * Q - 1) / std::gcd<std::uint64_t>(2, q - 1);
}

BigInt pgl2_order(std::uint64_t q) {
  BigInt Q = q;
  return Q * (Q * Q - 1);
}

BigInt psl3_order(std::uint64_t q) {
  BigInt Q = q;
  return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q - 1) / std::gcd<std::uint64_t>(3, q - 1);
}

BigInt psu3_order(std::uint64_t q) {
  BigInt Q = q;
  return Q * Q * Q * (Q * Q * Q + 1) * (Q * Q - 1) / std::gcd<std::uint64_t>(3, q + 1);
}

std::optional<MinIndexFact> min_index_fact(const GroupTag& tag) {
  switch (tag.family) {
    case Family::Alternating:
      if (tag.n < 5) return std::nullopt;
      return MinIndexFact{tag.n, false, "every proper subgroup of A" + std::to_string(tag.n) + " has index at least " + std::to_string(tag.n)};
    case Family::Symmetric:
      if (tag.n < 5) return std::nullopt;
      return MinIndexFact{tag.n, true,
                          "the only proper subgroup of S" + std::to_string(tag.n) + " of index below " + std::to_string(tag.n) + " is A" + std::to_string(tag.n) + " (index 2)"};
    case Family::Mathieu:
      return MinIndexFact{tag.n, false, "the minimal index of a proper subgroup of M" + std::to_string(tag.n) + " is " + std::to_string(tag.n)};
    case Family::PSL2:
      if (tag.q <= 11) return std::nullopt;
      return MinIndexFact{tag.q + 1, false, "every proper subgroup of L2(" + std::to_string(tag.q) + ") has index at least " + std::to_string(tag.q + 1)};
    case Family::PSU3: {
      if (tag.q == 2 || tag.q == 5) return std::nullopt;
      BigInt bound = BigInt(tag.q) * tag.q * tag.q + 1;
      return MinIndexFact{bound, false, "every proper subgroup of U3(" + std::to_string(tag.q) + ") has index at least " + bound.str()};
    }
    default: return std::nullopt;
  }
}

}  // namespace heartproof
