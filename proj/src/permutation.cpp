#include "heartproof/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "heartproof/error.hpp"

namespace heartproof {

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw Error(ErrorCode::InvalidPermutation, "images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, std::string_view text) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',' || text[i] == '\r')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw Error(ErrorCode::ParseError, "unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw Error(ErrorCode::ParseError, "bad character in cycle: " + std::string(text));
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v >= n) throw Error(ErrorCode::InvalidPermutation, "point " + std::to_string(v) + " out of range");
        ++i;
      }
      if (used[v]) throw Error(ErrorCode::InvalidPermutation, "point " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.img_.size() != img_.size()) throw Error(ErrorCode::InvalidPermutation, "degree mismatch in product");
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[rhs.img_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<std::uint32_t>(x);
  return r;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  Permutation r = identity(img_.size());
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t r = 1;
  for (auto len : cycle_type()) r = std::lcm(r, static_cast<std::uint64_t>(len));
  return r;
}

std::vector<std::uint32_t> Permutation::cycle_type() const {
  std::vector<std::uint32_t> lens;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    std::uint32_t len = 0;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::size_t Permutation::fixed_points() const noexcept {
  std::size_t c = 0;
  for (std::size_t x = 0; x < img_.size(); ++x) c += img_[x] == x;
  return c;
}

std::uint32_t Permutation::first_moved() const noexcept {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return static_cast<std::uint32_t>(x);
  return static_cast<std::uint32_t>(img_.size());
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    os << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      if (!first) os << ' ';
      first = false;
      os << y;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

GeneratorSet parse_generator_file(std::string_view text) {
  std::vector<std::string> cycle_lines;
  std::size_t declared = 0;
  std::size_t max_point = 0;
  bool any_point = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line.rfind("degree", 0) == 0) {
      try {
        declared = std::stoul(line.substr(6));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad degree line");
      }
      continue;
    }
    std::size_t v = 0;
    bool in_num = false;
    for (char c : line) {
      if (c >= '0' && c <= '9') {
        v = (in_num ? v * 10 : 0) + static_cast<std::size_t>(c - '0');
        in_num = true;
        max_point = std::max(max_point, v);
        any_point = true;
      } else {
        in_num = false;
      }
    }
    cycle_lines.push_back(line);
  }
  GeneratorSet out;
  out.degree = declared ? declared : (any_point ? max_point + 1 : 0);
  if (cycle_lines.empty()) throw Error(ErrorCode::ParseError, "group file has no generators");
  for (const auto& l : cycle_lines) out.generators.push_back(Permutation::from_cycles(out.degree, l));
  return out;
}

}  // namespace heartproof
