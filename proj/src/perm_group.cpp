#include "heartproof/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "heartproof/error.hpp"

namespace heartproof {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), [degree] {
        std::vector<std::uint32_t> b(degree);
        std::iota(b.begin(), b.end(), 0u);
        return b;
      }()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<std::uint32_t> base_order)
    : n_(degree), gens_(std::move(generators)), base_(std::move(base_order)) {
  if (gens_.empty()) gens_.push_back(Permutation::identity(n_));
  for (const auto& g : gens_)
    if (g.degree() != n_) throw Error(ErrorCode::InvalidPermutation, "generator degree differs from group degree");
  if (base_.size() != n_) throw Error(ErrorCode::InvalidPermutation, "base ordering must list every point");
  Permutation(std::vector<std::uint32_t>(base_));  // validates the ordering
  build();
}

void PermGroup::build() {
  levels_.clear();
  for (auto b : base_) {
    Level lv;
    lv.point = b;
    lv.rep_index.assign(n_, -1);
    lv.rep_index[b] = 0;
    lv.reps.push_back(Permutation::identity(n_));
    lv.orbit.push_back(b);
    levels_.push_back(std::move(lv));
  }
  for (const auto& g : gens_) insert(0, g);
  order_ = 1;
  for (const auto& lv : levels_) order_ *= lv.orbit.size();
}

bool PermGroup::sift_from(std::size_t k, Permutation g) const {
  for (; k < levels_.size(); ++k) {
    const auto& lv = levels_[k];
    auto idx = lv.rep_index[g(lv.point)];
    if (idx < 0) return false;
    g = lv.reps[static_cast<std::size_t>(idx)].inverse() * g;
  }
  return g.is_identity();
}

void PermGroup::insert(std::size_t k, const Permutation& g) {
  if (k >= levels_.size() || sift_from(k, g)) return;
  auto& lv = levels_[k];
  lv.strong.push_back(g);
  std::vector<Permutation> reps = lv.reps;
  for (const auto& u : reps) extend_orbit(k, g * u);
}

void PermGroup::extend_orbit(std::size_t k, const Permutation& u) {
  auto& lv = levels_[k];
  std::uint32_t y = u(lv.point);
  auto idx = lv.rep_index[y];
  if (idx >= 0) {
    insert(k + 1, levels_[k].reps[static_cast<std::size_t>(idx)].inverse() * u);
    return;
  }
  lv.rep_index[y] = static_cast<std::int32_t>(lv.reps.size());
  lv.reps.push_back(u);
  lv.orbit.push_back(y);
  std::vector<Permutation> strong = levels_[k].strong;
  for (const auto& s : strong) extend_orbit(k, s * u);
}

std::uint64_t PermGroup::order_u64() const {
  if (order_ > BigInt(std::numeric_limits<std::int64_t>::max())) throw Error(ErrorCode::TooLarge, "group order exceeds 64 bits");
  return static_cast<std::uint64_t>(order_);
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != n_) return false;
  return sift_from(0, g);
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(n_);
  for (const auto& lv : levels_) g = g * lv.reps[rng() % lv.reps.size()];
  return g;
}

std::uint64_t PermGroup::rank(const Permutation& g_in) const {
  Permutation g = g_in;
  std::uint64_t r = 0;
  for (const auto& lv : levels_) {
    auto idx = lv.rep_index[g(lv.point)];
    if (idx < 0) throw Error(ErrorCode::NotSubgroup, "element is not in the group");
    r = r * lv.reps.size() + static_cast<std::uint64_t>(idx);
    g = lv.reps[static_cast<std::size_t>(idx)].inverse() * g;
  }
  if (!g.is_identity()) throw Error(ErrorCode::NotSubgroup, "element is not in the group");
  return r;
}

Permutation PermGroup::unrank(std::uint64_t index) const {
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t k = levels_.size(); k-- > 0;) {
    digits[k] = index % levels_[k].reps.size();
    index /= levels_[k].reps.size();
  }
  Permutation g = Permutation::identity(n_);
  for (std::size_t k = 0; k < levels_.size(); ++k) g = g * levels_[k].reps[digits[k]];
  return g;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  if (order_ > limit) throw Error(ErrorCode::TooLarge, "group of order " + order_.str() + " is too large to enumerate");
  std::vector<Permutation> out{Permutation::identity(n_)};
  for (std::size_t k = levels_.size(); k-- > 0;) {
    if (levels_[k].reps.size() == 1) continue;
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[k].reps.size());
    for (const auto& u : levels_[k].reps)
      for (const auto& h : out) next.push_back(u * h);
    out = std::move(next);
  }
  std::vector<std::pair<std::uint64_t, Permutation>> ranked;
  ranked.reserve(out.size());
  for (auto& g : out) ranked.emplace_back(rank(g), std::move(g));
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [r, g] : ranked) out.push_back(std::move(g));
  return out;
}

std::vector<std::vector<std::uint32_t>> orbits_of(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> orb{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : gens) {
        auto y = g(orb[i]);
        if (!seen[y]) {
          seen[y] = true;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const { return orbits_of(n_, gens_); }

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
  for (auto& o : orbits())
    if (std::binary_search(o.begin(), o.end(), point)) return o;
  return {point};
}

bool PermGroup::is_transitive() const { return n_ <= 1 || orbits().size() == 1; }

bool PermGroup::is_doubly_transitive() const {
  if (n_ < 2 || !is_transitive()) return false;
  auto stab = stabilizer_generators(base_.front());
  auto orbs = orbits_of(n_, stab);
  // One orbit is the fixed base point itself.
  return orbs.size() == 2;
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::uint32_t point) const {
  if (point == base_.front()) {
    std::vector<Permutation> out;
    for (std::size_t k = 1; k < levels_.size(); ++k)
      for (const auto& s : levels_[k].strong) out.push_back(s);
    if (out.empty()) out.push_back(Permutation::identity(n_));
    return out;
  }
  std::vector<std::uint32_t> b(base_);
  auto it = std::find(b.begin(), b.end(), point);
  std::rotate(b.begin(), it, it + 1);
  return PermGroup(n_, gens_, b).stabilizer_generators(point);
}

PermGroup PermGroup::point_stabilizer() const {
  return PermGroup(n_, stabilizer_generators(base_.front()), base_);
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

}  // namespace heartproof
