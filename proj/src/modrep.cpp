#include "heartproof/modrep.hpp"

#include <sstream>

#include "heartproof/error.hpp"

namespace heartproof {

using gf::Matrix;
using gf::PrimeField;
using gf::Vec;

GModule::GModule(const PrimeField& field, std::size_t dim, std::vector<Matrix> generators,
                 std::shared_ptr<const PermGroup> group)
    : field_(field), dim_(dim), gens_(std::move(generators)), group_(std::move(group)) {
  for (const auto& g : gens_) {
    if (g.rows() != dim_ || g.cols() != dim_ || !(g.field() == field_))
      throw Error(ErrorCode::InvalidField, "generator matrix has the wrong shape or field");
    auto inv = gf::inverse(g);
    if (!inv) throw Error(ErrorCode::InvalidField, "generator matrix is singular");
    inverses_.push_back(std::move(*inv));
  }
}

Matrix GModule::word_image(const std::vector<int>& word) const {
  Matrix r = Matrix::identity(field_, dim_);
  for (int k : word) r = r * (k >= 0 ? gens_.at(static_cast<std::size_t>(k)) : inverses_.at(static_cast<std::size_t>(-k - 1)));
  return r;
}

std::string GModule::dump() const {
  std::ostringstream os;
  os << field_.p() << ' ' << dim_ << ' ' << gens_.size() << '\n';
  for (const auto& g : gens_) {
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) os << (c ? " " : "") << g(r, c);
      os << '\n';
    }
  }
  return os.str();
}

Matrix permutation_matrix(const PrimeField& field, const Permutation& g) {
  const std::size_t n = g.degree();
  Matrix m(field, n, n);
  for (std::uint32_t i = 0; i < n; ++i) m(g(i), i) = 1;
  return m;
}

std::size_t heart_dimension(std::size_t n, std::uint32_t p) { return n % p == 0 ? n - 2 : n - 1; }

Matrix heart_matrix(const PrimeField& field, const Permutation& g) {
  const std::size_t n = g.degree();
  if (n < 3) throw Error(ErrorCode::UnsupportedDegree, "heart needs at least 3 points");
  const std::uint32_t p = field.p();
  const std::size_t last = n - 1;
  Matrix hyper(field, n - 1, n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) {
    // g(e_i - e_last) = e_{g(i)} - e_{g(last)}
    std::size_t a = g(static_cast<std::uint32_t>(i)), b = g(static_cast<std::uint32_t>(last));
    if (a != last) hyper(a, i) = field.add(hyper(a, i), 1);
    if (b != last) hyper(b, i) = field.sub(hyper(b, i), 1);
  }
  if (n % p != 0) return hyper;
  const std::size_t d = n - 2;
  Matrix q(field, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) q(j, i) = field.sub(hyper(j, i), hyper(d, i));
  return q;
}

GModule permutation_module(const PermGroup& G, std::uint32_t p) {
  PrimeField F(p);
  std::vector<Matrix> gens;
  for (const auto& g : G.generators()) gens.push_back(permutation_matrix(F, g));
  return GModule(F, G.degree(), std::move(gens), std::make_shared<const PermGroup>(G));
}

HeartModule heart(const PermGroup& G, std::uint32_t p) {
  PrimeField F(p);
  std::vector<Matrix> gens;
  for (const auto& g : G.generators()) gens.push_back(heart_matrix(F, g));
  const std::size_t n = G.degree();
  return HeartModule{GModule(F, heart_dimension(n, p), std::move(gens), std::make_shared<const PermGroup>(G)), n,
                     n % p == 0 ? HeartKind::Quotient : HeartKind::FullHyperplane};
}

GModule trivial_module(const PrimeField& field, std::size_t num_generators, std::size_t dim) {
  return GModule(field, dim, std::vector<Matrix>(num_generators, Matrix::identity(field, dim)));
}

namespace {

void require_compatible(const GModule& a, const GModule& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::GroupMismatch, "modules over different fields");
  if (a.num_generators() != b.num_generators()) throw Error(ErrorCode::GroupMismatch, "generator counts differ");
  if (a.group() && b.group() && a.group() != b.group() && a.group()->generators() != b.group()->generators())
    throw Error(ErrorCode::GroupMismatch, "modules of different groups");
}

std::shared_ptr<const PermGroup> shared_group(const GModule& a, const GModule& b) {
  return a.group() ? a.group() : b.group();
}

Matrix from_flat(const PrimeField& F, std::size_t rows, std::size_t cols, const Vec& v) {
  return Matrix(F, rows, cols, Vec(v.begin(), v.end()));
}

}  // namespace

GModule tensor(const GModule& a, const GModule& b) {
  require_compatible(a, b);
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < a.num_generators(); ++k) gens.push_back(gf::kronecker(a.generators()[k], b.generators()[k]));
  return GModule(a.field(), a.dim() * b.dim(), std::move(gens), shared_group(a, b));
}

GModule direct_sum(const GModule& a, const GModule& b) {
  require_compatible(a, b);
  const std::size_t d = a.dim() + b.dim();
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < a.num_generators(); ++k) {
    Matrix m(a.field(), d, d);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.generators()[k](i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.generators()[k](i, j);
    gens.push_back(std::move(m));
  }
  return GModule(a.field(), d, std::move(gens), shared_group(a, b));
}

std::vector<Matrix> hom_basis(const GModule& a, const GModule& b) {
  require_compatible(a, b);
  const PrimeField& F = a.field();
  const std::size_t d1 = a.dim(), d2 = b.dim();
  const std::size_t vars = d1 * d2;  // X(i, j) -> i * d1 + j, X is d2 x d1
  Matrix sys(F, a.num_generators() * vars, vars);
  std::size_t row = 0;
  for (std::size_t k = 0; k < a.num_generators(); ++k) {
    const Matrix& A = a.generators()[k];
    const Matrix& B = b.generators()[k];
    // (X A - B X)(i, j) = sum_l X(i,l) A(l,j) - B(i,l) X(l,j)
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t j = 0; j < d1; ++j, ++row) {
        for (std::size_t l = 0; l < d1; ++l) {
          auto& c = sys(row, i * d1 + l);
          c = F.add(c, A(l, j));
        }
        for (std::size_t l = 0; l < d2; ++l) {
          auto& c = sys(row, l * d1 + j);
          c = F.sub(c, B(i, l));
        }
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : gf::kernel_basis(sys)) out.push_back(from_flat(F, d2, d1, v));
  return out;
}

std::vector<Matrix> commutant_basis(const GModule& m) { return hom_basis(m, m); }

std::size_t commutant_dim(const GModule& m) { return commutant_basis(m).size(); }

bool is_intertwiner(const Matrix& X, const GModule& a, const GModule& b) {
  if (X.rows() != b.dim() || X.cols() != a.dim()) return false;
  for (std::size_t k = 0; k < a.num_generators(); ++k)
    if (!(X * a.generators()[k] == b.generators()[k] * X)) return false;
  return true;
}

std::optional<Matrix> module_iso(const GModule& a, const GModule& b, std::uint64_t seed) {
  if (a.dim() != b.dim()) return std::nullopt;
  require_compatible(a, b);
  auto basis = hom_basis(a, b);
  if (basis.empty()) return std::nullopt;
  for (const auto& X : basis)
    if (gf::inverse(X)) return X;
  std::mt19937_64 rng(seed);
  const std::uint32_t p = a.p();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix X(a.field(), b.dim(), a.dim());
    for (const auto& B : basis) X = X + B.scaled(static_cast<gf::Elem>(rng() % p));
    if (gf::inverse(X)) return X;
  }
  return std::nullopt;
}

gf::SubspaceBasis spin(const std::vector<Matrix>& gens, const std::vector<Vec>& seeds) {
  if (gens.empty() && seeds.empty()) throw Error(ErrorCode::InvalidField, "spin needs a generator or a seed");
  const std::size_t d = gens.empty() ? seeds.front().size() : gens.front().cols();
  const PrimeField F = gens.empty() ? PrimeField(3) : gens.front().field();
  gf::SubspaceBasis sub(F, d);
  std::vector<Vec> queue;
  for (const auto& s : seeds)
    if (sub.insert(s)) queue.push_back(s);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Vec w = g.apply(queue[i]);
      if (sub.insert(w)) queue.push_back(std::move(w));
    }
  }
  return sub;
}

bool is_invariant_subspace(const GModule& m, const std::vector<Vec>& basis) {
  gf::SubspaceBasis sub(m.field(), m.dim());
  for (const auto& v : basis) sub.insert(v);
  for (const auto& g : m.generators())
    for (const auto& v : basis)
      if (!sub.contains(g.apply(v))) return false;
  return true;
}

}  // namespace heartproof
