#include "schurlab/colligation.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "schurlab/errors.hpp"

namespace schurlab {

namespace {

std::string shape(const CMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("structure: cannot read " + std::string(what) + " from '" +
                     std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string_view to_string(DomainKind kind) {
  return kind == DomainKind::polydisk ? "polydisk" : "ball";
}

DomainStructure DomainStructure::polydisk(std::vector<std::size_t> block_dims) {
  if (block_dims.empty()) throw InvalidInput("polydisk structure needs at least one block");
  for (std::size_t dim : block_dims)
    if (dim == 0) throw InvalidInput("polydisk block dimensions must be positive");
  DomainStructure s;
  s.kind_ = DomainKind::polydisk;
  s.arity_ = block_dims.size();
  s.block_dims_ = std::move(block_dims);
  return s;
}

DomainStructure DomainStructure::ball(std::size_t fiber_dim, std::size_t copies) {
  if (fiber_dim == 0 || copies == 0)
    throw InvalidInput("ball structure needs positive fiber dimension and copy count");
  DomainStructure s;
  s.kind_ = DomainKind::ball;
  s.arity_ = copies;
  s.fiber_dim_ = fiber_dim;
  return s;
}

DomainStructure DomainStructure::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("structure '" + std::string(spec) + "': expected <kind>:<dims>");
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (kind == "polydisk") {
    std::vector<std::size_t> dims;
    for (auto part : split(rest, ',')) dims.push_back(parse_count(part, "block dimension"));
    return polydisk(std::move(dims));
  }
  if (kind == "ball") {
    std::size_t m = 0, d = 0;
    for (auto part : split(rest, ',')) {
      if (part.starts_with("m="))
        m = parse_count(part.substr(2), "fiber dimension m");
      else if (part.starts_with("d="))
        d = parse_count(part.substr(2), "copy count d");
      else
        throw ParseError("structure '" + std::string(spec) + "': expected m=<count>,d=<count>");
    }
    return ball(m, d);
  }
  throw ParseError("structure '" + std::string(spec) + "': unknown kind '" + std::string(kind) + "'");
}

std::string DomainStructure::to_string() const {
  if (kind_ == DomainKind::ball)
    return "ball:m=" + std::to_string(fiber_dim_) + ",d=" + std::to_string(arity_);
  std::string s = "polydisk:";
  for (std::size_t j = 0; j < block_dims_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(block_dims_[j]);
  }
  return s;
}

std::size_t DomainStructure::dim_h() const noexcept {
  if (kind_ == DomainKind::ball) return fiber_dim_;
  return std::accumulate(block_dims_.begin(), block_dims_.end(), std::size_t{0});
}

std::size_t DomainStructure::dim_k() const noexcept {
  return kind_ == DomainKind::ball ? fiber_dim_ * arity_ : dim_h();
}

std::size_t DomainStructure::input_dim(std::size_t dim_g) const noexcept {
  return dim_k() + dim_g - dim_h();
}

CMatrix DomainStructure::projection(std::size_t j) const {
  if (j >= arity_)
    throw InvalidIndex("projection index " + std::to_string(j) + " outside [0," +
                       std::to_string(arity_) + ")");
  const auto h = static_cast<Eigen::Index>(dim_h());
  const auto k = static_cast<Eigen::Index>(dim_k());
  CMatrix e = CMatrix::Zero(h, k);
  if (kind_ == DomainKind::ball) {
    e.block(0, static_cast<Eigen::Index>(j * fiber_dim_), h, h).setIdentity();
  } else {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < j; ++i) offset += block_dims_[i];
    for (std::size_t i = 0; i < block_dims_[j]; ++i) {
      const auto idx = static_cast<Eigen::Index>(offset + i);
      e(idx, idx) = 1.0;
    }
  }
  return e;
}

void DomainStructure::check_arity(std::span<const cd> z) const {
  if (z.size() != arity_)
    throw InvalidInput("point has " + std::to_string(z.size()) + " coordinates, structure " +
                       to_string() + " expects " + std::to_string(arity_));
}

CMatrix DomainStructure::zmatrix(std::span<const cd> z) const {
  check_arity(z);
  const auto h = static_cast<Eigen::Index>(dim_h());
  CMatrix out = CMatrix::Zero(h, static_cast<Eigen::Index>(dim_k()));
  if (kind_ == DomainKind::ball) {
    for (std::size_t j = 0; j < arity_; ++j)
      out.block(0, static_cast<Eigen::Index>(j * fiber_dim_), h, h).diagonal().setConstant(z[j]);
  } else {
    Eigen::Index idx = 0;
    for (std::size_t j = 0; j < arity_; ++j)
      for (std::size_t i = 0; i < block_dims_[j]; ++i, ++idx) out(idx, idx) = z[j];
  }
  return out;
}

double DomainStructure::z_norm(std::span<const cd> z) const {
  check_arity(z);
  return kind_ == DomainKind::ball ? euclidean_norm(z) : sup_norm(z);
}

Colligation::Colligation(DomainStructure structure, CMatrix a, CMatrix b, CMatrix c, CMatrix d)
    : structure_(std::move(structure)),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      d_(std::move(d)) {
  const auto h = static_cast<Eigen::Index>(structure_.dim_h());
  const auto k = static_cast<Eigen::Index>(structure_.dim_k());
  if (a_.rows() != k || a_.cols() != h)
    throw StructuralError("block A is " + shape(a_) + ", structure " + structure_.to_string() +
                          " needs " + std::to_string(k) + "x" + std::to_string(h));
  if (b_.rows() != k || b_.cols() < 1)
    throw StructuralError("block B is " + shape(b_) + ", needs " + std::to_string(k) +
                          " rows and at least one column");
  if (c_.cols() != h || c_.rows() < 1)
    throw StructuralError("block C is " + shape(c_) + ", needs " + std::to_string(h) +
                          " columns and at least one row");
  if (d_.rows() != c_.rows() || d_.cols() != b_.cols())
    throw StructuralError("block D is " + shape(d_) + ", needs " + std::to_string(c_.rows()) +
                          "x" + std::to_string(b_.cols()));
  if (h + b_.cols() != k + c_.rows())
    throw StructuralError("U is not square: dim H + dim F = " + std::to_string(h + b_.cols()) +
                          " but dim K + dim G = " + std::to_string(k + c_.rows()));
  for (const CMatrix* m : {&a_, &b_, &c_, &d_})
    if (!all_finite(*m)) throw InvalidInput("colligation block has non-finite entries");
}

Colligation Colligation::from_unitary(DomainStructure structure, const CMatrix& u,
                                      std::size_t dim_g) {
  const auto h = static_cast<Eigen::Index>(structure.dim_h());
  const auto k = static_cast<Eigen::Index>(structure.dim_k());
  const auto f = static_cast<Eigen::Index>(structure.input_dim(dim_g));
  const auto g = static_cast<Eigen::Index>(dim_g);
  if (u.rows() != k + g || u.cols() != h + f)
    throw StructuralError("unitary is " + shape(u) + ", structure " + structure.to_string() +
                          " with dim G = " + std::to_string(dim_g) + " needs " +
                          std::to_string(k + g) + "x" + std::to_string(h + f));
  return Colligation(std::move(structure), u.topLeftCorner(k, h), u.topRightCorner(k, f),
                     u.bottomLeftCorner(g, h), u.bottomRightCorner(g, f));
}

CMatrix Colligation::unitary() const {
  CMatrix u(a_.rows() + c_.rows(), a_.cols() + b_.cols());
  u << a_, b_, c_, d_;
  return u;
}

ValidationReport validate(const Colligation& col, double tol) {
  ValidationReport report;
  report.tolerance = tol;
  const auto& s = col.structure();
  const bool dims_ok = col.dim_f() == s.input_dim(col.dim_g());
  report.residuals.push_back({"input_dimension", dims_ok ? 0.0 : 1.0, dims_ok});
  const double unit = unitarity_residual(col.unitary());
  report.residuals.push_back({"unitarity", unit, unit <= tol});
  report.passed = true;
  for (const auto& r : report.residuals) report.passed = report.passed && r.ok;
  return report;
}

double transpose_residual(const CMatrix& u) {
  if (u.rows() != u.cols()) throw InvalidInput("transpose_residual: matrix is not square");
  return spectral_norm(u - u.transpose());
}

Colligation random_colligation(const DomainStructure& structure, std::size_t dim_g,
                               std::uint64_t seed) {
  if (dim_g == 0) throw InvalidInput("random_colligation: dim G must be at least 1");
  const std::size_t n = structure.dim_k() + dim_g;
  return Colligation::from_unitary(structure, haar_unitary(n, seed), dim_g);
}

namespace catalog {

Colligation blaschke(cd a) {
  if (!(std::abs(a) < 1.0)) throw InvalidParameter("blaschke: need |a| < 1");
  const double s = std::sqrt(1.0 - std::norm(a));
  CMatrix A(1, 1), B(1, 1), C(1, 1), D(1, 1);
  A(0, 0) = std::conj(a);
  B(0, 0) = s;
  C(0, 0) = s;
  D(0, 0) = -a;
  return Colligation(DomainStructure::polydisk({1}), A, B, C, D);
}

Colligation monomial(const MultiIndex& alpha) {
  if (alpha.arity() == 0 || alpha.is_zero())
    throw InvalidParameter("monomial: multi-index must be nonzero");
  std::vector<std::size_t> dims;
  for (int c : alpha.counts()) dims.push_back(c > 0 ? static_cast<std::size_t>(c) : 1);
  auto structure = DomainStructure::polydisk(dims);
  const auto h = static_cast<Eigen::Index>(structure.dim_h());

  CMatrix A = CMatrix::Zero(h, h);
  CMatrix B = CMatrix::Zero(h, 1);
  CMatrix C = CMatrix::Zero(1, h);
  CMatrix D = CMatrix::Zero(1, 1);
  Eigen::Index state = 0;
  Eigen::Index prev = -1;
  for (std::size_t j = 0; j < alpha.arity(); ++j) {
    if (alpha[j] == 0) {
      A(state, state) = 1.0;
      ++state;
      continue;
    }
    for (int i = 0; i < alpha[j]; ++i, ++state) {
      if (prev < 0)
        B(state, 0) = 1.0;
      else
        A(state, prev) = 1.0;
      prev = state;
    }
  }
  C(0, prev) = 1.0;
  return Colligation(std::move(structure), A, B, C, D);
}

Colligation symmetric_extremal(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw InvalidParameter("symmetric_extremal: d must be at least 1");
  const CMatrix w = haar_unitary(d + 1, seed);
  const CMatrix u = w * w.transpose();
  return Colligation::from_unitary(DomainStructure::polydisk(std::vector<std::size_t>(d, 1)), u, 1);
}

}  // namespace catalog

}  // namespace schurlab
