#include "privnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "privnet/error.hpp"

namespace privnet {

namespace {

constexpr int kSweepBudget = 100;
constexpr double kOffDiagonalRelTol = 1e-12;

void require_same_dim(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::StructureMismatch,
                "matrix dims differ: " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
}

void require_structure(const CMatrix& m, const TensorStructure& s) {
  if (m.dim() != s.total_dim()) {
    throw Error(ErrorCode::StructureMismatch,
                "matrix dim " + std::to_string(m.dim()) + " does not match structure dim " +
                    std::to_string(s.total_dim()));
  }
}

void require_factors(const TensorStructure& s, std::span<const std::size_t> factors) {
  std::vector<bool> seen(s.factor_count(), false);
  for (auto f : factors) {
    if (f >= s.factor_count() || seen[f]) {
      throw Error(ErrorCode::StructureMismatch,
                  "invalid or repeated factor index " + std::to_string(f));
    }
    seen[f] = true;
  }
}

double off_diagonal_mass(const CMatrix& a) {
  double acc = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

// Rotates the (p, q) plane of the Hermitian working matrix `a` so that
// a(p, q) vanishes. J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q),
// a <- J^dagger a J, v <- v J.
void jacobi_rotate(CMatrix& a, CMatrix* v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const Complex phase_conj = std::conj(phase);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.dim();

  const Complex jqp = -s * phase_conj;
  const Complex jqq = c * phase_conj;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + jqp * akq;
    a(k, q) = s * akp + jqq * akq;
  }
  const Complex rqp = -s * phase;  // conj(jqp)
  const Complex rqq = c * phase;   // conj(jqq)
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + rqp * aqk;
    a(q, k) = s * apk + rqq * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex vkp = (*v)(k, p);
      const Complex vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp + jqp * vkq;
      (*v)(k, q) = s * vkp + jqq * vkq;
    }
  }
}

// Diagonalizes `a` in place. Returns after the sweep that follows the first
// one meeting the off-diagonal threshold.
void jacobi_diagonalize(CMatrix& a, CMatrix* v) {
  const double scale = frobenius_norm(a);
  if (scale == 0.0) return;
  const double threshold = kOffDiagonalRelTol * scale;
  const std::size_t n = a.dim();
  bool converged = false;
  for (int sweep = 0; sweep < kSweepBudget; ++sweep) {
    const double off = off_diagonal_mass(a);
    if (off == 0.0) return;
    if (converged) {
      // extra sweep already done
      return;
    }
    if (off < threshold) converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }
  if (!converged || off_diagonal_mass(a) >= threshold) {
    throw Error(ErrorCode::NoConvergence, "Jacobi sweep budget exhausted");
  }
}

CMatrix hermitian_part(const CMatrix& m) {
  const std::size_t n = m.dim();
  CMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

void check_eig_input(const CMatrix& m, double tol) {
  if (m.dim() == 0 || m.dim() > kMaxDim) {
    throw Error(ErrorCode::StructureMismatch, "eigensolver dim out of range: " + std::to_string(m.dim()));
  }
  if (!is_hermitian(m, tol)) throw Error(ErrorCode::NotHermitian, "input is not Hermitian");
}

}  // namespace

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorCode::StructureMismatch, "entry count is not dim^2");
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorCode::StructureMismatch, "matrix literal is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex CMatrix::trace() const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
  return acc;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
CMatrix operator*(CMatrix lhs, Complex scalar) { return lhs *= scalar; }
CMatrix operator*(Complex scalar, CMatrix rhs) { return rhs *= scalar; }

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  CMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

double max_abs(const CMatrix& m) {
  double worst = 0.0;
  for (const auto& x : m.data()) worst = std::max(worst, std::abs(x));
  return worst;
}

double frobenius_norm(const CMatrix& m) {
  double acc = 0.0;
  for (const auto& x : m.data()) acc += std::norm(x);
  return std::sqrt(acc);
}

bool is_hermitian(const CMatrix& m, double tol) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

bool is_unitary(const CMatrix& m, double tol) {
  return max_abs_diff(m * m.adjoint(), CMatrix::identity(m.dim())) <= tol;
}

// ---------------------------------------------------------------------------
// TensorStructure

TensorStructure::TensorStructure(std::vector<std::size_t> factor_dims) : dims_(std::move(factor_dims)) {
  if (dims_.empty()) throw Error(ErrorCode::StructureMismatch, "tensor structure needs at least one factor");
  strides_.assign(dims_.size(), 1);
  for (std::size_t k = dims_.size(); k-- > 0;) {
    if (dims_[k] == 0) throw Error(ErrorCode::StructureMismatch, "factor dimension must be positive");
    strides_[k] = total_;
    total_ *= dims_[k];
  }
}

TensorStructure::TensorStructure(std::initializer_list<std::size_t> factor_dims)
    : TensorStructure(std::vector<std::size_t>(factor_dims)) {}

std::vector<std::size_t> TensorStructure::digits(std::size_t index) const {
  std::vector<std::size_t> out(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    out[k] = index % dims_[k];
    index /= dims_[k];
  }
  return out;
}

std::size_t TensorStructure::index(std::span<const std::size_t> digits) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) idx += digits[k] * strides_[k];
  return idx;
}

std::size_t TensorStructure::subspace_dim(std::span<const std::size_t> factors) const {
  std::size_t d = 1;
  for (auto f : factors) d *= dims_.at(f);
  return d;
}

// ---------------------------------------------------------------------------
// Spectral routines

EigenDecomposition herm_eig(const CMatrix& m, double tol) {
  check_eig_input(m, tol);
  const std::size_t n = m.dim();
  CMatrix a = hermitian_part(m);
  CMatrix v = CMatrix::identity(n);
  jacobi_diagonalize(a, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  EigenDecomposition out{std::vector<double>(n), CMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> herm_eigenvalues(const CMatrix& m, double tol) {
  check_eig_input(m, tol);
  CMatrix a = hermitian_part(m);
  jacobi_diagonalize(a, nullptr);
  std::vector<double> values(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) values[k] = a(k, k).real();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

// One-sided Jacobi: rotates column pairs of M until all are orthogonal, which
// diagonalizes M^dagger M without forming it. The column norms are then the
// singular values, accurate to about eps |M| even when tiny.
std::vector<double> singular_values(const CMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) cols[c][r] = m(r, c);

  constexpr double kOrthogonalityTol = 1e-15;
  bool rotated = true;
  int sweep = 0;
  for (; rotated && sweep < kSweepBudget; ++sweep) {
    rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto& wp = cols[p];
        auto& wq = cols[q];
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          alpha += std::norm(wp[r]);
          beta += std::norm(wq[r]);
          gamma += std::conj(wp[r]) * wq[r];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kOrthogonalityTol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double sn = c * t;
        for (std::size_t r = 0; r < n; ++r) {
          const Complex a = wp[r];
          const Complex b = wq[r] * std::conj(phase);
          wp[r] = c * a - sn * b;
          wq[r] = sn * a + c * b;
        }
      }
    }
  }
  if (rotated) throw Error(ErrorCode::NoConvergence, "one-sided Jacobi sweep budget exhausted");

  std::vector<double> values(n);
  for (std::size_t c = 0; c < n; ++c) {
    double acc = 0.0;
    for (const Complex& x : cols[c]) acc += std::norm(x);
    values[c] = std::sqrt(acc);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

double trace_norm(const CMatrix& m) {
  const double scale = std::max(1.0, max_abs(m));
  if (is_hermitian(m, 1e-14 * scale)) {
    double acc = 0.0;
    for (double x : herm_eigenvalues(m, 1e-14 * scale)) acc += std::abs(x);
    return acc;
  }
  double acc = 0.0;
  for (double x : singular_values(m)) acc += x;
  return acc;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  CMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

CMatrix partial_trace(const CMatrix& m, const TensorStructure& s, std::span<const std::size_t> keep) {
  require_structure(m, s);
  require_factors(s, keep);
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<bool> is_kept(s.factor_count(), false);
  for (auto f : kept) is_kept[f] = true;

  std::vector<std::size_t> kept_dims;
  for (auto f : kept) kept_dims.push_back(s.factor_dim(f));
  if (kept_dims.empty()) kept_dims.push_back(1);
  const TensorStructure reduced(kept_dims);

  const std::size_t n = m.dim();
  // Reduced index and traced-out index of every global basis vector.
  std::vector<std::size_t> red(n), rest(n);
  for (std::size_t g = 0; g < n; ++g) {
    const auto dg = s.digits(g);
    std::size_t r = 0, t = 0;
    for (std::size_t k = 0; k < dg.size(); ++k) {
      if (is_kept[k]) {
        r = r * s.factor_dim(k) + dg[k];
      } else {
        t = t * s.factor_dim(k) + dg[k];
      }
    }
    red[g] = r;
    rest[g] = t;
  }
  CMatrix out(reduced.total_dim());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rest[r] == rest[c]) out(red[r], red[c]) += m(r, c);
  return out;
}

CMatrix partial_trace(const CMatrix& m, const TensorStructure& s, std::initializer_list<std::size_t> keep) {
  return partial_trace(m, s, std::span<const std::size_t>(keep.begin(), keep.size()));
}

CMatrix partial_transpose(const CMatrix& m, const TensorStructure& s,
                          std::span<const std::size_t> transposed) {
  require_structure(m, s);
  require_factors(s, transposed);
  const std::size_t n = m.dim();
  std::vector<std::vector<std::size_t>> digits(n);
  for (std::size_t g = 0; g < n; ++g) digits[g] = s.digits(g);

  CMatrix out(n);
  std::vector<std::size_t> rd, cd;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      rd = digits[r];
      cd = digits[c];
      for (auto f : transposed) std::swap(rd[f], cd[f]);
      out(s.index(rd), s.index(cd)) = m(r, c);
    }
  }
  return out;
}

CMatrix partial_transpose(const CMatrix& m, const TensorStructure& s,
                          std::initializer_list<std::size_t> transposed) {
  return partial_transpose(m, s, std::span<const std::size_t>(transposed.begin(), transposed.size()));
}

CMatrix permute_factors(const CMatrix& m, const TensorStructure& s, std::span<const std::size_t> order) {
  require_structure(m, s);
  if (order.size() != s.factor_count()) {
    throw Error(ErrorCode::StructureMismatch, "permutation length does not match factor count");
  }
  require_factors(s, order);
  std::vector<std::size_t> new_dims;
  for (auto f : order) new_dims.push_back(s.factor_dim(f));
  const TensorStructure target(new_dims);

  const std::size_t n = m.dim();
  std::vector<std::size_t> map(n);
  std::vector<std::size_t> nd(order.size());
  for (std::size_t g = 0; g < n; ++g) {
    const auto dg = s.digits(g);
    for (std::size_t k = 0; k < order.size(); ++k) nd[k] = dg[order[k]];
    map[g] = target.index(nd);
  }
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(map[r], map[c]) = m(r, c);
  return out;
}

double min_eigenvalue(const CMatrix& m, double tol) { return herm_eigenvalues(m, tol).back(); }

bool is_psd(const CMatrix& m, double tol) { return min_eigenvalue(m, tol) >= -tol; }

}  // namespace privnet
