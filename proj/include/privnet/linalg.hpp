#pragma once

// Dense complex linear algebra for small square matrices.
//
// Index convention used throughout the library: a TensorStructure with factor
// dimensions (d_1, ..., d_m) maps per-factor indices (i_1, ..., i_m) to the
// global index i_1*d_2*...*d_m + ... + i_m, i.e. row-major mixed radix with the
// first factor most significant.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace privnet {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kMaxDim = 4096;

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim);
  CMatrix(std::size_t dim, std::vector<Complex> entries);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const double> values);
  static CMatrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  Complex trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scalar);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix& rhs);
CMatrix operator-(CMatrix lhs, const CMatrix& rhs);
CMatrix operator*(CMatrix lhs, Complex scalar);
CMatrix operator*(Complex scalar, CMatrix rhs);
CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs(const CMatrix& m);
double frobenius_norm(const CMatrix& m);

/// max |M_ij - conj(M_ji)| <= tol.
bool is_hermitian(const CMatrix& m, double tol = kDefaultTol);
/// max |M M^dagger - I| <= tol.
bool is_unitary(const CMatrix& m, double tol = kDefaultTol);

/// Ordered factor dimensions of a tensor-product space.
class TensorStructure {
 public:
  explicit TensorStructure(std::vector<std::size_t> factor_dims);
  TensorStructure(std::initializer_list<std::size_t> factor_dims);

  std::size_t factor_count() const noexcept { return dims_.size(); }
  std::size_t factor_dim(std::size_t k) const { return dims_.at(k); }
  const std::vector<std::size_t>& factor_dims() const noexcept { return dims_; }
  std::size_t total_dim() const noexcept { return total_; }

  /// Per-factor digits of a global index.
  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t index(std::span<const std::size_t> digits) const;

  /// Product of the dimensions of the listed factors.
  std::size_t subspace_dim(std::span<const std::size_t> factors) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  CMatrix vectors;             // columns are eigenvectors
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
/// Throws NotHermitian, NoConvergence, StructureMismatch (dim out of range).
EigenDecomposition herm_eig(const CMatrix& m, double tol = kDefaultTol);

/// Eigenvalues only (same solver, no eigenvector accumulation).
std::vector<double> herm_eigenvalues(const CMatrix& m, double tol = kDefaultTol);

/// Singular values, descending, from the eigenvalues of M^dagger M.
std::vector<double> singular_values(const CMatrix& m);

/// Tr sqrt(X X^dagger).
double trace_norm(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Traces out every factor not listed in `keep`. The kept factors retain
/// their relative order.
CMatrix partial_trace(const CMatrix& m, const TensorStructure& s,
                      std::span<const std::size_t> keep);
CMatrix partial_trace(const CMatrix& m, const TensorStructure& s,
                      std::initializer_list<std::size_t> keep);

/// Transposes the indices of the listed factors.
CMatrix partial_transpose(const CMatrix& m, const TensorStructure& s,
                          std::span<const std::size_t> transposed);
CMatrix partial_transpose(const CMatrix& m, const TensorStructure& s,
                          std::initializer_list<std::size_t> transposed);

/// Reorders tensor factors: factor k of the result is factor order[k] of m.
CMatrix permute_factors(const CMatrix& m, const TensorStructure& s,
                        std::span<const std::size_t> order);

/// True iff the smallest eigenvalue is >= -tol. Throws NotHermitian.
bool is_psd(const CMatrix& m, double tol = kDefaultTol);

double min_eigenvalue(const CMatrix& m, double tol = kDefaultTol);

/// V f(diag) V^dagger for Hermitian m.
template <typename F>
CMatrix herm_apply(const CMatrix& m, F&& f, double tol = kDefaultTol) {
  auto eig = herm_eig(m, tol);
  const std::size_t n = m.dim();
  CMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

}  // namespace privnet
