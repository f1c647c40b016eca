#include "hel/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hel {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix multiply: shape mismatch");
  DenseMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

std::vector<double> DenseMatrix::apply(const std::vector<double>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double DenseMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (double x : data_) acc += x * x;
  return std::sqrt(acc);
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool DenseMatrix::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  double scale = max_abs();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol * (1.0 + scale)) return false;
  return true;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

namespace {

double offdiag_mass(const DenseMatrix& s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j) acc += s(i, j) * s(i, j);
  return std::sqrt(acc);
}

double diag_mass(const DenseMatrix& s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.rows(); ++i) acc += s(i, i) * s(i, i);
  return std::sqrt(acc);
}

void sign_normalize_column(DenseMatrix& m, std::size_t col) {
  double scale = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) scale = std::max(scale, std::abs(m(i, col)));
  if (scale == 0.0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (std::abs(m(i, col)) > 1e-12 * scale) {
      if (m(i, col) < 0.0)
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, col) = -m(r, col);
      return;
    }
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(const DenseMatrix& sym, const JacobiOptions& opts) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("jacobi: square matrix required");
  if (!sym.is_symmetric(1e-9))
    throw std::invalid_argument("jacobi: matrix is not symmetric");
  const std::size_t n = sym.rows();
  DenseMatrix a = sym;
  DenseMatrix v = DenseMatrix::identity(n);

  // symmetrize exactly so rotations see a_pq == a_qp
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      double m = 0.5 * (a(p, q) + a(q, p));
      a(p, q) = a(q, p) = m;
    }

  bool converged = n <= 1;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    if (offdiag_mass(a) <= opts.rel_tol * (diag_mass(a) + 1e-30) + opts.abs_tol) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double app = a(p, p), aqq = a(q, q);
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    if (offdiag_mass(a) <= opts.rel_tol * (diag_mass(a) + 1e-30) + opts.abs_tol) converged = true;
  }
  if (!converged) throw std::runtime_error("jacobi eigensolver did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    double ai = std::abs(a(i, i)), aj = std::abs(a(j, j));
    if (ai != aj) return ai > aj;
    if (a(i, i) != a(j, j)) return a(i, i) > a(j, j);
    return i < j;
  });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    sign_normalize_column(out.vectors, j);
  }
  return out;
}

SingularDecomp singular_decompose(const DenseMatrix& m, const JacobiOptions& opts) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t r = std::min(rows, cols);
  DenseMatrix mt = m.transposed();
  DenseMatrix gram = mt.multiply(m);  // cols x cols
  SymmetricEigen eig = jacobi_eigen(gram, opts);

  SingularDecomp out;
  out.values.assign(r, 0.0);
  out.u = DenseMatrix(rows, r);
  out.v = DenseMatrix(cols, r);

  // Gram eigenvalues below the numerical-rank threshold are zeros that
  // round-off inflated to ~eps * s_0^2; clamp them so exact-rank structure
  // (the rank-one lemmas) is reported exactly.
  double top_sq = eig.values.empty() ? 0.0 : std::max(0.0, eig.values[0]);
  double rank_tol = static_cast<double>(cols) * 2.3e-16 * top_sq;
  double top = std::sqrt(top_sq);
  for (std::size_t j = 0; j < r; ++j) {
    double ev = eig.values[j];
    out.values[j] = ev <= rank_tol ? 0.0 : std::sqrt(ev);
    for (std::size_t i = 0; i < cols; ++i) out.v(i, j) = eig.vectors(i, j);
  }

  // u_j = M v_j / s_j where the singular value is significant; the rest get
  // a deterministic orthonormal completion from the standard basis.
  std::vector<std::vector<double>> us;
  for (std::size_t j = 0; j < r; ++j) {
    double sj = out.values[j];
    if (sj > std::max(1e-12, 1e-12 * top)) {
      std::vector<double> vj(cols);
      for (std::size_t i = 0; i < cols; ++i) vj[i] = out.v(i, j);
      std::vector<double> uj = m.apply(vj);
      for (double& x : uj) x /= sj;
      us.push_back(std::move(uj));
    } else {
      us.emplace_back();  // fill below
    }
  }
  for (std::size_t j = 0; j < r; ++j) {
    if (!us[j].empty()) continue;
    for (std::size_t e = 0; e < rows; ++e) {
      std::vector<double> cand(rows, 0.0);
      cand[e] = 1.0;
      for (const auto& u : us) {
        if (u.empty()) continue;
        double p = dot(cand, u);
        for (std::size_t i = 0; i < rows; ++i) cand[i] -= p * u[i];
      }
      double nrm = norm2(cand);
      if (nrm > 0.5) {
        for (double& x : cand) x /= nrm;
        us[j] = std::move(cand);
        break;
      }
    }
    if (us[j].empty()) throw std::runtime_error("svd: failed to complete null-space basis");
  }
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < rows; ++i) out.u(i, j) = us[j][i];

  // sign convention: first significant coordinate of u_j positive; v_j
  // flips together with u_j so the reconstruction is unchanged.
  for (std::size_t j = 0; j < r; ++j) {
    double scale = 0.0;
    for (std::size_t i = 0; i < rows; ++i) scale = std::max(scale, std::abs(out.u(i, j)));
    if (scale == 0.0) continue;
    for (std::size_t i = 0; i < rows; ++i) {
      if (std::abs(out.u(i, j)) > 1e-12 * scale) {
        if (out.u(i, j) < 0.0) {
          for (std::size_t k = 0; k < rows; ++k) out.u(k, j) = -out.u(k, j);
          for (std::size_t k = 0; k < cols; ++k) out.v(k, j) = -out.v(k, j);
        }
        break;
      }
    }
  }
  return out;
}

double orthonormality_error(const DenseMatrix& cols) {
  double worst = 0.0;
  for (std::size_t a = 0; a < cols.cols(); ++a)
    for (std::size_t b = a; b < cols.cols(); ++b) {
      double g = 0.0;
      for (std::size_t i = 0; i < cols.rows(); ++i) g += cols(i, a) * cols(i, b);
      worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

DenseMatrix random_orthonormal(std::size_t n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> col(n);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) col[i] = gauss(rng);
      for (std::size_t prev = 0; prev < j; ++prev) {
        double p = 0.0;
        for (std::size_t i = 0; i < n; ++i) p += col[i] * q(i, prev);
        for (std::size_t i = 0; i < n; ++i) col[i] -= p * q(i, prev);
      }
      double nrm = norm2(col);
      if (nrm > 1e-6) {
        for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i] / nrm;
        break;
      }
    }
  }
  return q;
}

}  // namespace hel
