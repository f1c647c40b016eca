#pragma once

#include "hel/check_result.hpp"
#include "hel/energies.hpp"
#include "hel/matrix.hpp"

namespace hel {

enum class OperatorKind { RectDiff, RectSum, SymDiff, SymSum, DualHermitian };

/// A set-restricted convolution operator realized as a dense matrix:
///   rect-diff  T(x,y)  = g(x-y) A(x) B(y)      rows A, cols B
///   rect-sum   Tt(x,y) = g(x+y) A(x) B(y)
///   sym-diff   T(x,y)  = g(x-y) A(x) A(y)
///   sym-sum    Tt(x,y) = g(x+y) A(x) A(y)
/// The symmetric kinds require real weights (sym-diff also even) so the
/// matrix is symmetric.
struct PaperOperator {
  OperatorKind kind = OperatorKind::SymDiff;
  FiniteSet row_set;
  FiniteSet col_set;
  RealFunction weight;
  DenseMatrix mat;

  bool symmetric() const {
    return kind == OperatorKind::SymDiff || kind == OperatorKind::SymSum ||
           kind == OperatorKind::DualHermitian;
  }
};

inline constexpr std::size_t kOperatorDimCap = 2048;

PaperOperator build_operator(OperatorKind kind, const FiniteSet& a, const FiniteSet& b,
                             const RealFunction& g, std::size_t dim_cap = kOperatorDimCap);
PaperOperator build_sym_operator(OperatorKind kind, const FiniteSet& a, const RealFunction& g,
                                 std::size_t dim_cap = kOperatorDimCap);
PaperOperator build_sym_operator(OperatorKind kind, const FiniteSet& a, const GroupFunction& g,
                                 std::size_t dim_cap = kOperatorDimCap);

/// Spectrum plus singular/eigen functions; invariant residuals are computed
/// on every decomposition (orthonormality, reconstruction, trace laws).
struct SpectralDecomposition {
  bool singular = false;        // true for rectangular kinds
  std::vector<double> values;   // singular values desc, or eigenvalues |.| desc
  DenseMatrix left;             // u_j / f_alpha columns on the row set
  DenseMatrix right;            // v_j columns on the column set (rect only)
  std::vector<double> means;    // g_alpha = sum_x f_alpha(x) (symmetric kinds)

  double orthonormality_residual = 0.0;
  double reconstruction_residual = 0.0;  // Frobenius-relative
  double trace2_residual = 0.0;          // sum of squares law
  double trace4_residual = 0.0;          // fourth-power law
  double trace1_residual = 0.0;          // eigenvalue-sum law (symmetric)

  double top() const { return values.empty() ? 0.0 : std::abs(values[0]); }
};

SpectralDecomposition decompose(const PaperOperator& op, const JacobiOptions& opts = {});

/// Largest |eigenvalue| / largest singular value without keeping the rest.
double mu0(const PaperOperator& op);

/// Lemma-level checks.  Each returns the individual verified claims.

/// Rank-one structure of T^D_{A,B} and Tt^S_{A,B} when A-B within D and
/// A+B within S, plus the symmetric variant on A alone.
std::vector<CheckResult> rank_one_checks(const FiniteSet& a, const FiniteSet& b,
                                         const FiniteSet& d, const FiniteSet& s);

/// Top eigenvector of a nonnegative symmetric matrix is nonnegative.
CheckResult perron_frobenius_check(const DenseMatrix& m);

/// sum_i <M x_i, x_i>^2 <= sum_i mu_i^2 over random orthonormal systems.
CheckResult diagonal_convexity_check(const DenseMatrix& m, int trials, Rng& rng);

struct Lemma32Result {
  CheckResult diff_side;  // |A|^2 sigma(psi,B)^2 <= E_3(A,B) sigma(psi^2, D)
  CheckResult sum_side;   // same with S
};
Lemma32Result lemma_32_energy_check(const FiniteSet& a, const FiniteSet& b,
                                    const GroupFunction& psi, const FiniteSet& d,
                                    const FiniteSet& s);

/// |A|^2 E_{3/2}(B)^2 <= E_3(A,B) E(B, A+-B) <= E_3(A)^{1/3} E_3(B)^{2/3} E(B, A+-B),
/// plus |A|^6 <= E_3(A) * sum_{x in A-A} ((A+-A) o (A+-A))(x).
std::vector<CheckResult> li_inequality_checks(const FiniteSet& a, const FiniteSet& b);

/// Eigenvalue/eigenfunction-mean identities of T^g_A for even real g, the
/// third-moment lower bound for nonnegative g, and the Carbery inequality.
std::vector<CheckResult> mu_g_a_checks(const FiniteSet& a, const GroupFunction& g);

/// Spectrum of the t-tensor power is the t-fold products of the spectrum.
CheckResult tensor_operator_check(const FiniteSet& a, const GroupFunction& g, int t,
                                  std::size_t dim_cap = 512);

/// Main-eigenfunction mass bounds for nonnegative g, the L_infty bounds,
/// and the autocorrelation main-eigenvalue lower bound.  g1, when given,
/// must satisfy g = g1 o g1.
std::vector<CheckResult> g_bound_checks(const FiniteSet& a, const GroupFunction& g,
                                        const GroupFunction* g1 = nullptr);

/// sum_{x,y,z in A} g1(x-y) g1(x-z) g2(y-z)
///   = sum_a mu_a^2(T^{g1}_A) <T^{g2}_A f_a, f_a>.
CheckResult triangles_identity_check(const FiniteSet& a, const GroupFunction& g1,
                                     const GroupFunction& g2);

/// lambda_j(T^g_{A,A}) = |mu_j(T^g_A)| as multisets for even real g.
CheckResult rect_vs_sym_check(const FiniteSet& a, const GroupFunction& g);

/// mu_0(T^{AoA}_A) >= E(A)/|A|.
CheckResult rayleigh_energy_check(const FiniteSet& a);

/// Fourth-power trace law on an arbitrary matrix.
CheckResult rect_norm4_check(const DenseMatrix& m);

/// Decomposition invariants as check results (acceptance criterion glue).
std::vector<CheckResult> decomposition_invariants(const SpectralDecomposition& dec,
                                                  const std::string& prefix);

}  // namespace hel
