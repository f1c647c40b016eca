#include "hel/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace hel {

namespace {

GroupElement combine(const GroupDescriptor& d, const GroupElement& x, const GroupElement& y,
                     bool diff) {
  return diff ? group_sub(d, x, y) : group_add(d, x, y);
}

bool is_diff_kind(OperatorKind k) {
  return k == OperatorKind::RectDiff || k == OperatorKind::SymDiff;
}

}  // namespace

PaperOperator build_operator(OperatorKind kind, const FiniteSet& a, const FiniteSet& b,
                             const RealFunction& g, std::size_t dim_cap) {
  if (kind == OperatorKind::DualHermitian)
    throw std::invalid_argument("dual hermitian operators are built by the dual-sets module");
  if (a.descriptor() != b.descriptor() || a.descriptor() != g.descriptor())
    throw std::invalid_argument("build_operator: descriptor mismatch");
  bool rect = kind == OperatorKind::RectDiff || kind == OperatorKind::RectSum;
  if (rect && b.size() > a.size())
    throw std::invalid_argument("build_operator: rectangular kinds require |B| <= |A|");
  if (a.size() > dim_cap || b.size() > dim_cap)
    throw std::invalid_argument("build_operator: dimension cap exceeded");
  if (kind == OperatorKind::SymDiff && !g.is_even())
    throw std::invalid_argument("build_operator: sym-diff requires an even weight");

  PaperOperator op;
  op.kind = kind;
  op.row_set = a;
  op.col_set = rect ? b : a;
  op.weight = g;
  const auto& d = a.descriptor();
  const bool diff = is_diff_kind(kind);
  op.mat = DenseMatrix(op.row_set.size(), op.col_set.size());
  for (std::size_t i = 0; i < op.row_set.size(); ++i)
    for (std::size_t j = 0; j < op.col_set.size(); ++j)
      op.mat(i, j) =
          g.at(combine(d, op.row_set.elements()[i], op.col_set.elements()[j], diff));
  return op;
}

PaperOperator build_sym_operator(OperatorKind kind, const FiniteSet& a, const RealFunction& g,
                                 std::size_t dim_cap) {
  if (kind != OperatorKind::SymDiff && kind != OperatorKind::SymSum)
    throw std::invalid_argument("build_sym_operator: symmetric kind required");
  return build_operator(kind, a, a, g, dim_cap);
}

PaperOperator build_sym_operator(OperatorKind kind, const FiniteSet& a, const GroupFunction& g,
                                 std::size_t dim_cap) {
  return build_sym_operator(kind, a, to_real(g), dim_cap);
}

SpectralDecomposition decompose(const PaperOperator& op, const JacobiOptions& opts) {
  SpectralDecomposition dec;
  const auto& d = op.row_set.descriptor();

  if (op.symmetric()) {
    if (!op.mat.is_symmetric(1e-9))
      throw std::invalid_argument("decompose: matrix of a symmetric kind is not symmetric");
    SymmetricEigen eig = jacobi_eigen(op.mat, opts);
    dec.singular = false;
    dec.values = eig.values;
    dec.left = eig.vectors;
    dec.means.resize(dec.values.size());
    for (std::size_t j = 0; j < dec.values.size(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < dec.left.rows(); ++i) s += dec.left(i, j);
      dec.means[j] = s;
    }
  } else {
    SingularDecomp svd = singular_decompose(op.mat, opts);
    dec.singular = true;
    dec.values = svd.values;
    dec.left = std::move(svd.u);
    dec.right = std::move(svd.v);
  }

  // invariants: orthonormality and reconstruction
  dec.orthonormality_residual = orthonormality_error(dec.left);
  if (dec.singular)
    dec.orthonormality_residual =
        std::max(dec.orthonormality_residual, orthonormality_error(dec.right));

  DenseMatrix rec(op.mat.rows(), op.mat.cols());
  const DenseMatrix& right = dec.singular ? dec.right : dec.left;
  for (std::size_t j = 0; j < dec.values.size(); ++j) {
    double s = dec.values[j];
    if (s == 0.0) continue;
    for (std::size_t r = 0; r < rec.rows(); ++r) {
      double u = dec.left(r, j);
      if (u == 0.0) continue;
      for (std::size_t c = 0; c < rec.cols(); ++c) rec(r, c) += s * u * right(c, j);
    }
  }
  double mn = op.mat.frobenius_norm();
  double diff_norm = 0.0;
  for (std::size_t i = 0; i < rec.data().size(); ++i) {
    double e = rec.data()[i] - op.mat.data()[i];
    diff_norm += e * e;
  }
  dec.reconstruction_residual = std::sqrt(diff_norm) / (mn > 0.0 ? mn : 1.0);

  // trace laws against independently assembled right-hand sides
  const bool diff = is_diff_kind(op.kind);
  double sum2 = 0.0, sum4 = 0.0, sum1 = 0.0;
  for (double v : dec.values) {
    sum1 += v;
    sum2 += v * v;
    sum4 += v * v * v * v;
  }

  double rhs2 = 0.0;
  if (op.kind == OperatorKind::DualHermitian) {
    for (double x : op.mat.data()) rhs2 += x * x;
  } else {
    for (const auto& x : op.row_set)
      for (const auto& y : op.col_set) {
        double g = op.weight.at(combine(d, x, y, diff));
        rhs2 += g * g;
      }
  }
  dec.trace2_residual = rel_err(sum2, rhs2);

  // C_3(A,g,g)(-y,-y') = sum_x M(x,y) M(x,y'); the fourth-power law reduces
  // to the Frobenius mass of the column Gram matrix.
  double rhs4 = 0.0;
  for (std::size_t y = 0; y < op.mat.cols(); ++y)
    for (std::size_t yp = 0; yp < op.mat.cols(); ++yp) {
      double inner = 0.0;
      for (std::size_t x = 0; x < op.mat.rows(); ++x) inner += op.mat(x, y) * op.mat(x, yp);
      rhs4 += inner * inner;
    }
  dec.trace4_residual = rel_err(sum4, rhs4);

  if (!dec.singular) {
    double rhs1 = 0.0;
    if (op.kind == OperatorKind::SymDiff) {
      rhs1 = op.weight.at(group_zero(d)) * static_cast<double>(op.row_set.size());
    } else if (op.kind == OperatorKind::SymSum) {
      for (const auto& x : op.row_set) rhs1 += op.weight.at(group_add(d, x, x));
    } else {
      for (std::size_t i = 0; i < op.mat.rows(); ++i) rhs1 += op.mat(i, i);
    }
    double scale = std::max({std::abs(sum1), std::abs(rhs1), sum2 > 0.0 ? std::sqrt(sum2) : 1.0});
    dec.trace1_residual = std::abs(sum1 - rhs1) / scale;
  }
  return dec;
}

double mu0(const PaperOperator& op) {
  // power iteration with a diagonal shift for large nonnegative matrices,
  // full Jacobi otherwise
  const std::size_t n = op.mat.rows();
  bool nonneg = true;
  for (double x : op.mat.data())
    if (x < 0.0) {
      nonneg = false;
      break;
    }
  if (!op.symmetric() || !nonneg || n <= 256) {
    SpectralDecomposition dec = decompose(op);
    return dec.top();
  }
  double shift = op.mat.max_abs();
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lambda = 0.0;
  for (int it = 0; it < 20000; ++it) {
    std::vector<double> w = op.mat.apply(v);
    for (std::size_t i = 0; i < n; ++i) w[i] += shift * v[i];
    double nrm = norm2(w);
    if (nrm == 0.0) return 0.0;
    for (double& x : w) x /= nrm;
    double next = dot(w, op.mat.apply(w)) + shift;
    if (std::abs(next - lambda) <= 1e-13 * (std::abs(next) + 1.0) && it > 16) {
      lambda = next;
      break;
    }
    lambda = next;
    v = std::move(w);
  }
  return lambda - shift;
}

std::vector<CheckResult> rank_one_checks(const FiniteSet& a, const FiniteSet& b,
                                         const FiniteSet& d, const FiniteSet& s) {
  FiniteSet amb = sumset(a, b, 1, -1);
  FiniteSet apb = sumset(a, b, 1, 1);
  if (set_difference(amb, d).size() != 0)
    throw std::invalid_argument("rank_one_checks: A-B not contained in D");
  if (set_difference(apb, s).size() != 0)
    throw std::invalid_argument("rank_one_checks: A+B not contained in S");

  std::vector<CheckResult> out;
  double target = std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));

  auto check_rect = [&](OperatorKind kind, const FiniteSet& weight_set, const char* tag) {
    PaperOperator op =
        build_operator(kind, a, b, to_real(GroupFunction::indicator(weight_set)));
    SpectralDecomposition dec = decompose(op);
    out.push_back(CheckResult::eq(std::string("rank_one.") + tag + ".lambda0", CheckKind::Explicit,
                                  dec.values.empty() ? 0.0 : dec.values[0], target));
    double resid = 0.0;
    for (std::size_t j = 1; j < dec.values.size(); ++j) resid = std::max(resid, dec.values[j]);
    out.push_back(CheckResult::leq(std::string("rank_one.") + tag + ".residual_spectrum",
                                   CheckKind::Explicit, resid, 1e-9 * target, 0.0));
    double u_err = 0.0, v_err = 0.0;
    double ua = 1.0 / std::sqrt(static_cast<double>(a.size()));
    double vb = 1.0 / std::sqrt(static_cast<double>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) u_err = std::max(u_err, std::abs(dec.left(i, 0) - ua));
    for (std::size_t i = 0; i < b.size(); ++i)
      v_err = std::max(v_err, std::abs(dec.right(i, 0) - vb));
    out.push_back(CheckResult::leq(std::string("rank_one.") + tag + ".singular_functions",
                                   CheckKind::Explicit, std::max(u_err, v_err), 1e-9, 0.0));
  };
  check_rect(OperatorKind::RectDiff, d, "rect_diff");
  check_rect(OperatorKind::RectSum, s, "rect_sum");

  // symmetric variant on A alone with the minimal admissible D, S
  FiniteSet da = sumset(a, a, 1, -1);
  FiniteSet sa = sumset(a, a, 1, 1);
  auto check_sym = [&](OperatorKind kind, const FiniteSet& weight_set, const char* tag) {
    PaperOperator op = build_sym_operator(kind, a, GroupFunction::indicator(weight_set));
    SpectralDecomposition dec = decompose(op);
    double mu_target = static_cast<double>(a.size());
    out.push_back(CheckResult::eq(std::string("rank_one.") + tag + ".mu0", CheckKind::Explicit,
                                  dec.values.empty() ? 0.0 : std::abs(dec.values[0]), mu_target));
    double resid = 0.0;
    for (std::size_t j = 1; j < dec.values.size(); ++j)
      resid = std::max(resid, std::abs(dec.values[j]));
    out.push_back(CheckResult::leq(std::string("rank_one.") + tag + ".residual_spectrum",
                                   CheckKind::Explicit, resid, 1e-9 * mu_target, 0.0));
    double f_err = 0.0;
    double fa = 1.0 / std::sqrt(static_cast<double>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      f_err = std::max(f_err, std::abs(dec.left(i, 0) - fa));
    out.push_back(CheckResult::leq(std::string("rank_one.") + tag + ".eigenfunction",
                                   CheckKind::Explicit, f_err, 1e-9, 0.0));
  };
  check_sym(OperatorKind::SymDiff, da, "sym_diff");
  check_sym(OperatorKind::SymSum, sa, "sym_sum");
  return out;
}

CheckResult perron_frobenius_check(const DenseMatrix& m) {
  for (double x : m.data())
    if (x < 0.0) throw std::invalid_argument("perron_frobenius_check: negative entry");
  SymmetricEigen eig = jacobi_eigen(m);
  if (eig.values.empty()) return CheckResult::leq("perron_frobenius", CheckKind::Explicit, 0.0, 0.0);
  // orient the top eigenvector by its dominant coordinate, then require
  // min coordinate >= -1e-9 * max coordinate
  std::vector<double> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = eig.vectors(i, 0);
  double pos = 0.0, neg = 0.0;
  for (double x : v) {
    pos = std::max(pos, x);
    neg = std::max(neg, -x);
  }
  if (neg > pos)
    for (double& x : v) x = -x;
  double mx = std::max(pos, neg);
  double mn = *std::min_element(v.begin(), v.end());
  return CheckResult::leq("perron_frobenius", CheckKind::Explicit, -mn, 1e-9 * (mx > 0 ? mx : 1.0),
                          0.0);
}

CheckResult diagonal_convexity_check(const DenseMatrix& m, int trials, Rng& rng) {
  if (!m.is_symmetric(1e-9))
    throw std::invalid_argument("diagonal_convexity_check: symmetric matrix required");
  double rhs = 0.0;
  for (double x : m.data()) rhs += x * x;  // sum mu_i^2 = Frobenius mass
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    DenseMatrix q = random_orthonormal(m.rows(), rng);
    double lhs = 0.0;
    for (std::size_t j = 0; j < q.cols(); ++j) {
      std::vector<double> x(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) x[i] = q(i, j);
      double r = dot(x, m.apply(x));
      lhs += r * r;
    }
    worst = std::max(worst, lhs);
  }
  return CheckResult::leq("diagonal_convexity", CheckKind::Explicit, worst, rhs);
}

Lemma32Result lemma_32_energy_check(const FiniteSet& a, const FiniteSet& b,
                                    const GroupFunction& psi, const FiniteSet& d,
                                    const FiniteSet& s) {
  if (set_difference(sumset(a, b, 1, -1), d).size() != 0)
    throw std::invalid_argument("lemma_32_energy_check: A-B not contained in D");
  if (set_difference(sumset(a, b, 1, 1), s).size() != 0)
    throw std::invalid_argument("lemma_32_energy_check: A+B not contained in S");
  GroupFunction psi_sq(psi.descriptor());
  for (const auto& [x, v] : psi.raw()) psi_sq.set(x, checked_mul(v, v));

  i128 sig = sigma_weighted(psi, b);
  i128 lhs = i128(a.size()) * i128(a.size()) * sig * sig;
  i128 e3 = energy_pair_moment_int(a, b, 3);
  i128 rhs_d = e3 * i128(sigma_weighted(psi_sq, d));
  i128 rhs_s = e3 * i128(sigma_weighted(psi_sq, s));

  Lemma32Result r;
  r.diff_side = CheckResult::make("energy_32.diff", CheckKind::Explicit, static_cast<double>(lhs),
                                  static_cast<double>(rhs_d), lhs <= rhs_d);
  r.sum_side = CheckResult::make("energy_32.sum", CheckKind::Explicit, static_cast<double>(lhs),
                                 static_cast<double>(rhs_s), lhs <= rhs_s);
  return r;
}

std::vector<CheckResult> li_inequality_checks(const FiniteSet& a, const FiniteSet& b) {
  std::vector<CheckResult> out;
  double e32b = energy_moment(b, 1.5);
  double lhs = static_cast<double>(a.size()) * static_cast<double>(a.size()) * e32b * e32b;
  double e3ab = static_cast<double>(energy_pair_moment_int(a, b, 3));
  double e3a = static_cast<double>(energy_moment_int(a, 3));
  double e3b = static_cast<double>(energy_moment_int(b, 3));

  for (int sign : {+1, -1}) {
    FiniteSet apb = sumset(a, b, 1, sign);
    double eb_ab = static_cast<double>(energy_pair(b, apb));
    std::string tag = sign > 0 ? "plus" : "minus";
    out.push_back(
        CheckResult::leq("li.first." + tag, CheckKind::Explicit, lhs, e3ab * eb_ab));
    out.push_back(CheckResult::leq("li.chain." + tag, CheckKind::Explicit, e3ab * eb_ab,
                                   std::pow(e3a, 1.0 / 3.0) * std::pow(e3b, 2.0 / 3.0) * eb_ab));
  }

  // |A|^6 <= E_3(A) * sum_{x in A-A} ((A+-A) o (A+-A))(x)
  FiniteSet diff = sumset(a, a, 1, -1);
  for (int sign : {+1, -1}) {
    FiniteSet t = sumset(a, a, 1, sign);
    i128 mass = 0;
    GroupFunction tt = autocorrelation(t);
    for (const auto& x : diff) mass += tt.at(x);
    i128 lhs6 = 1;
    for (int i = 0; i < 6; ++i) lhs6 *= i128(a.size());
    i128 rhs = i128(energy_moment_int(a, 3)) * mass;
    out.push_back(CheckResult::make(std::string("li.ss2.") + (sign > 0 ? "plus" : "minus"),
                                    CheckKind::Explicit, static_cast<double>(lhs6),
                                    static_cast<double>(rhs), lhs6 <= rhs));
  }
  return out;
}

std::vector<CheckResult> mu_g_a_checks(const FiniteSet& a, const GroupFunction& g) {
  if (!g.is_even()) throw std::invalid_argument("mu_g_a_checks: g must be even");
  std::vector<CheckResult> out;
  PaperOperator op = build_sym_operator(OperatorKind::SymDiff, a, g);
  SpectralDecomposition dec = decompose(op);

  double m1 = 0.0, m2 = 0.0, m3 = 0.0;
  for (std::size_t j = 0; j < dec.values.size(); ++j) {
    double mu = dec.values[j], ga = dec.means[j];
    m1 += mu * ga * ga;
    m2 += mu * mu * ga * ga;
    m3 += mu * mu * mu * ga * ga;
  }

  double rhs1 = static_cast<double>(sigma_weighted(g, a));
  out.push_back(CheckResult::eq("mu_g_a.first", CheckKind::Exact, m1, rhs1));

  GroupFunction goa = correlate(g, GroupFunction::indicator(a));
  i128 rhs2i = 0;
  for (const auto& x : a) {
    i64 v = goa.at(x);
    rhs2i += i128(v) * v;
  }
  out.push_back(
      CheckResult::eq("mu_g_a.second", CheckKind::Exact, m2, static_cast<double>(rhs2i)));

  if (g.is_nonnegative()) {
    double cube = rhs1 * rhs1 * rhs1;
    double bound = cube / (static_cast<double>(a.size()) * static_cast<double>(a.size()));
    out.push_back(CheckResult::leq("mu_g_a.third", CheckKind::Explicit, bound, m3));

    // Carbery: <T A, A>^3 <= |A|^2 sum_{x,y} T(x,y) row(x) col(y), exact
    i128 gram = 0;
    const auto& dsc = a.descriptor();
    std::vector<i128> rowsum(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        rowsum[i] += g.at(group_sub(dsc, a.elements()[i], a.elements()[j]));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        i64 t = g.at(group_sub(dsc, a.elements()[i], a.elements()[j]));
        if (t != 0) gram += i128(t) * rowsum[i] * rowsum[j];
      }
    i128 sg = sigma_weighted(g, a);
    i128 lhs = sg * sg * sg;
    i128 rhs = i128(a.size()) * i128(a.size()) * gram;
    out.push_back(CheckResult::make("carbery", CheckKind::Explicit, static_cast<double>(lhs),
                                    static_cast<double>(rhs), lhs <= rhs));
  }
  return out;
}

CheckResult tensor_operator_check(const FiniteSet& a, const GroupFunction& g, int t,
                                  std::size_t dim_cap) {
  if (!g.is_even()) throw std::invalid_argument("tensor_operator_check: g must be even");
  if (t < 2 || t > 3) throw std::invalid_argument("tensor_operator_check: t in {2,3}");
  double dim = std::pow(static_cast<double>(a.size()), t);
  if (dim > static_cast<double>(dim_cap))
    throw std::invalid_argument("tensor_operator_check: dimension cap exceeded");

  PaperOperator base = build_sym_operator(OperatorKind::SymDiff, a, g);
  SpectralDecomposition bdec = decompose(base);

  FiniteSet at = cartesian_power(a, t);
  GroupFunction gt = tensor_power(g, t);
  PaperOperator power = build_sym_operator(OperatorKind::SymDiff, at, gt);
  SpectralDecomposition pdec = decompose(power);

  std::vector<double> expected;
  expected.reserve(pdec.values.size());
  std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
  bool done = false;
  while (!done) {
    double p = 1.0;
    for (auto i : idx) p *= bdec.values[i];
    expected.push_back(p);
    done = true;
    for (std::size_t j = idx.size(); j-- > 0;) {
      if (++idx[j] < bdec.values.size()) {
        done = false;
        break;
      }
      idx[j] = 0;
    }
  }
  auto by_mag = [](double x, double y) {
    if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
    return x > y;
  };
  std::sort(expected.begin(), expected.end(), by_mag);
  std::vector<double> got = pdec.values;
  std::sort(got.begin(), got.end(), by_mag);

  double tol = 1e-8 * (1.0 + (expected.empty() ? 0.0 : std::abs(expected[0])));
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i)
    worst = std::max(worst, std::abs(got[i] - expected[i]));
  return CheckResult::leq("tensor_operator", CheckKind::Exact, worst, tol, 0.0);
}

std::vector<CheckResult> g_bound_checks(const FiniteSet& a, const GroupFunction& g,
                                        const GroupFunction* g1) {
  if (!g.is_nonnegative()) throw std::invalid_argument("g_bound_checks: g must be nonnegative");
  if (!g.is_even()) throw std::invalid_argument("g_bound_checks: g must be even");
  std::vector<CheckResult> out;

  PaperOperator op = build_sym_operator(OperatorKind::SymDiff, a, g);
  SpectralDecomposition dec = decompose(op);
  double mu = dec.top();
  double f0sum = 0.0, f0inf = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    f0sum += dec.left(i, 0);
    f0inf = std::max(f0inf, std::abs(dec.left(i, 0)));
  }
  double g2 = 0.0, ginf = 0.0;
  for (const auto& [x, v] : g.raw()) {
    g2 += static_cast<double>(v) * static_cast<double>(v);
    ginf = std::max(ginf, std::abs(static_cast<double>(v)));
  }

  out.push_back(CheckResult::leq("g_bound.mass_upper", CheckKind::Explicit, f0sum * f0sum,
                                 static_cast<double>(a.size())));
  if (ginf > 0.0)
    out.push_back(
        CheckResult::leq("g_bound.mass_lower_inf", CheckKind::Explicit, mu / ginf, f0sum * f0sum));
  if (g2 > 0.0)
    out.push_back(CheckResult::leq("g_bound.mass_lower_l2", CheckKind::Explicit, mu * mu / g2,
                                   f0sum * f0sum));
  if (mu > 0.0)
    out.push_back(CheckResult::leq("g_bound.l_infty", CheckKind::Explicit, f0inf,
                                   std::sqrt(g2) / mu));
  if (g1 != nullptr) {
    GroupFunction conv = correlate(*g1, *g1);
    bool match = true;
    for (const auto& [x, v] : conv.raw())
      if (g.at(x) != v) match = false;
    for (const auto& [x, v] : g.raw())
      if (conv.at(x) != v) match = false;
    if (!match)
      throw std::invalid_argument("g_bound_checks: supplied g1 does not satisfy g = g1 o g1");
    double g1n = 0.0;
    for (const auto& [x, v] : g1->raw()) g1n += static_cast<double>(v) * static_cast<double>(v);
    if (mu > 0.0)
      out.push_back(CheckResult::leq("g_bound.l_infty_factored", CheckKind::Explicit, f0inf,
                                     std::sqrt(g1n) / std::sqrt(mu)));
  }

  // main-eigenvalue lower bound for the autocorrelation operator
  PaperOperator aa_op = build_sym_operator(OperatorKind::SymDiff, a, autocorrelation(a));
  double mu_aa = mu0(aa_op);
  if (g2 > 0.0 && ginf > 0.0)
    out.push_back(CheckResult::leq("mu_energy_mu_g", CheckKind::Explicit, mu * mu * mu / (g2 * ginf),
                                   mu_aa));
  return out;
}

CheckResult triangles_identity_check(const FiniteSet& a, const GroupFunction& g1,
                                     const GroupFunction& g2) {
  if (!g1.is_even() || !g2.is_even())
    throw std::invalid_argument("triangles_identity_check: weights must be even");
  const auto& d = a.descriptor();
  i128 lhs = 0;
  for (const auto& x : a)
    for (const auto& y : a) {
      i64 v1 = g1.at(group_sub(d, x, y));
      if (v1 == 0) continue;
      for (const auto& z : a) {
        i64 v2 = g1.at(group_sub(d, x, z));
        if (v2 == 0) continue;
        lhs += i128(v1) * v2 * g2.at(group_sub(d, y, z));
      }
    }

  PaperOperator op1 = build_sym_operator(OperatorKind::SymDiff, a, g1);
  PaperOperator op2 = build_sym_operator(OperatorKind::SymDiff, a, g2);
  SpectralDecomposition dec = decompose(op1);
  double rhs = 0.0;
  for (std::size_t j = 0; j < dec.values.size(); ++j) {
    std::vector<double> f(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) f[i] = dec.left(i, j);
    rhs += dec.values[j] * dec.values[j] * dot(f, op2.mat.apply(f));
  }
  return CheckResult::eq("triangles_identity", CheckKind::Exact, static_cast<double>(lhs), rhs);
}

CheckResult rect_vs_sym_check(const FiniteSet& a, const GroupFunction& g) {
  if (!g.is_even()) throw std::invalid_argument("rect_vs_sym_check: g must be even");
  PaperOperator rect = build_operator(OperatorKind::RectDiff, a, a, to_real(g));
  PaperOperator sym = build_sym_operator(OperatorKind::SymDiff, a, g);
  SpectralDecomposition rdec = decompose(rect);
  SpectralDecomposition sdec = decompose(sym);
  std::vector<double> lam = rdec.values;
  std::vector<double> mu(sdec.values.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = std::abs(sdec.values[i]);
  std::sort(lam.rbegin(), lam.rend());
  std::sort(mu.rbegin(), mu.rend());
  double worst = 0.0;
  for (std::size_t i = 0; i < lam.size(); ++i) worst = std::max(worst, std::abs(lam[i] - mu[i]));
  double tol = 1e-8 * (1.0 + (lam.empty() ? 0.0 : lam[0]));
  return CheckResult::leq("rect_vs_sym_spectrum", CheckKind::Exact, worst, tol, 0.0);
}

CheckResult rayleigh_energy_check(const FiniteSet& a) {
  PaperOperator op = build_sym_operator(OperatorKind::SymDiff, a, autocorrelation(a));
  double mu = mu0(op);
  double bound = static_cast<double>(energy(a)) / static_cast<double>(a.size());
  return CheckResult::leq("rayleigh_energy", CheckKind::Explicit, bound, mu);
}

CheckResult rect_norm4_check(const DenseMatrix& m) {
  SingularDecomp svd = singular_decompose(m);
  double lhs = 0.0;
  for (double s : svd.values) lhs += s * s * s * s;
  double rhs = 0.0;
  for (std::size_t x = 0; x < m.rows(); ++x)
    for (std::size_t xp = 0; xp < m.rows(); ++xp) {
      double inner = 0.0;
      for (std::size_t y = 0; y < m.cols(); ++y) inner += m(x, y) * m(xp, y);
      rhs += inner * inner;
    }
  return CheckResult::eq("rect_norm4", CheckKind::Exact, lhs, rhs);
}

std::vector<CheckResult> decomposition_invariants(const SpectralDecomposition& dec,
                                                  const std::string& prefix) {
  std::vector<CheckResult> out;
  out.push_back(CheckResult::leq(prefix + ".orthonormality", CheckKind::Exact,
                                 dec.orthonormality_residual, 1e-9, 0.0));
  out.push_back(CheckResult::leq(prefix + ".reconstruction", CheckKind::Exact,
                                 dec.reconstruction_residual, 1e-9, 0.0));
  out.push_back(
      CheckResult::leq(prefix + ".trace2", CheckKind::Exact, dec.trace2_residual, 1e-9, 0.0));
  out.push_back(
      CheckResult::leq(prefix + ".trace4", CheckKind::Exact, dec.trace4_residual, 1e-9, 0.0));
  if (!dec.singular)
    out.push_back(
        CheckResult::leq(prefix + ".trace1", CheckKind::Exact, dec.trace1_residual, 1e-9, 0.0));
  return out;
}

}  // namespace hel
