#pragma once

#include <map>
#include <string>

#include "hel/convolution.hpp"

namespace hel {

/// E(A,B): number of quadruples a1+b1 = a2+b2.
i64 energy_pair(const FiniteSet& a, const FiniteSet& b);
inline i64 energy(const FiniteSet& a) { return energy_pair(a, a); }

/// E_s(A) = sum_x |A cap (A-x)|^s for real s >= 1.
double energy_moment(const FiniteSet& a, double s);
/// Exact value for integer s.
i64 energy_moment_int(const FiniteSet& a, int s);

/// E_k(A,B) = sum_x (A o A)(x) (B o B)(x)^{k-1}, real k >= 1.
double energy_pair_moment(const FiniteSet& a, const FiniteSet& b, double k);
i64 energy_pair_moment_int(const FiniteSet& a, const FiniteSet& b, int k);

/// T_k(A) = sum_x (A *_{k-1} A)^2(x).
i64 t_energy(const FiniteSet& a, int k);

/// sigma_k(A) = (A *_{k-1} A)(0), the k-tuples summing to zero.
i64 sigma_k(const FiniteSet& a, int k);

/// sigma_psi(A) = sum_x psi(x) (A o A)(x).
i64 sigma_weighted(const GroupFunction& psi, const FiniteSet& a);
double sigma_weighted(const RealFunction& psi, const FiniteSet& a);
/// sigma_P(A) for a set P.
i64 sigma_set(const FiniteSet& p, const FiniteSet& a);

/// E^P_k(A) = sum_{s in P} |A_s|^k (real k; the k=2 case is E_P(A)).
double restricted_energy(const FiniteSet& a, const FiniteSet& p, double k);
i64 restricted_energy_int(const FiniteSet& a, const FiniteSet& p, int k);

enum class TupleEnergyMode { SquaredCk, PlainCk };

/// E^Pcal_k(A) (squared mode) or sigma_Pcal(A) (plain mode) for a tuple set.
i64 tuple_restricted_energy(const FiniteSet& a, const TupleSet& tuples, TupleEnergyMode mode,
                            const TupleCaps& caps = {});

/// A_s = A cap (A - s_1) cap ... cap (A - s_{k-1}).
FiniteSet iterated_intersection(const FiniteSet& a, const std::vector<GroupElement>& shifts);
/// B-based variant: base cap shifted copies of A.
FiniteSet iterated_intersection_in(const FiniteSet& a, const FiniteSet& base,
                                   const std::vector<GroupElement>& shifts);

struct EkIdentityResult {
  i64 lhs = 0;  // sum over (k-1)- and (l-1)-tuples of E(A_s, A_t)
  i64 rhs = 0;  // E_{k+l}(A)
  bool pass = false;
};

/// Lemma-level identity sum_{s,t} E(A_s,A_t) = E_{k+l}(A), evaluated exactly.
EkIdentityResult ek_identity_check(const FiniteSet& a, int k, int l,
                                   std::size_t enumeration_cap = 1u << 24);

/// Multiplicative energy E^x_s over exact ratio keys.  Integers use reduced
/// fractions; Z/N uses modular division and requires invertible elements.
double multiplicative_energy(const FiniteSet& a, double s);
i64 multiplicative_energy_int(const FiniteSet& a, int s);

/// All scalar statistics of a set plus the derived normalizations.
struct EnergyReport {
  std::string input_digest;
  std::map<std::string, i64> exact;    // E_1, E, E_3, E_4, T_2..T_4, sigma_2..sigma_4, ...
  std::map<std::string, double> real;  // E_{3/2} and friends
  std::map<std::string, double> derived;  // K, M, M_T4, K_half, L

  std::string to_json() const;
};

EnergyReport compute_energy_report(const FiniteSet& a);

/// Number of dyadic levels needed to cover the value range [1, max] with
/// buckets (2^{i-1}, 2^i]; at least 1.
int dyadic_level_count(i64 max_value);

}  // namespace hel
