#include "hel/energies.hpp"

#include <cmath>
#include <functional>

#include <json.hpp>

namespace hel {

i64 energy_pair(const FiniteSet& a, const FiniteSet& b) {
  if (a.descriptor() != b.descriptor())
    throw std::invalid_argument("energy_pair: descriptor mismatch");
  GroupFunction ab = cross_correlation(a, b);
  i128 acc = 0;
  for (const auto& [x, v] : ab.raw()) acc += i128(v) * v;
  return narrow_i128(acc);
}

double energy_moment(const FiniteSet& a, double s) {
  if (s < 1.0) throw std::invalid_argument("energy_moment: s >= 1");
  if (a.empty()) throw std::invalid_argument("energy_moment: empty set");
  GroupFunction aa = autocorrelation(a);
  double acc = 0.0;
  for (const auto& [x, v] : aa.items_sorted()) acc += std::pow(static_cast<double>(v), s);
  return acc;
}

i64 energy_moment_int(const FiniteSet& a, int s) {
  if (s < 1) throw std::invalid_argument("energy_moment_int: s >= 1");
  GroupFunction aa = autocorrelation(a);
  i128 acc = 0;
  for (const auto& [x, v] : aa.raw()) {
    i128 p = 1;
    for (int i = 0; i < s; ++i) p *= v;
    acc += p;
  }
  return narrow_i128(acc);
}

double energy_pair_moment(const FiniteSet& a, const FiniteSet& b, double k) {
  if (k < 1.0) throw std::invalid_argument("energy_pair_moment: k >= 1");
  if (a.descriptor() != b.descriptor())
    throw std::invalid_argument("energy_pair_moment: descriptor mismatch");
  GroupFunction aa = autocorrelation(a);
  GroupFunction bb = autocorrelation(b);
  double acc = 0.0;
  for (const auto& [x, v] : aa.items_sorted()) {
    i64 w = bb.at(x);
    if (w != 0) acc += static_cast<double>(v) * std::pow(static_cast<double>(w), k - 1.0);
  }
  return acc;
}

i64 energy_pair_moment_int(const FiniteSet& a, const FiniteSet& b, int k) {
  if (k < 1) throw std::invalid_argument("energy_pair_moment_int: k >= 1");
  if (a.descriptor() != b.descriptor())
    throw std::invalid_argument("energy_pair_moment_int: descriptor mismatch");
  GroupFunction aa = autocorrelation(a);
  GroupFunction bb = autocorrelation(b);
  i128 acc = 0;
  for (const auto& [x, v] : aa.raw()) {
    i64 w = bb.at(x);
    if (w == 0 && k > 1) continue;
    i128 p = v;
    for (int i = 1; i < k; ++i) p *= w;
    acc += p;
  }
  return narrow_i128(acc);
}

i64 t_energy(const FiniteSet& a, int k) {
  if (k < 1) throw std::invalid_argument("t_energy: k >= 1");
  if (k == 1) return static_cast<i64>(a.size());  // solutions of a_1 = a'_1
  GroupFunction conv = convolve_kfold(GroupFunction::indicator(a), k - 1);
  i128 acc = 0;
  for (const auto& [x, v] : conv.raw()) acc += i128(v) * v;
  return narrow_i128(acc);
}

i64 sigma_k(const FiniteSet& a, int k) {
  if (k < 1) throw std::invalid_argument("sigma_k: k >= 1");
  GroupFunction conv = convolve_kfold(GroupFunction::indicator(a), k - 1);
  return conv.at(group_zero(a.descriptor()));
}

i64 sigma_weighted(const GroupFunction& psi, const FiniteSet& a) {
  if (psi.descriptor() != a.descriptor())
    throw std::invalid_argument("sigma_weighted: descriptor mismatch");
  GroupFunction aa = autocorrelation(a);
  i128 acc = 0;
  for (const auto& [x, v] : psi.raw()) acc += i128(v) * aa.at(x);
  return narrow_i128(acc);
}

double sigma_weighted(const RealFunction& psi, const FiniteSet& a) {
  if (psi.descriptor() != a.descriptor())
    throw std::invalid_argument("sigma_weighted: descriptor mismatch");
  GroupFunction aa = autocorrelation(a);
  double acc = 0.0;
  for (const auto& [x, v] : psi.items_sorted()) acc += v * static_cast<double>(aa.at(x));
  return acc;
}

i64 sigma_set(const FiniteSet& p, const FiniteSet& a) {
  GroupFunction aa = autocorrelation(a);
  i128 acc = 0;
  for (const auto& x : p) acc += aa.at(x);
  return narrow_i128(acc);
}

double restricted_energy(const FiniteSet& a, const FiniteSet& p, double k) {
  GroupFunction aa = autocorrelation(a);
  double acc = 0.0;
  for (const auto& x : p) {
    i64 v = aa.at(x);
    if (v != 0) acc += std::pow(static_cast<double>(v), k);
  }
  return acc;
}

i64 restricted_energy_int(const FiniteSet& a, const FiniteSet& p, int k) {
  GroupFunction aa = autocorrelation(a);
  i128 acc = 0;
  for (const auto& x : p) {
    i128 t = 1;
    i64 v = aa.at(x);
    if (v == 0) continue;
    for (int i = 0; i < k; ++i) t *= v;
    acc += t;
  }
  return narrow_i128(acc);
}

i64 tuple_restricted_energy(const FiniteSet& a, const TupleSet& tuples, TupleEnergyMode mode,
                            const TupleCaps& caps) {
  TupleFunction ck = generalized_convolution_of_set(a, tuples.arity + 1, caps);
  i128 acc = 0;
  for (const auto& key : tuples.keys) {
    i64 v = ck.at_key(key);
    acc += mode == TupleEnergyMode::SquaredCk ? i128(v) * v : i128(v);
  }
  return narrow_i128(acc);
}

FiniteSet iterated_intersection(const FiniteSet& a, const std::vector<GroupElement>& shifts) {
  return iterated_intersection_in(a, a, shifts);
}

FiniteSet iterated_intersection_in(const FiniteSet& a, const FiniteSet& base,
                                   const std::vector<GroupElement>& shifts) {
  const auto& d = a.descriptor();
  std::vector<GroupElement> out;
  for (const auto& x : base) {
    bool ok = true;
    for (const auto& s : shifts) {
      if (!a.contains(group_add(d, x, s))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return FiniteSet(d, std::move(out));
}

namespace {

// All nonempty iterated intersections A_s over m-tuples s with each
// coordinate in A-A, visited in canonical order.
void for_each_intersection(const FiniteSet& a, const std::vector<GroupElement>& diff_support,
                           int m, const FiniteSet& current,
                           const std::function<void(const FiniteSet&)>& fn) {
  if (m == 0) {
    fn(current);
    return;
  }
  for (const auto& s : diff_support) {
    FiniteSet next = iterated_intersection_in(a, current, {s});
    if (next.empty()) continue;
    for_each_intersection(a, diff_support, m - 1, next, fn);
  }
}

}  // namespace

EkIdentityResult ek_identity_check(const FiniteSet& a, int k, int l,
                                   std::size_t enumeration_cap) {
  if (k < 1 || l < 1) throw std::invalid_argument("ek_identity_check: k,l >= 1");
  GroupFunction aa = autocorrelation(a);
  std::vector<GroupElement> diff_support;
  for (const auto& [x, v] : aa.items_sorted()) diff_support.push_back(x);

  double tuples = std::pow(static_cast<double>(diff_support.size()),
                           static_cast<double>(k - 1 + l - 1));
  if (tuples * static_cast<double>(a.size()) > static_cast<double>(enumeration_cap))
    throw std::invalid_argument("ek_identity_check: enumeration cap exceeded");

  // Accumulate F_m(x) = sum over (m-1)-tuples s of (A_s o A_s)(x); then
  // sum_{s,t} E(A_s, A_t) = sum_x F_k(x) F_l(x).
  auto accumulate = [&](int m) {
    GroupFunction f(a.descriptor());
    for_each_intersection(a, diff_support, m - 1, a, [&](const FiniteSet& as) {
      GroupFunction c = autocorrelation(as);
      for (const auto& [x, v] : c.raw()) f.add(x, v);
    });
    return f;
  };
  GroupFunction fk = accumulate(k);
  GroupFunction fl = k == l ? fk : accumulate(l);
  i128 lhs = 0;
  for (const auto& [x, v] : fk.raw()) lhs += i128(v) * fl.at(x);

  EkIdentityResult r;
  r.lhs = narrow_i128(lhs);
  r.rhs = energy_moment_int(a, k + l);
  r.pass = r.lhs == r.rhs;
  return r;
}

namespace {

// Exact ratio key a/b: reduced fraction for Z, modular quotient for Z/N.
std::pair<i64, i64> ratio_key_z(i64 a, i64 b) {
  i64 g = igcd(a, b);
  a /= g;
  b /= g;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

i64 mod_inverse(i64 a, i64 n) {
  i64 t = 0, new_t = 1, r = n, new_r = a % n;
  if (new_r < 0) new_r += n;
  while (new_r != 0) {
    i64 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("multiplicative_energy: non-invertible element mod N");
  if (t < 0) t += n;
  return t;
}

std::map<std::pair<i64, i64>, i64> ratio_counts(const FiniteSet& a) {
  const auto& d = a.descriptor();
  if (d.leaf_count() != 1 ||
      (d.kind != GroupKind::Integers && d.kind != GroupKind::CyclicModN))
    throw std::invalid_argument("multiplicative_energy: needs Z or Z/N elements");
  std::map<std::pair<i64, i64>, i64> counts;
  for (const auto& x : a) {
    if (x[0] == 0) throw std::invalid_argument("multiplicative_energy: zero element present");
    for (const auto& y : a) {
      std::pair<i64, i64> key;
      if (d.kind == GroupKind::Integers) {
        key = ratio_key_z(x[0], y[0]);
      } else {
        key = {checked_mul(x[0], mod_inverse(y[0], d.modulus)) % d.modulus, 0};
      }
      ++counts[key];
    }
  }
  return counts;
}

}  // namespace

double multiplicative_energy(const FiniteSet& a, double s) {
  if (s < 1.0) throw std::invalid_argument("multiplicative_energy: s >= 1");
  double acc = 0.0;
  for (const auto& [k, c] : ratio_counts(a)) acc += std::pow(static_cast<double>(c), s);
  return acc;
}

i64 multiplicative_energy_int(const FiniteSet& a, int s) {
  if (s < 1) throw std::invalid_argument("multiplicative_energy: s >= 1");
  i128 acc = 0;
  for (const auto& [k, c] : ratio_counts(a)) {
    i128 p = 1;
    for (int i = 0; i < s; ++i) p *= c;
    acc += p;
  }
  return narrow_i128(acc);
}

int dyadic_level_count(i64 max_value) {
  int l = 1;
  while ((i64(1) << l) < max_value) ++l;
  return l;
}

EnergyReport compute_energy_report(const FiniteSet& a) {
  if (a.empty()) throw std::invalid_argument("energy report: empty set");
  EnergyReport r;
  r.input_digest = hex_digest(a.digest());
  const double n = static_cast<double>(a.size());

  r.exact["size"] = static_cast<i64>(a.size());
  r.exact["E_1"] = energy_moment_int(a, 1);
  r.exact["E"] = energy_moment_int(a, 2);
  r.exact["E_3"] = energy_moment_int(a, 3);
  r.exact["E_4"] = energy_moment_int(a, 4);
  r.exact["T_2"] = t_energy(a, 2);
  r.exact["T_3"] = t_energy(a, 3);
  r.exact["T_4"] = t_energy(a, 4);
  r.exact["sigma_2"] = sigma_k(a, 2);
  r.exact["sigma_3"] = sigma_k(a, 3);
  r.exact["sigma_4"] = sigma_k(a, 4);
  r.exact["diff_set_size"] = static_cast<i64>(sumset(a, a, 1, -1).size());
  r.exact["sum_set_size"] = static_cast<i64>(sumset(a, a, 1, 1).size());

  r.real["E_3/2"] = energy_moment(a, 1.5);
  r.real["E_5/2"] = energy_moment(a, 2.5);

  const double e2 = static_cast<double>(r.exact["E"]);
  const double e3 = static_cast<double>(r.exact["E_3"]);
  const double t4 = static_cast<double>(r.exact["T_4"]);
  const double k_norm = n * n * n / e2;
  r.derived["K"] = k_norm;
  r.derived["M"] = e3 * k_norm * k_norm / std::pow(n, 4.0);
  r.derived["M_T4"] = t4 * std::pow(k_norm, 3.0) / std::pow(n, 7.0);
  const double k_half = std::pow(std::pow(n, 2.5) / r.real["E_3/2"], 2.0);
  r.derived["K_half"] = k_half;
  // dyadic level count for the k=2 dual machinery
  int L = 1;
  while (std::pow(2.0, L) * e2 < 4.0 * std::pow(n, 3.0)) ++L;
  r.derived["L"] = static_cast<double>(L);
  return r;
}

std::string EnergyReport::to_json() const {
  nlohmann::json j;
  j["input_digest"] = input_digest;
  for (const auto& [k, v] : exact) j["quantities"][k] = v;
  for (const auto& [k, v] : real) j["quantities"][k] = v;
  for (const auto& [k, v] : derived) j["derived"][k] = v;
  return j.dump(2);
}

}  // namespace hel
