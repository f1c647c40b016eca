#pragma once

#include "hel/function.hpp"

namespace hel {

/// (f*g)(x) = sum_y f(y) g(x-y)
template <class V>
FunctionT<V> convolve(const FunctionT<V>& f, const FunctionT<V>& g) {
  if (f.descriptor() != g.descriptor()) throw std::invalid_argument("convolve: descriptor mismatch");
  const auto& d = f.descriptor();
  FunctionT<V> out(d);
  for (const auto& [y, fv] : f.raw())
    for (const auto& [z, gv] : g.raw()) out.add(group_add(d, y, z), fv * gv);
  return out;
}

/// (f o g)(x) = sum_y f(y) g(y+x)
template <class V>
FunctionT<V> correlate(const FunctionT<V>& f, const FunctionT<V>& g) {
  if (f.descriptor() != g.descriptor()) throw std::invalid_argument("correlate: descriptor mismatch");
  const auto& d = f.descriptor();
  FunctionT<V> out(d);
  for (const auto& [y, fv] : f.raw())
    for (const auto& [w, gv] : g.raw()) out.add(group_sub(d, w, y), fv * gv);
  return out;
}

/// f^c(x) = f(-x)
template <class V>
FunctionT<V> reflect(const FunctionT<V>& f) {
  FunctionT<V> out(f.descriptor());
  for (const auto& [x, v] : f.raw()) out.set(group_neg(f.descriptor(), x), v);
  return out;
}

/// k-fold convolution *_k f; *_1 f = f.
GroupFunction convolve_kfold(const GroupFunction& f, int k);

/// A o A, the difference autocorrelation x -> |A cap (A-x)|.
GroupFunction autocorrelation(const FiniteSet& a);
/// A o B.
GroupFunction cross_correlation(const FiniteSet& a, const FiniteSet& b);
/// A * B.
GroupFunction sum_representation(const FiniteSet& a, const FiniteSet& b);

/// Physical caps for tuple materialization.  The generalized convolution is
/// manipulated symbolically upstream; here it gets an actual table, so both
/// the support and the enumeration cost are bounded.
struct TupleCaps {
  std::size_t max_arity = 3;            // k-1 <= 3, i.e. k <= 4
  std::size_t max_base_size = 128;      // |A| <= 128
  std::size_t max_enumeration = 1u << 25;
};

/// C_k(f_0,...,f_{k-1})(x_1,...,x_{k-1}) = sum_z f_0(z) prod_i f_i(z + x_i).
/// k = F.size() >= 2.
TupleFunction generalized_convolution(const std::vector<GroupFunction>& fs,
                                      const TupleCaps& caps = {});

/// C_k(A): all k functions equal to the indicator of A.
TupleFunction generalized_convolution_of_set(const FiniteSet& a, int k,
                                             const TupleCaps& caps = {});

/// C_3(h, A, B), arity-2 specialization feeding the operator formulas.
TupleFunction triple_correlation_mixed(const GroupFunction& h, const FiniteSet& a,
                                       const FiniteSet& b, const TupleCaps& caps = {});

/// t-fold tensor power on the t-fold product group:
/// (f tensor)(x_1..x_t) = prod_j f(x_j).
template <class V>
FunctionT<V> tensor_power(const FunctionT<V>& f, int t) {
  if (t < 1) throw std::invalid_argument("tensor_power: t >= 1");
  GroupDescriptor dp = f.descriptor().power(t);
  FunctionT<V> out(dp);
  if (f.empty()) return out;
  auto items = f.items_sorted();
  std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
  bool done = false;
  while (!done) {
    std::vector<const GroupElement*> parts;
    parts.reserve(idx.size());
    V v = V(1);
    for (auto i : idx) {
      parts.push_back(&items[i].first);
      v *= items[i].second;
    }
    out.set(concat_elements(parts), v);
    done = true;
    for (std::size_t j = idx.size(); j-- > 0;) {
      if (++idx[j] < items.size()) {
        done = false;
        break;
      }
      idx[j] = 0;
    }
  }
  return out;
}

/// Tensor power of a tuple function (tensor of C_k equals C_k of tensors).
TupleFunction tensor_power_tuple(const TupleFunction& f, int t);

/// Right-associated iterated correlation f_0 o (f_1 o (... o f_{k-1})).
GroupFunction correlate_many(const std::vector<GroupFunction>& fs);

/// Correlation of two tuple functions viewed as functions on the product
/// group (used by the sigma_k-for-C_l identity).
TupleFunction correlate_tuple(const TupleFunction& f, const TupleFunction& g);

}  // namespace hel
