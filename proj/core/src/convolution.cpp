#include "hel/convolution.hpp"

namespace hel {

GroupFunction convolve_kfold(const GroupFunction& f, int k) {
  if (k < 1) throw std::invalid_argument("convolve_kfold: k >= 1");
  GroupFunction acc = f;
  for (int i = 1; i < k; ++i) acc = convolve(acc, f);
  return acc;
}

GroupFunction autocorrelation(const FiniteSet& a) {
  return cross_correlation(a, a);
}

GroupFunction cross_correlation(const FiniteSet& a, const FiniteSet& b) {
  if (a.descriptor() != b.descriptor())
    throw std::invalid_argument("cross_correlation: descriptor mismatch");
  const auto& d = a.descriptor();
  GroupFunction out(d);
  for (const auto& x : a)
    for (const auto& y : b) out.add(group_sub(d, y, x), 1);
  return out;
}

GroupFunction sum_representation(const FiniteSet& a, const FiniteSet& b) {
  if (a.descriptor() != b.descriptor())
    throw std::invalid_argument("sum_representation: descriptor mismatch");
  const auto& d = a.descriptor();
  GroupFunction out(d);
  for (const auto& x : a)
    for (const auto& y : b) out.add(group_add(d, x, y), 1);
  return out;
}

TupleFunction generalized_convolution(const std::vector<GroupFunction>& fs,
                                      const TupleCaps& caps) {
  if (fs.size() < 2) throw std::invalid_argument("generalized convolution needs k >= 2 functions");
  const std::size_t k = fs.size();
  const auto& d = fs[0].descriptor();
  for (const auto& f : fs)
    if (f.descriptor() != d)
      throw std::invalid_argument("generalized convolution: descriptor mismatch");
  if (k - 1 > caps.max_arity)
    throw std::invalid_argument("tuple materialization cap exceeded: arity " +
                                std::to_string(k - 1));
  std::size_t cost = fs[0].support_size();
  std::size_t max_side = 0;
  for (std::size_t i = 1; i < k; ++i) {
    max_side = std::max(max_side, fs[i].support_size());
    if (fs[i].support_size() > 0 && cost > caps.max_enumeration / fs[i].support_size())
      throw std::invalid_argument("tuple materialization cap exceeded: enumeration cost");
    cost *= fs[i].support_size();
  }
  if (max_side > caps.max_base_size)
    throw std::invalid_argument("tuple materialization cap exceeded: base size " +
                                std::to_string(max_side));

  TupleFunction out(d, static_cast<int>(k - 1));
  if (cost == 0) return out;

  std::vector<std::vector<std::pair<GroupElement, i64>>> items(k);
  for (std::size_t i = 0; i < k; ++i) items[i] = fs[i].items_sorted();

  // enumerate (z, a_1, ..., a_{k-1}) over supports; tuple key x_i = a_i - z
  std::vector<std::size_t> idx(k - 1, 0);
  for (const auto& [z, f0v] : items[0]) {
    std::fill(idx.begin(), idx.end(), 0);
    bool done = false;
    while (!done) {
      i64 v = f0v;
      TupleFunction::Key key;
      key.reserve((k - 1) * d.leaf_count());
      for (std::size_t i = 0; i < k - 1; ++i) {
        const auto& [ai, fv] = items[i + 1][idx[i]];
        v = checked_mul(v, fv);
        GroupElement xi = group_sub(d, ai, z);
        key.insert(key.end(), xi.begin(), xi.end());
      }
      out.add_key(key, v);
      done = true;
      for (std::size_t j = k - 1; j-- > 0;) {
        if (++idx[j] < items[j + 1].size()) {
          done = false;
          break;
        }
        idx[j] = 0;
      }
    }
  }
  return out;
}

TupleFunction generalized_convolution_of_set(const FiniteSet& a, int k, const TupleCaps& caps) {
  if (k < 2) throw std::invalid_argument("generalized convolution needs k >= 2");
  std::vector<GroupFunction> fs(static_cast<std::size_t>(k), GroupFunction::indicator(a));
  return generalized_convolution(fs, caps);
}

TupleFunction triple_correlation_mixed(const GroupFunction& h, const FiniteSet& a,
                                       const FiniteSet& b, const TupleCaps& caps) {
  std::vector<GroupFunction> fs = {h, GroupFunction::indicator(a), GroupFunction::indicator(b)};
  return generalized_convolution(fs, caps);
}

TupleFunction tensor_power_tuple(const TupleFunction& f, int t) {
  if (t < 1) throw std::invalid_argument("tensor_power_tuple: t >= 1");
  GroupDescriptor dp = f.descriptor().power(t);
  TupleFunction out(dp, f.arity());
  auto items = f.items_sorted();
  if (items.empty()) return out;
  const std::size_t w = f.descriptor().leaf_count();
  const std::size_t arity = static_cast<std::size_t>(f.arity());
  std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
  bool done = false;
  while (!done) {
    i64 v = 1;
    // the tuple on the product group interleaves: component i of the key is
    // the concatenation of component i of each factor key
    TupleFunction::Key key(arity * w * static_cast<std::size_t>(t));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const auto& [kj, vj] = items[idx[j]];
      v = checked_mul(v, vj);
      for (std::size_t comp = 0; comp < arity; ++comp)
        for (std::size_t c = 0; c < w; ++c)
          key[comp * w * static_cast<std::size_t>(t) + j * w + c] = kj[comp * w + c];
    }
    out.add_key(key, v);
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

GroupFunction correlate_many(const std::vector<GroupFunction>& fs) {
  if (fs.empty()) throw std::invalid_argument("correlate_many: empty");
  GroupFunction acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = correlate(fs[i], acc);
  return acc;
}

TupleFunction correlate_tuple(const TupleFunction& f, const TupleFunction& g) {
  if (f.descriptor() != g.descriptor() || f.arity() != g.arity())
    throw std::invalid_argument("correlate_tuple: shape mismatch");
  const auto& d = f.descriptor();
  const std::size_t w = d.leaf_count();
  const std::size_t arity = static_cast<std::size_t>(f.arity());
  TupleFunction out(d, f.arity());
  for (const auto& [ka, va] : f.raw())
    for (const auto& [kb, vb] : g.raw()) {
      TupleFunction::Key key(arity * w);
      for (std::size_t comp = 0; comp < arity; ++comp) {
        GroupElement ea(ka.begin() + static_cast<long>(comp * w),
                        ka.begin() + static_cast<long>((comp + 1) * w));
        GroupElement eb(kb.begin() + static_cast<long>(comp * w),
                        kb.begin() + static_cast<long>((comp + 1) * w));
        GroupElement diff = group_sub(d, eb, ea);
        std::copy(diff.begin(), diff.end(), key.begin() + static_cast<long>(comp * w));
      }
      out.add_key(key, checked_mul(va, vb));
    }
  return out;
}

}  // namespace hel
