#pragma once

#include <cmath>
#include <unordered_map>
#include <vector>

#include "hel/group.hpp"

namespace hel {

/// Finitely supported function on a group.  V is int64 for exact work and
/// double for real-exponent weights.  Zero values are never stored.
template <class V>
class FunctionT {
 public:
  FunctionT() = default;
  explicit FunctionT(GroupDescriptor d) : desc_(std::move(d)) {}

  const GroupDescriptor& descriptor() const { return desc_; }
  std::size_t support_size() const { return supp_.size(); }
  bool empty() const { return supp_.empty(); }

  V at(const GroupElement& x) const {
    auto it = supp_.find(x);
    return it == supp_.end() ? V(0) : it->second;
  }

  void add(const GroupElement& x, V v) {
    if (v == V(0)) return;
    auto [it, inserted] = supp_.try_emplace(x, v);
    if (!inserted) {
      it->second += v;
      if (it->second == V(0)) supp_.erase(it);
    }
  }

  void set(const GroupElement& x, V v) {
    if (v == V(0)) {
      supp_.erase(x);
    } else {
      supp_[x] = v;
    }
  }

  /// Support in canonical (lexicographic) order; use for all deterministic
  /// outputs and reductions sensitive to float ordering.
  std::vector<std::pair<GroupElement, V>> items_sorted() const {
    std::vector<std::pair<GroupElement, V>> out(supp_.begin(), supp_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  const std::unordered_map<GroupElement, V, ElemHash>& raw() const { return supp_; }

  V total_mass() const {
    V s = V(0);
    for (const auto& [k, v] : supp_) s += v;
    return s;
  }

  static FunctionT indicator(const FiniteSet& a) {
    FunctionT f(a.descriptor());
    for (const auto& e : a) f.set(e, V(1));
    return f;
  }

  FiniteSet support_set() const {
    std::vector<GroupElement> elems;
    elems.reserve(supp_.size());
    for (const auto& [k, v] : supp_) elems.push_back(k);
    return FiniteSet(desc_, std::move(elems));
  }

  bool is_even() const {
    for (const auto& [x, v] : supp_)
      if (at(group_neg(desc_, x)) != v) return false;
    return true;
  }

  bool is_nonnegative() const {
    for (const auto& [x, v] : supp_)
      if (v < V(0)) return false;
    return true;
  }

 private:
  GroupDescriptor desc_;
  std::unordered_map<GroupElement, V, ElemHash> supp_;
};

using GroupFunction = FunctionT<i64>;
using RealFunction = FunctionT<double>;

inline RealFunction to_real(const GroupFunction& f) {
  RealFunction r(f.descriptor());
  for (const auto& [x, v] : f.raw()) r.set(x, static_cast<double>(v));
  return r;
}

/// f(x)^p pointwise on the support (real exponent).
inline RealFunction pointwise_pow(const GroupFunction& f, double p) {
  RealFunction r(f.descriptor());
  for (const auto& [x, v] : f.raw()) r.set(x, std::pow(static_cast<double>(v), p));
  return r;
}

/// Integer-valued function restricted to a set.
inline GroupFunction restrict_to(const GroupFunction& f, const FiniteSet& s) {
  GroupFunction r(f.descriptor());
  for (const auto& [x, v] : f.raw())
    if (s.contains(x)) r.set(x, v);
  return r;
}

/// Function on (k-1)-tuples of group elements, stored with flattened keys.
/// Materialization is physically capped; see convolution.hpp.
class TupleFunction {
 public:
  TupleFunction() = default;
  TupleFunction(GroupDescriptor d, int arity)
      : desc_(std::move(d)), arity_(arity), width_(desc_.leaf_count()) {
    if (arity < 1) throw std::invalid_argument("tuple arity must be >= 1");
  }

  const GroupDescriptor& descriptor() const { return desc_; }
  int arity() const { return arity_; }
  std::size_t support_size() const { return supp_.size(); }

  /// Flattened key: concatenated canonical coordinates of the tuple parts.
  using Key = std::vector<i64>;

  Key make_key(const std::vector<GroupElement>& tuple) const {
    if (tuple.size() != static_cast<std::size_t>(arity_))
      throw std::invalid_argument("tuple arity mismatch");
    Key k;
    k.reserve(static_cast<std::size_t>(arity_) * width_);
    for (const auto& e : tuple) {
      if (e.size() != width_) throw std::invalid_argument("tuple element arity mismatch");
      k.insert(k.end(), e.begin(), e.end());
    }
    return k;
  }

  std::vector<GroupElement> split_key(const Key& k) const {
    std::vector<GroupElement> tuple(static_cast<std::size_t>(arity_));
    for (int i = 0; i < arity_; ++i)
      tuple[static_cast<std::size_t>(i)] =
          GroupElement(k.begin() + static_cast<long>(i * width_),
                       k.begin() + static_cast<long>((i + 1) * width_));
    return tuple;
  }

  i64 at_key(const Key& k) const {
    auto it = supp_.find(k);
    return it == supp_.end() ? 0 : it->second;
  }

  i64 at(const std::vector<GroupElement>& tuple) const { return at_key(make_key(tuple)); }

  void add_key(const Key& k, i64 v) {
    if (v == 0) return;
    auto [it, inserted] = supp_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) supp_.erase(it);
    }
  }

  std::vector<std::pair<Key, i64>> items_sorted() const {
    std::vector<std::pair<Key, i64>> out(supp_.begin(), supp_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  const std::unordered_map<Key, i64, ElemHash>& raw() const { return supp_; }

  i64 total_mass() const {
    i64 s = 0;
    for (const auto& [k, v] : supp_) s = checked_add(s, v);
    return s;
  }

  /// Debug dump, tuples sorted lexicographically.
  std::string to_json() const;

 private:
  GroupDescriptor desc_;
  int arity_ = 1;
  std::size_t width_ = 1;
  std::unordered_map<Key, i64, ElemHash> supp_;
};

/// Sorted list of tuple keys; the set-of-tuples companion to TupleFunction.
struct TupleSet {
  GroupDescriptor desc;
  int arity = 1;
  std::vector<TupleFunction::Key> keys;  // sorted, deduplicated

  std::size_t size() const { return keys.size(); }
  bool contains(const TupleFunction::Key& k) const {
    return std::binary_search(keys.begin(), keys.end(), k);
  }
  void finish() {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  }
};

}  // namespace hel
