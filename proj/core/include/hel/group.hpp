#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hel/util.hpp"

namespace hel {

enum class GroupKind { Integers, CyclicModN, BooleanCube, Product };

/// Description of a supported abelian group: Z (bounded window of int64),
/// Z/N, F_2^n, or a finite ordered product of those.
///
/// Elements are coordinate vectors with one int64 per *leaf* factor, in
/// declaration order.  F_2^n coordinates are stored as an n-bit mask.
class GroupDescriptor {
 public:
  GroupKind kind = GroupKind::Integers;
  i64 modulus = 0;    // CyclicModN
  int dimension = 0;  // BooleanCube
  std::vector<GroupDescriptor> factors;  // Product

  static GroupDescriptor integers();
  static GroupDescriptor cyclic(i64 n);
  static GroupDescriptor boolean_cube(int n);
  static GroupDescriptor product(std::vector<GroupDescriptor> fs);
  /// t-fold product of this descriptor (tensor-power domain).
  GroupDescriptor power(int t) const;

  bool operator==(const GroupDescriptor& o) const;
  bool operator!=(const GroupDescriptor& o) const { return !(*this == o); }

  std::size_t leaf_count() const;
  /// Group order when finite; nullopt when a Z leaf is present.
  std::optional<u64> size() const;

  std::string to_string() const;
};

/// One int64 coordinate per leaf factor.
using GroupElement = std::vector<i64>;

struct ElemHash {
  std::size_t operator()(const GroupElement& e) const {
    return static_cast<std::size_t>(hash_i64_span(e.data(), e.size()));
  }
};

GroupElement group_zero(const GroupDescriptor& d);
GroupElement group_add(const GroupDescriptor& d, const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const GroupDescriptor& d, const GroupElement& a);
GroupElement group_sub(const GroupDescriptor& d, const GroupElement& a, const GroupElement& b);
/// Reduce coordinates to canonical form (residues in [0,N), masked bits).
GroupElement group_canonical(const GroupDescriptor& d, GroupElement a);
bool element_in_group(const GroupDescriptor& d, const GroupElement& a);

/// All elements of a finite group, in canonical (lexicographic) order.
/// Throws when the group is infinite or larger than `cap`.
std::vector<GroupElement> enumerate_group(const GroupDescriptor& d, u64 cap = 1u << 20);

/// Element of the t-fold product built by concatenating coordinates.
GroupElement concat_elements(const std::vector<const GroupElement*>& parts);

/// A finite subset of a group; elements deduplicated and sorted
/// lexicographically on canonical coordinates, so iteration order and all
/// derived reports are reproducible.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(GroupDescriptor desc, std::vector<GroupElement> elems);

  const GroupDescriptor& descriptor() const { return desc_; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const GroupElement& e) const;
  /// Index of e in canonical order, or npos.
  std::size_t index_of(const GroupElement& e) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  u64 digest() const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

 private:
  GroupDescriptor desc_;
  std::vector<GroupElement> elems_;
};

/// {-a : a in A}
FiniteSet negate_set(const FiniteSet& a);

/// {sa*a + sb*b : a in A, b in B}; signs in {+1,-1}.
FiniteSet sumset(const FiniteSet& a, const FiniteSet& b, int sign_a = 1, int sign_b = 1);

/// nA - mA by repeated sumset; n+m >= 1.
FiniteSet iterated_sumset(const FiniteSet& a, int n, int m);

/// Size-capped variant: returns nullopt as soon as the intermediate result
/// exceeds `cap` elements (growth measurements on unstructured sets).
std::optional<FiniteSet> iterated_sumset_capped(const FiniteSet& a, int n, int m, std::size_t cap);

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_intersect(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b);
/// {a + t : a in A}
FiniteSet translate(const FiniteSet& a, const GroupElement& t);
/// A as a subset of the t-fold product group: {(a,...,a)} is NOT this;
/// this is the full Cartesian power {(a_1,...,a_t)}.
FiniteSet cartesian_power(const FiniteSet& a, int t);
/// Diagonal {(a,a,...,a) : a in A} inside the t-fold product group.
FiniteSet diagonal_power(const FiniteSet& a, int t);

/// Set file JSON:
///   {"group": {"kind": "Z"|"ZmodN"|"F2n"|"product", "modulus"?, "dimension"?,
///              "factors"?}, "elements": [ints or int-arrays]}
/// The loader canonicalizes and deduplicates, recording a warning per
/// duplicate or non-canonical element.
std::string group_to_json(const GroupDescriptor& d);
std::string set_to_json(const FiniteSet& a);
FiniteSet set_from_json(const std::string& text, std::vector<std::string>* warnings = nullptr);
FiniteSet load_set_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
void save_set_file(const FiniteSet& a, const std::string& path);

}  // namespace hel
