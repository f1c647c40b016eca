#pragma once

#include "hel/group.hpp"

namespace hel {

enum class ConvexKind { Squares, Power, RandomGaps };

/// Strictly convex integer sequence of length n; the gap sequence is
/// asserted strictly increasing after generation.
FiniteSet gen_convex(ConvexKind kind, int n, double alpha = 2.0, u64 seed = 0);

/// Index-d multiplicative subgroup of (Z/p)^*, via the smallest primitive
/// root.  p prime <= 10^6, d | p-1.  Closure under multiplication asserted.
FiniteSet gen_mult_subgroup(i64 p, i64 d);

enum class HPlusMode { DisjointUnion, DirectSum };

struct HPlusResult {
  FiniteSet set;
  FiniteSet subgroup;     // H
  FiniteSet dissociated;  // Lambda (basis vectors outside H)
};

/// H a coordinate subspace of F_2^n (first hdim coordinates) and Lambda the
/// next `lambda` standard basis vectors.  DisjointUnion returns H u Lambda;
/// DirectSum returns {h + l}.
HPlusResult gen_h_plus_dissociated(int n, int hdim, int lambda, HPlusMode mode);

struct SubgroupUnionResult {
  FiniteSet set;
  std::vector<FiniteSet> parts;
};

/// Union of k totally disjoint coordinate-block subspaces of F_2^n, each of
/// dimension hdim; |H_1 + ... + H_k| = prod |H_j| asserted.
SubgroupUnionResult gen_disjoint_subgroup_union(int n, int k, int hdim);

/// Uniform n-subset without replacement, seed-deterministic.  Z-kind groups
/// sample from the window [0, 8n).
FiniteSet gen_random(const GroupDescriptor& group, int n, u64 seed);

/// Arithmetic progression {0, step, ..., (n-1) step} in Z.
FiniteSet gen_arithmetic_progression(int n, i64 step = 1);

/// Tags the harness uses to route family-specific checks.
enum class FamilyTag {
  Convex,
  MultSubgroup,
  HPlusDissociated,
  DisjointSubgroupUnion,
  ArithmeticProgression,
  Subgroup,
  Random,
};

const char* to_string(FamilyTag tag);

/// Parse "family:key=val:..." strings, e.g. "convex:kind=squares:n=64",
/// "subgroup:m=3", "hplus:n=12:hdim=6:lambda=6:mode=union",
/// "union:n=12:k=3:hdim=3", "random:group=z:n=24:seed=7", "ap:n=16",
/// "mult-subgroup:p=13:d=3".
struct FamilySpec {
  FamilyTag tag = FamilyTag::Random;
  std::string text;
  FiniteSet set;
};

FamilySpec make_family(const std::string& spec);

}  // namespace hel
