#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hel {

using i64 = std::int64_t;
using i128 = __int128;
using u64 = std::uint64_t;

struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Addition with overflow detection; all desk-scale inputs stay far below
/// the 64-bit range, so a trip here indicates a misuse.
inline i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw overflow_error("int64 addition overflow");
  return out;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw overflow_error("int64 multiplication overflow");
  return out;
}

inline i64 checked_neg(i64 a) {
  if (a == INT64_MIN) throw overflow_error("int64 negation overflow");
  return -a;
}

/// Narrow a 128-bit accumulator back to int64, throwing if it does not fit.
inline i64 narrow_i128(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw overflow_error("accumulator exceeds int64");
  return static_cast<i64>(v);
}

inline i64 ipow_checked(i64 base, int exp) {
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline i64 igcd(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// FNV-1a, used for input digests and hash maps keyed by coordinate vectors.
inline u64 fnv1a(const void* data, std::size_t n, u64 h = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline u64 hash_i64_span(const i64* p, std::size_t n) { return fnv1a(p, n * sizeof(i64)); }

inline std::string hex_digest(u64 h) {
  static const char* k = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = k[h & 0xf];
    h >>= 4;
  }
  return s;
}

/// Deterministic RNG for seeded tests and sampled modes.
using Rng = std::mt19937_64;

inline double rel_err(double a, double b) {
  double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

}  // namespace hel
