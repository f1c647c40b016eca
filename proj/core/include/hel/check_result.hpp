#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "hel/util.hpp"

namespace hel {

/// exact: identities with exact arithmetic (or 1e-9 relative where spectra
/// enter); explicit: inequalities with explicit constants, hard pass/fail;
/// asymptotic: Vinogradov-style statements, ratio reporting only.
enum class CheckKind { Exact, Explicit, Asymptotic };

inline const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Exact: return "exact";
    case CheckKind::Explicit: return "explicit";
    case CheckKind::Asymptotic: return "asymptotic";
  }
  return "?";
}

/// One verified claim.  `pass` is present iff kind != asymptotic.
struct CheckResult {
  std::string check_id;
  std::string paper_ref;
  CheckKind kind = CheckKind::Exact;
  std::string input_digest;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs/rhs with a zero guard; NaN when undefined
  std::optional<bool> pass;
  i64 runtime_ms = 0;

  static CheckResult make(std::string id, CheckKind kind, double lhs, double rhs,
                          std::optional<bool> pass) {
    CheckResult r;
    r.check_id = std::move(id);
    r.kind = kind;
    r.lhs = lhs;
    r.rhs = rhs;
    if (rhs != 0.0) {
      r.ratio = lhs / rhs;
    } else {
      r.ratio = lhs == 0.0 ? 1.0 : std::numeric_limits<double>::quiet_NaN();
    }
    r.pass = pass;
    return r;
  }

  /// lhs <= rhs within relative slack.
  static CheckResult leq(std::string id, CheckKind kind, double lhs, double rhs,
                         double rel_slack = 1e-9) {
    bool ok = lhs <= rhs + rel_slack * (std::abs(lhs) + std::abs(rhs));
    return make(std::move(id), kind, lhs, rhs, ok);
  }

  /// lhs == rhs within relative tolerance.
  static CheckResult eq(std::string id, CheckKind kind, double lhs, double rhs,
                        double rel_tol = 1e-9) {
    return make(std::move(id), kind, lhs, rhs, rel_err(lhs, rhs) <= rel_tol);
  }

  static CheckResult exact_eq(std::string id, i64 lhs, i64 rhs) {
    return make(std::move(id), CheckKind::Exact, static_cast<double>(lhs),
                static_cast<double>(rhs), lhs == rhs);
  }

  static CheckResult ratio_only(std::string id, double lhs, double rhs) {
    return make(std::move(id), CheckKind::Asymptotic, lhs, rhs, std::nullopt);
  }
};

}  // namespace hel
