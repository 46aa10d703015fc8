#pragma once

// The formula-versus-oracle suite behind `ssp verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ssp/exact.hpp"

namespace ssp {

enum class VerifyLevel { Quick, Full };

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  VerifyLevel level = VerifyLevel::Quick;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  /// nullptr when everything passed.
  const VerifyCheck* first_failure() const;
};

/// Formulas under test can be swapped out, so the harness itself can be
/// tested against a deliberately broken formula.
struct VerifyHooks {
  std::function<BigInt(unsigned g, std::uint64_t n)> gsp_order;
};

VerifyHooks default_verify_hooks();

VerifyReport run_verify(VerifyLevel level, const VerifyHooks& hooks = default_verify_hooks());

}  // namespace ssp
