#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sumsetlab {

enum class Scale { quick, full };

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  Scale scale = Scale::quick;
  unsigned threads = 1;
  /// Harness sanity: flip this bit in every h-fold bitmap the checks compute.
  std::optional<std::uint64_t> tamper_bit;
};

struct VerifySummary {
  Scale scale = Scale::quick;
  std::uint64_t bound = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

std::uint64_t scale_bound(Scale scale);

/// Runs every theorem check in a fixed order; `on_check` sees each result as
/// soon as it is available.
VerifySummary verify_paper(const VerifyOptions& options,
                           const std::function<void(const CheckResult&)>& on_check = {});

}  // namespace sumsetlab
