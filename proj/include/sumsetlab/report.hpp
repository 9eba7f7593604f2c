#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumsetlab/analysis.hpp"
#include "sumsetlab/order.hpp"
#include "sumsetlab/verify.hpp"

namespace sumsetlab {

enum class Format { structured, csv };

/// Version written as the first structured line (`format: 1`).
inline constexpr int kReportFormatVersion = 1;

struct EnumerationReport {
  std::string basis;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> elements;
};

struct SumsetReport {
  std::string description;
  std::uint64_t bound = 0;
  std::uint64_t popcount = 0;
  std::uint64_t counting = 0;
  bool full = false;
  std::uint64_t gaps_lo = 0;
  std::uint64_t gaps_hi = 0;
  std::vector<std::uint64_t> gaps;
};

struct ObstructionCheck {
  ObstructionReport report;
  /// Bound of the exhaustive cross-check, 0 when none was run.
  std::uint64_t cross_check_bound = 0;
  bool cross_check_passed = true;
};

std::string render(const EnumerationReport& report, Format format);
std::string render(const SumsetReport& report, Format format);
std::string render(const OrderReport& report, Format format);
std::string render(const StabilityReport& report, Format format);
std::string render(const CountingProfile& report, Format format);
std::string render(const ObstructionCheck& report, Format format);
std::string render(const LegendreResult& report, Format format);
std::string render(const VerifySummary& report, Format format);

}  // namespace sumsetlab
