// Command-line front end. Talks to the library only through sumsetlab.h.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sumsetlab/sumsetlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct ApiError {
  ssl_status status;
  std::string message;
};

void check(ssl_status status) {
  if (status != SSL_OK) throw ApiError{status, ssl_last_error_message()};
}

struct BasisDeleter {
  void operator()(ssl_basis* b) const { ssl_basis_destroy(b); }
};
struct BitmapDeleter {
  void operator()(ssl_bitmap* b) const { ssl_bitmap_destroy(b); }
};
struct ReportDeleter {
  void operator()(ssl_report* r) const { ssl_report_destroy(r); }
};
using Basis = std::unique_ptr<ssl_basis, BasisDeleter>;
using Bitmap = std::unique_ptr<ssl_bitmap, BitmapDeleter>;
using Report = std::unique_ptr<ssl_report, ReportDeleter>;

Basis parse_basis(const std::string& text) {
  ssl_basis* raw = nullptr;
  check(ssl_basis_parse(text.c_str(), &raw));
  return Basis(raw);
}

std::string take_string(char* raw) {
  std::string out(raw);
  ssl_string_free(raw);
  return out;
}

struct RunConfig {
  std::string basis;
  std::string plus;
  std::uint64_t bound = 0;
  std::uint32_t h = 1;
  std::optional<std::uint32_t> h_max;
  std::uint64_t modulus = 0;
  std::uint64_t cutoff = 0;
  std::uint32_t legendre_m = 0;
  std::uint64_t cross_check = 0;
  std::vector<std::uint64_t> grid;
  std::optional<std::uint64_t> gaps_from;
  std::optional<std::uint64_t> gaps_to;
  std::string format = "structured";
  std::string output;
  std::string bitmap_out;
  std::string scale = "quick";
  std::optional<std::uint64_t> tamper_bit;
  unsigned threads = 1;
};

unsigned resolve_threads(unsigned requested) {
  if (const char* env = std::getenv("SUMSETLAB_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("SUMSETLAB_THREADS", std::string("must be a positive integer, got '") + env + "'");
  }
  return requested;
}

void emit(const RunConfig& cfg, const ssl_report* report) {
  char* raw = nullptr;
  check(ssl_report_render(report, cfg.format == "csv" ? SSL_FORMAT_CSV : SSL_FORMAT_STRUCTURED, &raw));
  const std::string text = take_string(raw);
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw ApiError{SSL_ERROR_IO, "cannot write " + cfg.output};
}

int finish(const RunConfig& cfg, Report report) {
  emit(cfg, report.get());
  return ssl_report_passed(report.get()) ? kExitOk : kExitVerificationFailed;
}

std::uint32_t h_max_for(const RunConfig& cfg, const ssl_basis* basis) {
  if (cfg.h_max) return *cfg.h_max;
  std::uint32_t h = 0;
  check(ssl_basis_default_hmax(basis, &h));
  return h;
}

int run_enum(const RunConfig& cfg) {
  auto basis = parse_basis(cfg.basis);
  ssl_report* r = nullptr;
  check(ssl_report_enumeration(basis.get(), cfg.bound, &r));
  return finish(cfg, Report(r));
}

int run_sumset(const RunConfig& cfg) {
  auto basis = parse_basis(cfg.basis);
  ssl_bitmap* raw = nullptr;
  check(ssl_bitmap_from_basis(basis.get(), cfg.bound, &raw));
  Bitmap a(raw);
  Bitmap result;
  std::string description;
  if (!cfg.plus.empty()) {
    auto other = parse_basis(cfg.plus);
    check(ssl_bitmap_from_basis(other.get(), cfg.bound, &raw));
    Bitmap b(raw);
    check(ssl_sumset(a.get(), b.get(), cfg.threads, &raw));
    result.reset(raw);
    description = cfg.basis + " + " + cfg.plus;
  } else {
    check(ssl_hfold(a.get(), cfg.h, cfg.threads, &raw));
    result.reset(raw);
    description = std::to_string(cfg.h) + "A, A = " + cfg.basis;
  }
  if (!cfg.bitmap_out.empty()) check(ssl_bitmap_save(result.get(), cfg.bitmap_out.c_str()));

  const std::uint64_t lo = cfg.gaps_from.value_or(0);
  const std::uint64_t hi = cfg.gaps_to.value_or(std::min<std::uint64_t>(cfg.bound, 100));
  ssl_report* r = nullptr;
  check(ssl_report_sumset(result.get(), description.c_str(), lo, hi, &r));
  return finish(cfg, Report(r));
}

int run_order(const RunConfig& cfg) {
  auto basis = parse_basis(cfg.basis);
  ssl_report* r = nullptr;
  check(ssl_report_order(basis.get(), cfg.bound, h_max_for(cfg, basis.get()), cfg.threads, &r));
  return finish(cfg, Report(r));
}

int run_obstruct(const RunConfig& cfg) {
  auto basis = parse_basis(cfg.basis);
  ssl_report* r = nullptr;
  check(ssl_report_obstruction(basis.get(), cfg.h, cfg.modulus, cfg.cross_check, cfg.threads, &r));
  return finish(cfg, Report(r));
}

int run_density(const RunConfig& cfg) {
  auto basis = parse_basis(cfg.basis);
  ssl_report* r = nullptr;
  check(ssl_report_density(basis.get(), cfg.h, cfg.bound, cfg.grid.empty() ? nullptr : cfg.grid.data(),
                           cfg.grid.size(), cfg.threads, &r));
  return finish(cfg, Report(r));
}

int run_stability(const RunConfig& cfg) {
  auto basis = parse_basis(cfg.basis);
  ssl_report* r = nullptr;
  check(ssl_report_stability(basis.get(), cfg.cutoff, cfg.bound, h_max_for(cfg, basis.get()), cfg.threads, &r));
  return finish(cfg, Report(r));
}

int run_legendre(const RunConfig& cfg) {
  ssl_report* r = nullptr;
  check(ssl_report_legendre(cfg.legendre_m, cfg.bound, cfg.threads, &r));
  return finish(cfg, Report(r));
}

void print_check(const char* id, const char* title, int passed, double seconds, const char* detail, void*) {
  std::cout << (passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(14) << id << std::right << std::fixed
            << std::setprecision(2) << std::setw(7) << seconds << "s  " << title << "\n         " << detail << '\n'
            << std::flush;
}

int run_verify(const RunConfig& cfg) {
  ssl_verify_options options{cfg.scale == "full" ? 1 : 0, cfg.threads, cfg.tamper_bit ? 1 : 0,
                             cfg.tamper_bit.value_or(0)};
  std::cout << "verify-paper (" << cfg.scale << " scale)\n";
  ssl_report* raw = nullptr;
  check(ssl_report_verify_paper(&options, print_check, nullptr, &raw));
  Report report(raw);
  const bool passed = ssl_report_passed(report.get());
  std::cout << (passed ? "all checks passed\n" : "some checks FAILED\n");
  if (!cfg.output.empty()) emit(cfg, report.get());
  return passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sumsetlab: truncated sumsets of integer bases"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool reports = true) {
    if (reports) {
      sub->add_option("--format", cfg.format, "Report format")
          ->check(CLI::IsMember({"structured", "csv"}))
          ->capture_default_str();
    }
    sub->add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
    sub->add_option("--threads", cfg.threads, "Worker threads (SUMSETLAB_THREADS overrides)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto basis_opt = [&](CLI::App* sub) {
    sub->add_option("--basis", cfg.basis, "Basis: poly:k | set:a,b,c | aug:<spec>+set:a,b,c")->required();
  };
  auto bound_opt = [&](CLI::App* sub) {
    sub->add_option("--bound,-N", cfg.bound, "Inclusive bound N")->required()->check(CLI::Range(1ull, 1ull << 32));
  };

  auto* enum_cmd = app.add_subcommand("enum", "List basis elements up to N");
  basis_opt(enum_cmd);
  bound_opt(enum_cmd);
  common(enum_cmd);

  auto* sumset_cmd = app.add_subcommand("sumset", "Compute hA (or A+B) on [0, N]");
  basis_opt(sumset_cmd);
  bound_opt(sumset_cmd);
  auto* plus_opt = sumset_cmd->add_option("--plus", cfg.plus, "Second basis B; computes A+B");
  sumset_cmd->add_option("--h", cfg.h, "Fold count")->check(CLI::PositiveNumber)->excludes(plus_opt);
  sumset_cmd->add_option("--out", cfg.bitmap_out, "Write the result bitmap (SSL1 format)");
  sumset_cmd->add_option("--from", cfg.gaps_from, "Start of the listed gap range (default 0)");
  sumset_cmd->add_option("--to", cfg.gaps_to, "End of the listed gap range (default min(N, 100))");
  common(sumset_cmd);

  auto* order_cmd = app.add_subcommand("order", "Empirical order on [0, N]");
  basis_opt(order_cmd);
  bound_opt(order_cmd);
  order_cmd->add_option("--hmax", cfg.h_max, "Largest h tried (default k+3 for poly:k, else 8)")
      ->check(CLI::PositiveNumber);
  common(order_cmd);

  auto* obstruct_cmd = app.add_subcommand("obstruct", "Residue classes no h-fold sum reaches mod m");
  basis_opt(obstruct_cmd);
  obstruct_cmd->add_option("--h", cfg.h, "Fold count")->required()->check(CLI::PositiveNumber);
  obstruct_cmd->add_option("--mod", cfg.modulus, "Modulus m >= 2")->required();
  obstruct_cmd->add_option("--bound,-N", cfg.cross_check, "Also cross-check against hA on [0, N]");
  common(obstruct_cmd);

  auto* density_cmd = app.add_subcommand("density", "Counting profile (hA)(n)/n");
  basis_opt(density_cmd);
  bound_opt(density_cmd);
  density_cmd->add_option("--h", cfg.h, "Fold count")->check(CLI::PositiveNumber);
  density_cmd->add_option("--grid", cfg.grid, "Sample points (default: 32 geometric points N/1000..N)")
      ->delimiter(',');
  common(density_cmd);

  auto* stability_cmd = app.add_subcommand("stability", "Compare the orders of A and A ∪ [0, C)");
  basis_opt(stability_cmd);
  bound_opt(stability_cmd);
  stability_cmd->add_option("--cutoff,-C", cfg.cutoff, "Augment with [0, C)")->required();
  stability_cmd->add_option("--hmax", cfg.h_max, "Largest h tried")->check(CLI::PositiveNumber);
  common(stability_cmd);

  auto* legendre_cmd = app.add_subcommand("legendre", "Check (m+2)-gonal representations on [28m^3, N]");
  legendre_cmd->add_option("--m", cfg.legendre_m, "m >= 3")->required();
  bound_opt(legendre_cmd);
  common(legendre_cmd);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every theorem check");
  verify_cmd->add_option("--scale", cfg.scale, "quick (N = 10^4) or full (N = 10^6)")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  verify_cmd->add_option("--tamper-bit", cfg.tamper_bit, "Flip this bit in every checked bitmap (harness test)");
  common(verify_cmd);

  try {
    app.parse(argc, argv);
    cfg.threads = resolve_threads(cfg.threads);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enum_cmd) return run_enum(cfg);
    if (*sumset_cmd) return run_sumset(cfg);
    if (*order_cmd) return run_order(cfg);
    if (*obstruct_cmd) return run_obstruct(cfg);
    if (*density_cmd) return run_density(cfg);
    if (*stability_cmd) return run_stability(cfg);
    if (*legendre_cmd) return run_legendre(cfg);
    if (*verify_cmd) return run_verify(cfg);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << " (" << ssl_status_string(e.status) << ")\n";
    return kExitUsage;
  }
  return kExitUsage;
}
