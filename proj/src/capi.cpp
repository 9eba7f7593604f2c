#include "sumsetlab/sumsetlab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "sumsetlab/analysis.hpp"
#include "sumsetlab/basis.hpp"
#include "sumsetlab/error.hpp"
#include "sumsetlab/oracle.hpp"
#include "sumsetlab/order.hpp"
#include "sumsetlab/report.hpp"
#include "sumsetlab/sumset.hpp"
#include "sumsetlab/verify.hpp"

struct ssl_basis {
  sumsetlab::BasisSpec spec;
};

struct ssl_bitmap {
  sumsetlab::IntervalBitmap bitmap;
};

struct ssl_report {
  std::variant<sumsetlab::EnumerationReport, sumsetlab::SumsetReport, sumsetlab::OrderReport,
               sumsetlab::StabilityReport, sumsetlab::CountingProfile, sumsetlab::ObstructionCheck,
               sumsetlab::LegendreResult, sumsetlab::VerifySummary>
      value;
};

namespace {

using namespace sumsetlab;

thread_local std::string last_error;

ssl_status to_status(Errc code) {
  switch (code) {
    case Errc::invalid_parameter: return SSL_ERROR_INVALID_PARAMETER;
    case Errc::overflow: return SSL_ERROR_OVERFLOW;
    case Errc::parse: return SSL_ERROR_PARSE;
    case Errc::io: return SSL_ERROR_IO;
  }
  return SSL_ERROR_INTERNAL;
}

template <class F>
ssl_status try_(F&& f) {
  try {
    f();
    return SSL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return SSL_ERROR_INTERNAL;
}

template <class T>
T& deref(T* p, const char* what) {
  if (!p) fail(Errc::invalid_parameter, std::string("null ") + what);
  return *p;
}

const char* cstr(const char* p, const char* what) {
  if (!p) fail(Errc::invalid_parameter, std::string("null ") + what);
  return p;
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_array(const std::vector<std::uint64_t>& values, uint64_t** out, size_t* count) {
  deref(out, "output pointer");
  deref(count, "count pointer");
  auto* data = static_cast<uint64_t*>(std::malloc(std::max<std::size_t>(values.size(), 1) * sizeof(uint64_t)));
  if (!data) throw std::bad_alloc();
  std::copy(values.begin(), values.end(), data);
  *out = data;
  *count = values.size();
}

std::vector<std::uint64_t> to_vector(const uint64_t* values, size_t count) {
  if (count && !values) fail(Errc::invalid_parameter, "null element array");
  return count ? std::vector<std::uint64_t>(values, values + count) : std::vector<std::uint64_t>{};
}

template <class T>
void make_report(ssl_report** out, T&& value) {
  deref(out, "output pointer") = new ssl_report{std::forward<T>(value)};
}

unsigned workers(unsigned threads) { return threads == 0 ? 1 : threads; }

}  // namespace

extern "C" {

const char* ssl_version(void) { return "1.0.0"; }

const char* ssl_status_string(ssl_status status) {
  switch (status) {
    case SSL_OK: return "ok";
    case SSL_ERROR_INVALID_PARAMETER: return "invalid parameter";
    case SSL_ERROR_OVERFLOW: return "overflow";
    case SSL_ERROR_PARSE: return "parse error";
    case SSL_ERROR_IO: return "i/o error";
    case SSL_ERROR_WRONG_REPORT_KIND: return "wrong report kind";
    case SSL_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ssl_last_error_message(void) { return last_error.c_str(); }

void ssl_string_free(char* text) { std::free(text); }
void ssl_array_free(uint64_t* values) { std::free(values); }

ssl_status ssl_basis_parse(const char* text, ssl_basis** out) {
  return try_([&] { deref(out, "output pointer") = new ssl_basis{parse_basis(cstr(text, "text"))}; });
}

ssl_status ssl_basis_polygonal(uint32_t k, ssl_basis** out) {
  return try_([&] { deref(out, "output pointer") = new ssl_basis{BasisSpec::polygonal(k)}; });
}

ssl_status ssl_basis_explicit(const uint64_t* elements, size_t count, ssl_basis** out) {
  return try_([&] {
    deref(out, "output pointer") = new ssl_basis{BasisSpec::explicit_set(to_vector(elements, count))};
  });
}

ssl_status ssl_basis_augment(const ssl_basis* base, const uint64_t* finite_set, size_t count, ssl_basis** out) {
  return try_([&] {
    deref(out, "output pointer") =
        new ssl_basis{BasisSpec::augmented(deref(base, "basis").spec, to_vector(finite_set, count))};
  });
}

void ssl_basis_destroy(ssl_basis* basis) { delete basis; }

ssl_status ssl_basis_to_string(const ssl_basis* basis, char** out) {
  return try_([&] { deref(out, "output pointer") = copy_string(deref(basis, "basis").spec.to_string()); });
}

ssl_status ssl_basis_default_hmax(const ssl_basis* basis, uint32_t* out) {
  return try_([&] { deref(out, "output pointer") = default_h_max(deref(basis, "basis").spec); });
}

ssl_status ssl_polygonal_value(uint32_t k, uint64_t x, uint64_t* out) {
  return try_([&] { deref(out, "output pointer") = polygonal_value(k, x); });
}

ssl_status ssl_enumerate(const ssl_basis* basis, uint64_t bound, uint64_t** out, size_t* count) {
  return try_([&] { copy_array(enumerate(deref(basis, "basis").spec, bound), out, count); });
}

ssl_status ssl_bitmap_from_basis(const ssl_basis* basis, uint64_t bound, ssl_bitmap** out) {
  return try_([&] { deref(out, "output pointer") = new ssl_bitmap{to_bitmap(deref(basis, "basis").spec, bound)}; });
}

ssl_status ssl_bitmap_from_members(uint64_t bound, const uint64_t* members, size_t count, ssl_bitmap** out) {
  return try_([&] {
    const auto values = to_vector(members, count);
    deref(out, "output pointer") = new ssl_bitmap{IntervalBitmap::from_members(bound, values)};
  });
}

void ssl_bitmap_destroy(ssl_bitmap* bitmap) { delete bitmap; }

uint64_t ssl_bitmap_bound(const ssl_bitmap* bitmap) { return bitmap ? bitmap->bitmap.bound() : 0; }
uint64_t ssl_bitmap_popcount(const ssl_bitmap* bitmap) { return bitmap ? bitmap->bitmap.popcount() : 0; }
int ssl_bitmap_test(const ssl_bitmap* bitmap, uint64_t i) { return bitmap && bitmap->bitmap.test(i) ? 1 : 0; }

int ssl_bitmap_equal(const ssl_bitmap* a, const ssl_bitmap* b) {
  return a && b && a->bitmap == b->bitmap ? 1 : 0;
}

ssl_status ssl_sumset(const ssl_bitmap* x, const ssl_bitmap* y, unsigned threads, ssl_bitmap** out) {
  return try_([&] {
    deref(out, "output pointer") =
        new ssl_bitmap{sumset(deref(x, "bitmap").bitmap, deref(y, "bitmap").bitmap, workers(threads))};
  });
}

ssl_status ssl_hfold(const ssl_bitmap* a, uint32_t h, unsigned threads, ssl_bitmap** out) {
  return try_([&] { deref(out, "output pointer") = new ssl_bitmap{hfold(deref(a, "bitmap").bitmap, h, workers(threads))}; });
}

ssl_status ssl_counting(const ssl_bitmap* a, uint64_t n, uint64_t* out) {
  return try_([&] { deref(out, "output pointer") = counting(deref(a, "bitmap").bitmap, n); });
}

ssl_status ssl_complement_members(const ssl_bitmap* a, uint64_t lo, uint64_t hi, uint64_t** out, size_t* count) {
  return try_([&] { copy_array(complement_members(deref(a, "bitmap").bitmap, lo, hi), out, count); });
}

ssl_status ssl_bitmap_save(const ssl_bitmap* bitmap, const char* path) {
  return try_([&] { deref(bitmap, "bitmap").bitmap.save(cstr(path, "path")); });
}

ssl_status ssl_bitmap_load(const char* path, ssl_bitmap** out) {
  return try_([&] { deref(out, "output pointer") = new ssl_bitmap{IntervalBitmap::load(cstr(path, "path"))}; });
}

ssl_status ssl_find_representation(uint64_t n, const ssl_basis* basis, uint32_t h, uint64_t* parts, int* found) {
  return try_([&] {
    auto rep = find_representation(n, deref(basis, "basis").spec, h);
    deref(found, "found pointer") = rep ? 1 : 0;
    if (rep) std::copy(rep->begin(), rep->end(), &deref(parts, "parts array"));
  });
}

ssl_status ssl_oracle_membership(uint64_t n, const ssl_basis* basis, uint32_t h, int* member) {
  return try_([&] { deref(member, "output pointer") = oracle_hfold_membership(n, deref(basis, "basis").spec, h); });
}

ssl_status ssl_report_enumeration(const ssl_basis* basis, uint64_t bound, ssl_report** out) {
  return try_([&] {
    const auto& spec = deref(basis, "basis").spec;
    make_report(out, EnumerationReport{spec.to_string(), bound, enumerate(spec, bound)});
  });
}

ssl_status ssl_report_sumset(const ssl_bitmap* bitmap, const char* description, uint64_t lo, uint64_t hi,
                             ssl_report** out) {
  return try_([&] {
    const auto& bm = deref(bitmap, "bitmap").bitmap;
    SumsetReport r{.description = description ? description : "",
                   .bound = bm.bound(),
                   .popcount = bm.popcount(),
                   .counting = counting(bm, bm.bound()),
                   .full = bm.is_full(),
                   .gaps_lo = lo,
                   .gaps_hi = hi,
                   .gaps = complement_members(bm, lo, hi)};
    make_report(out, std::move(r));
  });
}

ssl_status ssl_report_order(const ssl_basis* basis, uint64_t bound, uint32_t h_max, unsigned threads,
                            ssl_report** out) {
  return try_([&] { make_report(out, empirical_order(deref(basis, "basis").spec, bound, h_max, workers(threads))); });
}

ssl_status ssl_report_stability(const ssl_basis* basis, uint64_t cutoff, uint64_t bound, uint32_t h_max,
                                unsigned threads, ssl_report** out) {
  return try_([&] {
    make_report(out, stability_experiment(deref(basis, "basis").spec, cutoff, bound, h_max, workers(threads)));
  });
}

ssl_status ssl_report_density(const ssl_basis* basis, uint32_t h, uint64_t bound, const uint64_t* grid,
                              size_t grid_count, unsigned threads, ssl_report** out) {
  return try_([&] {
    const auto points = grid && grid_count ? to_vector(grid, grid_count) : geometric_grid(bound);
    make_report(out, density_profile(deref(basis, "basis").spec, h, bound, points, workers(threads)));
  });
}

ssl_status ssl_report_obstruction(const ssl_basis* basis, uint32_t h, uint64_t modulus, uint64_t cross_check_bound,
                                  unsigned threads, ssl_report** out) {
  return try_([&] {
    const auto& spec = deref(basis, "basis").spec;
    ObstructionCheck check{modular_obstruction(spec, h, modulus), cross_check_bound, true};
    if (cross_check_bound) {
      const auto folded = hfold(to_bitmap(spec, cross_check_bound), h, workers(threads));
      check.cross_check_passed = cross_check_obstruction(check.report, folded);
    }
    make_report(out, std::move(check));
  });
}

ssl_status ssl_report_legendre(uint32_t m, uint64_t bound, unsigned threads, ssl_report** out) {
  return try_([&] { make_report(out, verify_legendre(m, bound, workers(threads))); });
}

ssl_status ssl_report_verify_paper(const ssl_verify_options* options, ssl_check_callback on_check, void* user,
                                   ssl_report** out) {
  return try_([&] {
    const auto& o = deref(options, "options");
    VerifyOptions opts{o.full_scale ? Scale::full : Scale::quick, workers(o.threads), std::nullopt};
    if (o.tamper) opts.tamper_bit = o.tamper_bit;
    auto summary = verify_paper(opts, [&](const CheckResult& c) {
      if (on_check) on_check(c.id.c_str(), c.title.c_str(), c.passed ? 1 : 0, c.seconds, c.detail.c_str(), user);
    });
    make_report(out, std::move(summary));
  });
}

void ssl_report_destroy(ssl_report* report) { delete report; }

ssl_report_kind ssl_report_get_kind(const ssl_report* report) {
  return static_cast<ssl_report_kind>(report ? report->value.index() : 0);
}

int ssl_report_passed(const ssl_report* report) {
  if (!report) return 0;
  if (const auto* l = std::get_if<LegendreResult>(&report->value)) return l->passed ? 1 : 0;
  if (const auto* o = std::get_if<ObstructionCheck>(&report->value)) return o->cross_check_passed ? 1 : 0;
  if (const auto* v = std::get_if<VerifySummary>(&report->value)) return v->passed() ? 1 : 0;
  return 1;
}

ssl_status ssl_report_render(const ssl_report* report, ssl_format format, char** out) {
  return try_([&] {
    const Format f = format == SSL_FORMAT_CSV ? Format::csv : Format::structured;
    const auto text = std::visit([f](const auto& r) { return render(r, f); }, deref(report, "report").value);
    deref(out, "output pointer") = copy_string(text);
  });
}

ssl_status ssl_report_order_value(const ssl_report* report, uint32_t* order, int* found) {
  if (!report || !std::holds_alternative<OrderReport>(report->value)) {
    last_error = "not an order report";
    return SSL_ERROR_WRONG_REPORT_KIND;
  }
  return try_([&] {
    const auto& r = std::get<OrderReport>(report->value);
    deref(found, "found pointer") = r.empirical_order ? 1 : 0;
    deref(order, "order pointer") = r.empirical_order.value_or(0);
  });
}

ssl_status ssl_report_stability_orders(const ssl_report* report, uint32_t* order_base, uint32_t* order_augmented,
                                       int* stable) {
  if (!report || !std::holds_alternative<StabilityReport>(report->value)) {
    last_error = "not a stability report";
    return SSL_ERROR_WRONG_REPORT_KIND;
  }
  return try_([&] {
    const auto& r = std::get<StabilityReport>(report->value);
    deref(order_base, "order pointer") = r.base.empirical_order.value_or(0);
    deref(order_augmented, "order pointer") = r.augmented.empirical_order.value_or(0);
    deref(stable, "stable pointer") = r.stable ? 1 : 0;
  });
}

ssl_status ssl_report_obstruction_missing(const ssl_report* report, uint64_t** out, size_t* count) {
  if (!report || !std::holds_alternative<ObstructionCheck>(report->value)) {
    last_error = "not an obstruction report";
    return SSL_ERROR_WRONG_REPORT_KIND;
  }
  return try_([&] { copy_array(std::get<ObstructionCheck>(report->value).report.missing, out, count); });
}

}  // extern "C"
