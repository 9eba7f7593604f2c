#include "sumsetlab/report.hpp"

#include <iomanip>
#include <locale>
#include <optional>
#include <sstream>

namespace sumsetlab {

namespace {

std::ostringstream stream() {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  return out;
}

std::string ratio(double v) {
  auto out = stream();
  out << std::fixed << std::setprecision(9) << v;
  return out.str();
}

std::string opt(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

// Free text is quoted in CSV when it could break the row.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void header(std::ostringstream& out, const char* kind) {
  out << "format: " << kReportFormatVersion << '\n' << "report: " << kind << '\n';
}

std::string order_value(const OrderReport& r) {
  return r.empirical_order ? std::to_string(*r.empirical_order) : std::string("exceeds h_max");
}

void order_body(std::ostringstream& out, const OrderReport& r, const std::string& prefix,
                const std::string& label) {
  out << prefix << "basis: " << label << '\n'
      << prefix << "bound: " << r.bound << '\n'
      << prefix << "h_max: " << r.h_max << '\n'
      << prefix << "contains_zero: " << yes_no(r.contains_zero) << '\n'
      << prefix << "empirical_order: " << order_value(r) << '\n';
  for (const auto& l : r.levels) {
    out << prefix << "level: h=" << l.h << " covers=" << yes_no(l.covers) << " uncovered=" << l.uncovered
        << " smallest_gap=" << opt(l.smallest_gap) << " largest_gap=" << opt(l.largest_gap)
        << " covered_from=" << opt(l.covered_from) << '\n';
  }
  out << prefix << "witness: " << opt(r.witness) << '\n'
      << prefix << "witnesses: " << join(r.witnesses()) << '\n';
}

void order_csv_rows(std::ostringstream& out, const OrderReport& r, const std::string& lead) {
  for (const auto& l : r.levels) {
    out << lead << l.h << ',' << yes_no(l.covers) << ',' << l.uncovered << ',' << opt(l.smallest_gap) << ','
        << opt(l.largest_gap) << ',' << opt(l.covered_from) << '\n';
  }
}

std::string augmented_label(const StabilityReport& r) {
  return r.spec.to_string() + " | [0," + std::to_string(r.cutoff) + ")";
}

}  // namespace

std::string render(const EnumerationReport& r, Format format) {
  auto out = stream();
  if (format == Format::csv) {
    out << "value\n";
    for (auto v : r.elements) out << v << '\n';
    return out.str();
  }
  header(out, "enum");
  out << "basis: " << r.basis << '\n'
      << "bound: " << r.bound << '\n'
      << "count: " << r.elements.size() << '\n'
      << "elements: " << join(r.elements) << '\n';
  return out.str();
}

std::string render(const SumsetReport& r, Format format) {
  auto out = stream();
  if (format == Format::csv) {
    out << "missing\n";
    for (auto v : r.gaps) out << v << '\n';
    return out.str();
  }
  header(out, "sumset");
  out << "set: " << r.description << '\n'
      << "bound: " << r.bound << '\n'
      << "popcount: " << r.popcount << '\n'
      << "counting: " << r.counting << '\n'
      << "covers: " << yes_no(r.full) << '\n'
      << "missing_range: " << r.gaps_lo << ".." << r.gaps_hi << '\n'
      << "missing: " << join(r.gaps) << '\n';
  return out.str();
}

std::string render(const OrderReport& r, Format format) {
  auto out = stream();
  if (format == Format::csv) {
    out << "h,covers,uncovered,smallest_gap,largest_gap,covered_from\n";
    order_csv_rows(out, r, "");
    return out.str();
  }
  header(out, "order");
  order_body(out, r, "", r.spec.to_string());
  return out.str();
}

std::string render(const StabilityReport& r, Format format) {
  auto out = stream();
  if (format == Format::csv) {
    out << "side,basis,h,covers,uncovered,smallest_gap,largest_gap,covered_from\n";
    order_csv_rows(out, r.base, "base," + csv_field(r.base.spec.to_string()) + ",");
    order_csv_rows(out, r.augmented, "augmented," + csv_field(augmented_label(r)) + ",");
    return out.str();
  }
  header(out, "stability");
  out << "basis: " << r.spec.to_string() << '\n'
      << "cutoff: " << r.cutoff << '\n'
      << "bound: " << r.bound << '\n'
      << "h_max: " << r.h_max << '\n'
      << "order_base: " << order_value(r.base) << '\n'
      << "order_augmented: " << order_value(r.augmented) << '\n'
      << "stable: " << yes_no(r.stable) << '\n'
      << "note: verdict holds on [0, bound] only\n";
  order_body(out, r.base, "base.", r.spec.to_string());
  order_body(out, r.augmented, "augmented.", augmented_label(r));
  return out.str();
}

std::string render(const CountingProfile& r, Format format) {
  auto out = stream();
  if (format == Format::csv) {
    out << "n,count,ratio\n";
    for (const auto& s : r.samples) out << s.n << ',' << s.count << ',' << ratio(s.ratio) << '\n';
    return out.str();
  }
  header(out, "density");
  out << "set: " << r.set_label << '\n'
      << "basis: " << r.basis << '\n'
      << "h: " << r.h << '\n'
      << "bound: " << r.bound << '\n';
  for (const auto& s : r.samples)
    out << "sample: n=" << s.n << " count=" << s.count << " ratio=" << ratio(s.ratio) << '\n';
  out << "tail_from: " << r.bound / 10 << '\n'
      << "tail_max_ratio: " << ratio(r.tail_max_ratio) << '\n'
      << "tail_min_ratio: " << ratio(r.tail_min_ratio) << '\n'
      << "tail_strictly_decreasing: " << yes_no(r.tail_strictly_decreasing) << '\n'
      << "note: evidence, not proof\n";
  return out.str();
}

std::string render(const ObstructionCheck& c, Format format) {
  const auto& r = c.report;
  auto out = stream();
  if (format == Format::csv) {
    std::vector<char> in_cert(static_cast<std::size_t>(r.modulus), 0);
    std::vector<char> reach(static_cast<std::size_t>(r.modulus), 0);
    for (auto v : r.certificate) in_cert[v] = 1;
    for (auto v : r.attainable) reach[v] = 1;
    out << "residue,in_certificate,attainable\n";
    for (std::uint64_t s = 0; s < r.modulus; ++s)
      out << s << ',' << yes_no(in_cert[s]) << ',' << yes_no(reach[s]) << '\n';
    return out.str();
  }
  header(out, "obstruct");
  out << "basis: " << r.basis << '\n'
      << "h: " << r.h << '\n'
      << "modulus: " << r.modulus << '\n'
      << "certificate: " << join(r.certificate) << '\n'
      << "verified_period: " << r.verified_period << '\n'
      << "attainable: " << join(r.attainable) << '\n'
      << "missing: " << join(r.missing) << '\n';
  if (c.cross_check_bound) {
    out << "cross_check_bound: " << c.cross_check_bound << '\n'
        << "cross_check: " << (c.cross_check_passed ? "pass" : "fail") << '\n';
  }
  return out.str();
}

std::string render(const LegendreResult& r, Format format) {
  auto out = stream();
  if (format == Format::csv) {
    out << "m,cutoff,bound,parts,checked,passed,counterexample\n"
        << r.m << ',' << r.cutoff << ',' << r.bound << ',' << r.parts << ',' << r.checked << ','
        << yes_no(r.passed) << ',' << opt(r.counterexample) << '\n';
    return out.str();
  }
  header(out, "legendre");
  out << "m: " << r.m << '\n'
      << "polygonal_order: " << r.m + 2 << '\n'
      << "parts: " << r.parts << (r.m % 2 ? "" : " (one part 0 or 1)") << '\n'
      << "cutoff: " << r.cutoff << '\n'
      << "bound: " << r.bound << '\n'
      << "checked: " << r.checked << '\n'
      << "result: " << (r.passed ? "pass" : "fail") << '\n'
      << "counterexample: " << opt(r.counterexample) << '\n';
  return out.str();
}

std::string render(const VerifySummary& r, Format format) {
  auto out = stream();
  if (format == Format::csv) {
    out << "id,passed,detail\n";
    for (const auto& c : r.checks) out << c.id << ',' << yes_no(c.passed) << ',' << csv_field(c.detail) << '\n';
    return out.str();
  }
  header(out, "verify-paper");
  out << "scale: " << (r.scale == Scale::full ? "full" : "quick") << '\n' << "bound: " << r.bound << '\n';
  for (const auto& c : r.checks)
    out << "check: " << c.id << ' ' << (c.passed ? "pass" : "FAIL") << " | " << c.title << " | " << c.detail << '\n';
  out << "result: " << (r.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace sumsetlab
