// partition-meter: command-line front end over the partmeter C API.
//
// Exit codes: 0 success, 1 verification failure or oracle mismatch,
// 2 usage error, 3 computation error (overflow, memo limit).

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "partmeter/partmeter.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;

struct UsageError {
  std::string message;
};

struct ComputeError {
  pm_status status;
  std::string message;
};

void check(pm_status status) {
  if (status < 0) throw ComputeError{status, pm_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using CounterPtr = std::unique_ptr<pm_counter, Deleter<pm_counter, pm_counter_destroy>>;
using IteratorPtr = std::unique_ptr<pm_iterator, Deleter<pm_iterator, pm_iterator_destroy>>;
using TracePtr = std::unique_ptr<pm_write_trace, Deleter<pm_write_trace, pm_write_trace_destroy>>;
using ReportPtr = std::unique_ptr<pm_report, Deleter<pm_report, pm_report_destroy>>;
using DiagramPtr = std::unique_ptr<pm_diagram, Deleter<pm_diagram, pm_diagram_destroy>>;

std::string decimal(pm_count c) {
  char buf[PM_COUNT_DECIMAL_MAX];
  check(pm_count_to_decimal(c, buf, sizeof buf));
  return buf;
}

// JSON numbers when the value fits in 64 bits, decimal strings otherwise.
nlohmann::json json_count(pm_count c) {
  if (c.hi == 0) return c.lo;
  return decimal(c);
}

bool operator==(pm_count a, pm_count b) { return a.lo == b.lo && a.hi == b.hi; }

std::size_t memo_limit_from_env() {
  const char* raw = std::getenv("PARTITION_METER_MEMO_LIMIT");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (errno != 0 || *end != '\0' || raw[0] == '-')
    throw UsageError{"PARTITION_METER_MEMO_LIMIT must be a nonnegative integer"};
  return static_cast<std::size_t>(v);
}

CounterPtr make_counter() {
  pm_counter* c = nullptr;
  check(pm_counter_create(memo_limit_from_env(), &c));
  return CounterPtr(c);
}

struct DomainArgs {
  std::int64_t n = 0;
  std::int64_t m = 1;

  void validate() const {
    if (n < 1) throw UsageError{"n must be a positive integer"};
    if (n > INT32_MAX) throw UsageError{"n is too large"};
    if (m < 1 || m > n) throw UsageError{"m must satisfy 1 ≤ m ≤ n"};
  }
  uint32_t un() const { return static_cast<uint32_t>(n); }
  uint32_t um() const { return static_cast<uint32_t>(m); }
};

void add_domain_options(CLI::App* cmd, DomainArgs& args) {
  cmd->add_option("--n", args.n, "Integer being partitioned")->required();
  cmd->add_option("--m", args.m, "Smallest allowed part (default 1)");
}

// ---------------------------------------------------------------- enumerate

int run_enumerate(const DomainArgs& args, const std::string& format) {
  args.validate();
  pm_iterator* raw = nullptr;
  check(pm_iterator_create(args.un(), args.um(), &raw));
  IteratorPtr it(raw);

  const std::size_t width = args.un() / args.um();
  if (format == "csv") {
    for (std::size_t i = 1; i <= width; ++i) std::cout << (i > 1 ? "," : "") << 'a' << i;
    std::cout << '\n';
  }
  nlohmann::json all = nlohmann::json::array();

  const uint32_t* parts = nullptr;
  std::size_t len = 0;
  pm_status s;
  while ((s = pm_iterator_next(it.get(), &parts, &len, nullptr)) == PM_OK) {
    if (format == "lines") {
      for (std::size_t i = 0; i < len; ++i) std::cout << (i ? "+" : "") << parts[i];
      std::cout << '\n';
    } else if (format == "csv") {
      for (std::size_t i = 0; i < width; ++i) {
        if (i) std::cout << ',';
        if (i < len) std::cout << parts[i];
      }
      std::cout << '\n';
    } else {
      all.push_back(std::vector<uint32_t>(parts, parts + len));
    }
  }
  check(s);
  if (format == "json") std::cout << all.dump() << '\n';
  return kExitOk;
}

// -------------------------------------------------------------------- count

int run_count(const DomainArgs& args, bool oracle) {
  args.validate();
  if (oracle && args.m != 1) throw UsageError{"--oracle requires m = 1"};
  auto counter = make_counter();
  pm_count value{};
  check(pm_nac(counter.get(), args.un(), args.um(), &value));
  if (!oracle) {
    std::cout << decimal(value) << '\n';
    return kExitOk;
  }
  pm_count expected{};
  check(pm_pentagonal_oracle(args.un(), &expected));
  const bool match = value == expected;
  std::cout << decimal(value) << ' ' << decimal(expected) << ' ' << (match ? "MATCH" : "MISMATCH")
            << '\n';
  return match ? kExitOk : kExitFailed;
}

// ------------------------------------------------------------------- verify

int run_verify(const std::string& which, std::int64_t max_n, const std::string& format,
               unsigned jobs, const std::string& domain) {
  if (max_n < 1) throw UsageError{"max-n must be a positive integer"};
  if (max_n > INT32_MAX) throw UsageError{"max-n is too large"};
  pm_identity identity;
  if (which == "eq1") {
    identity = PM_IDENTITY_LARGE_PARTS;
  } else if (which == "theorem1") {
    identity = PM_IDENTITY_SUFFIX_LENGTH;
  } else {
    identity = domain == "full" ? PM_IDENTITY_GENERAL_M_FULL_SET : PM_IDENTITY_GENERAL_M;
  }
  if (domain != "restricted" && which != "eq6")
    throw UsageError{"--domain applies to eq6 only"};

  auto counter = make_counter();
  pm_report* raw = nullptr;
  check(pm_verify(counter.get(), identity, static_cast<uint32_t>(max_n), jobs, &raw));
  ReportPtr report(raw);

  std::vector<std::string> columns{"n", "m"};
  for (std::size_t i = 0; i < pm_report_column_count(report.get()); ++i)
    columns.emplace_back(pm_report_column_name(report.get(), i));
  columns.emplace_back("pass");

  const std::size_t rows = pm_report_row_count(report.get());
  const bool all_pass = pm_report_all_pass(report.get()) != 0;
  std::size_t passed = 0;
  nlohmann::json json_rows = nlohmann::json::array();

  if (format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << columns[i];
    std::cout << '\n';
  } else if (format == "lines") {
    for (std::size_t i = 0; i < columns.size(); ++i)
      std::cout << (i ? " " : "") << std::setw(i < 2 ? 4 : 12) << columns[i];
    std::cout << '\n';
  }

  for (std::size_t r = 0; r < rows; ++r) {
    pm_report_row row{};
    check(pm_report_get_row(report.get(), r, &row));
    passed += row.pass ? 1 : 0;
    std::vector<pm_count> values{row.lhs, row.rhs};
    values.insert(values.end(), row.extra, row.extra + row.extra_count);
    if (format == "json") {
      nlohmann::json j{{"n", row.n}, {"m", row.m}, {"pass", row.pass != 0}};
      for (std::size_t i = 0; i < values.size(); ++i) j[columns[i + 2]] = json_count(values[i]);
      json_rows.push_back(std::move(j));
    } else if (format == "csv") {
      std::cout << row.n << ',' << row.m;
      for (const auto& v : values) std::cout << ',' << decimal(v);
      std::cout << ',' << (row.pass ? "PASS" : "FAIL") << '\n';
    } else {
      std::cout << std::setw(4) << row.n << ' ' << std::setw(4) << row.m;
      for (const auto& v : values) std::cout << ' ' << std::setw(12) << decimal(v);
      std::cout << ' ' << std::setw(12) << (row.pass ? "PASS" : "FAIL") << '\n';
    }
  }

  std::vector<std::string> notes;
  for (std::size_t i = 0; i < pm_report_note_count(report.get()); ++i)
    notes.emplace_back(pm_report_note(report.get(), i));

  if (format == "json") {
    nlohmann::json out{{"identity", which}, {"max_n", max_n}, {"rows", json_rows},
                       {"passed", passed}, {"total", rows}, {"all_pass", all_pass},
                       {"notes", notes}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::ostream& summary = format == "csv" ? std::cerr : std::cout;
    for (const auto& note : notes) summary << "# " << note << '\n';
    summary << which << ": " << passed << '/' << rows << " rows pass"
            << (all_pass ? "" : " (FAILURES)") << '\n';
  }
  return all_pass ? kExitOk : kExitFailed;
}

// -------------------------------------------------------------------- boxes

int run_boxes(const DomainArgs& args, const std::string& format, std::int64_t render_limit) {
  args.validate();
  if (args.n > render_limit)
    throw UsageError{"n = " + std::to_string(args.n) + " exceeds the render limit " +
                     std::to_string(render_limit) + " (raise it with --max-render-n)"};

  pm_diagram* raw = nullptr;
  check(pm_diagram_create(args.un(), args.um(), &raw));
  DiagramPtr diagram(raw);

  auto counter = make_counter();
  pm_count count{};
  check(pm_nac(counter.get(), args.un(), args.um(), &count));
  const std::string nac = decimal(count);
  const std::size_t boxes = pm_diagram_box_count(diagram.get());
  const bool agrees = count.hi == 0 && boxes == 2 * count.lo - 1;

  std::ostringstream footer;
  footer << "boxes=" << boxes << (agrees ? " = " : " != ") << "2*" << nac << "-1";

  char* text = nullptr;
  const pm_diagram_format fmt = format == "svg" ? PM_DIAGRAM_SVG : PM_DIAGRAM_ASCII;
  check(pm_diagram_render(diagram.get(), fmt, footer.str().c_str(), &text));
  std::cout << text;
  pm_string_free(text);
  if (fmt == PM_DIAGRAM_ASCII) std::cout << footer.str() << '\n';
  if (!agrees) std::cerr << "error: box count disagrees with 2*nac-1\n";
  return agrees ? kExitOk : kExitFailed;
}

// -------------------------------------------------------------------- meter

int run_meter(const DomainArgs& args, const std::string& format) {
  args.validate();
  pm_write_trace* raw = nullptr;
  check(pm_sfl_measured(args.un(), args.um(), 0, &raw));
  TracePtr trace(raw);
  pm_trace_summary s{};
  check(pm_write_trace_summary(trace.get(), &s));

  const std::string writes = decimal(s.total_writes);
  const std::string visited = decimal(s.compositions);
  const std::string ratio = decimal(s.amortized_num) + "/" + decimal(s.amortized_den);
  const std::string closed_form = "2-1/" + visited;
  // 2 - 1/c = (2c - 1)/c, already in lowest terms.
  const bool closed_ok = s.compositions.hi == 0 && s.total_writes.hi == 0 &&
                         s.amortized_den == s.compositions &&
                         s.total_writes.lo == 2 * s.compositions.lo - 1;
  const long double approx = static_cast<long double>(s.total_writes.lo) /
                             static_cast<long double>(s.compositions.lo);
  std::ostringstream dec;
  dec << std::fixed << std::setprecision(9) << static_cast<double>(approx);

  if (format == "json") {
    nlohmann::json out{{"n", args.n},
                       {"m", args.m},
                       {"writes", json_count(s.total_writes)},
                       {"initial_writes", s.initial_writes},
                       {"compositions", json_count(s.compositions)},
                       {"amortized", ratio},
                       {"closed_form", closed_form},
                       {"closed_form_holds", closed_ok},
                       {"decimal", std::stod(dec.str())}};
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "n,m,writes,compositions,amortized,closed_form,decimal\n"
              << args.n << ',' << args.m << ',' << writes << ',' << visited << ',' << ratio << ','
              << closed_form << ',' << dec.str() << '\n';
  } else {
    std::cout << "writes=" << writes << " compositions=" << visited << " amortized=" << ratio
              << " (" << closed_form << ") decimal=" << dec.str() << '\n';
  }
  if (!closed_ok) {
    std::cerr << "error: amortized writes differ from 2 - 1/compositions\n";
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ascending-composition generator, counter and write meter", "partition-meter"};
  app.require_subcommand(1);

  std::string data_format = "lines";
  auto data_formats = CLI::IsMember({"lines", "json", "csv"});

  DomainArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List sac(n, m) in lexicographic order");
  add_domain_options(enumerate, enum_args);
  enumerate->add_option("--format", data_format, "lines | json | csv")->check(data_formats);

  DomainArgs count_args;
  bool oracle = false;
  auto* count = app.add_subcommand("count", "Print nac(n, m)");
  add_domain_options(count, count_args);
  count->add_flag("--oracle", oracle, "Cross-check p(n) with the pentagonal recurrence");

  std::string which;
  std::int64_t max_n = 0;
  unsigned jobs = 1;
  std::string domain = "restricted";
  auto* verify = app.add_subcommand("verify", "Sweep an identity over all n up to --max-n");
  verify->add_option("identity", which, "eq1 | theorem1 | eq6")
      ->required()
      ->check(CLI::IsMember({"eq1", "theorem1", "eq6"}));
  verify->add_option("--max-n", max_n, "Largest n in the sweep")->required();
  verify->add_option("--format", data_format, "lines | json | csv")->check(data_formats);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  verify->add_option("--domain", domain, "eq6 summation set: restricted (sac(n,m)) | full (sac(n))")
      ->check(CLI::IsMember({"restricted", "full"}));

  DomainArgs box_args;
  std::string box_format = "ascii";
  std::int64_t render_limit = 30;
  auto* boxes = app.add_subcommand("boxes", "Draw the adjacency-box diagram of sac(n, m)");
  add_domain_options(boxes, box_args);
  boxes->add_option("--format", box_format, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}));
  boxes->add_option("--max-render-n", render_limit, "Largest n that will be drawn");

  DomainArgs meter_args;
  auto* meter = app.add_subcommand("meter", "Count the writes needed to generate sac(n, m)");
  add_domain_options(meter, meter_args);
  meter->add_option("--format", data_format, "lines | json | csv")->check(data_formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(enum_args, data_format);
    if (*count) return run_count(count_args, oracle);
    if (*verify) return run_verify(which, max_n, data_format, jobs, domain);
    if (*boxes) return run_boxes(box_args, box_format, render_limit);
    if (*meter) return run_meter(meter_args, data_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const ComputeError& e) {
    std::cerr << "error: " << pm_status_name(e.status) << ": " << e.message << '\n';
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitUsage;
}
