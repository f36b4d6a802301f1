// antichain: command-line front end for the largest-antichain library.
//
// Exit codes: 0 success, 1 computational mismatch, 2 usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antichain/asymptotics.hpp"
#include "antichain/closed_forms.hpp"
#include "antichain/expected_table.hpp"
#include "antichain/rank.hpp"
#include "antichain/verify.hpp"

namespace {

using namespace antichain;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

// Convolution cost grows with the square of the coordinate-sum range.
constexpr std::int64_t kConvolutionSumLimit = 200'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_shape_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("malformed shape entry '" + item + "'");
    }
  }
  return out;
}

ShapeVector make_shape(std::vector<std::int64_t> entries) {
  try {
    return ShapeVector(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_hetero(const std::vector<std::string>& lists, const std::vector<std::int64_t>& flags, const std::string& method) {
  std::vector<std::int64_t> entries;
  for (const auto& l : lists) {
    auto part = parse_shape_list(l);
    entries.insert(entries.end(), part.begin(), part.end());
  }
  entries.insert(entries.end(), flags.begin(), flags.end());
  const ShapeVector shape = make_shape(std::move(entries));

  if (method == "formula") {
    std::cout << hetero_largest_antichain(shape) << '\n';
    return kOk;
  }
  if (shape.sum() > kConvolutionSumLimit) throw UsageError("shape too large for the convolution method");
  if (method == "convolution") {
    std::cout << max_rank_size(shape) << '\n';
    return kOk;
  }
  const ExactInteger formula = hetero_largest_antichain(shape);
  const ExactInteger conv = max_rank_size(shape);
  std::cout << "formula " << formula << '\n' << "convolution " << conv << '\n';
  std::cout << (formula == conv ? "agree" : "DISAGREE") << '\n';
  return formula == conv ? kOk : kMismatch;
}

int cmd_homo(std::int64_t m, std::int64_t n, const std::string& method, const std::string& eq5) {
  if (m < 1 || n < 1) throw UsageError("m and n must be positive");
  const OddCaseMode mode = eq5 == "literal" ? OddCaseMode::paper_literal : OddCaseMode::corrected;
  const bool small_n = n >= 2 && n <= 4;
  const ShapeVector shape = ShapeVector::homogeneous(m, n);

  if (method == "sander") {
    std::cout << sander_homogeneous(m, n) << '\n';
  } else if (method == "theorem2") {
    if (m < 2 || n < 2) throw UsageError("theorem2 needs m >= 2 and n >= 2");
    std::cout << theorem2_homogeneous(m, n, mode) << '\n';
  } else if (method == "corollary") {
    if (!small_n) throw UsageError("corollary covers n = 2, 3, 4 only");
    std::cout << corollary_small_n(m, n) << '\n';
  } else if (method == "convolution") {
    if (shape.sum() > kConvolutionSumLimit) throw UsageError("shape too large for the convolution method");
    std::cout << max_rank_size(shape) << '\n';
  } else {
    std::vector<ExactInteger> values;
    auto report = [&](const char* name, std::optional<ExactInteger> v, const char* why) {
      if (v) {
        std::cout << name << ' ' << *v << '\n';
        values.push_back(*v);
      } else {
        std::cout << name << " skipped (" << why << ")\n";
      }
    };
    report("sander", sander_homogeneous(m, n), "");
    report("theorem2", m >= 2 && n >= 2 ? std::optional(theorem2_homogeneous(m, n, mode)) : std::nullopt,
           "needs m >= 2 and n >= 2");
    report("corollary", small_n ? std::optional(corollary_small_n(m, n)) : std::nullopt, "n outside 2..4");
    report("convolution", shape.sum() <= kConvolutionSumLimit ? std::optional(max_rank_size(shape)) : std::nullopt,
           "shape too large");
    const bool agree = std::all_of(values.begin(), values.end(), [&](const auto& v) { return v == values.front(); });
    std::cout << (agree ? "agree" : "DISAGREE") << '\n';
    return agree ? kOk : kMismatch;
  }
  return kOk;
}

int cmd_gn(std::int64_t n, int digits, bool exact) {
  if (n < 2) throw UsageError("g(n) is defined for n >= 2");
  if (digits < 1) throw UsageError("--digits must be positive");
  std::cout << (exact ? g_exact(n).to_string() : g_decimal(n, digits)) << '\n';
  return kOk;
}

int cmd_converge(std::int64_t n, int lo, int hi, int digits, const std::string& out_path) {
  if (n < 2) throw UsageError("n must be at least 2");
  if (lo < 1 || hi < lo || hi > 40) throw UsageError("need 1 <= --m-min-log2 <= --m-max-log2 <= 40");
  if (digits < 1) throw UsageError("--digits must be positive");
  const auto grid = power_of_two_grid(lo, hi);
  const std::string csv = convergence_csv(n, convergence_series(n, grid), digits);
  if (out_path.empty()) {
    std::cout << csv;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw UsageError("cannot write " + out_path);
  out << csv;
  std::cerr << "wrote " << grid.size() << " rows to " << out_path << '\n';
  return kOk;
}

int cmd_verify(VerifyOptions options) {
#ifdef ANTICHAIN_INJECT_FAULT
  options.inject_fault = true;
#endif
  if (options.max_product < 1 || options.max_n < 2 || options.max_m < 2) throw UsageError("verify bounds too small");
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = run_verification(options);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cout << report.to_json().dump(2) << '\n';
  std::cerr << report.checks.size() - report.failures() << '/' << report.checks.size() << " checks passed in "
            << elapsed.count() << " s\n";
  return report.all_pass() ? kOk : kMismatch;
}

int cmd_check(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<ExpectedRecord> records;
  try {
    records = parse_expected_table(in);
  } catch (const TableParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (records.empty()) {
    std::cerr << "warning: " << path << " has no records\n";
    std::cout << "0/0 match\n";
    return kOk;
  }
  std::size_t matches = 0;
  for (const auto& o : check_expected(records)) {
    if (o.pass) {
      ++matches;
      std::cout << "ok " << o.record.describe() << ' ' << o.actual << '\n';
    } else {
      std::cout << "MISMATCH line " << o.record.line << ' ' << o.record.describe() << " expected " << o.record.expected
                << " actual " << o.actual << '\n';
    }
  }
  std::cout << matches << '/' << records.size() << " match\n";
  return matches == records.size() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Largest antichains in products of chains"};
  app.require_subcommand(1);

  auto* hetero = app.add_subcommand("hetero", "largest antichain of [m1] x ... x [mn]");
  std::vector<std::string> shape_lists;
  std::vector<std::int64_t> shape_flags;
  std::string hetero_method = "formula";
  hetero->add_option("shape", shape_lists, "chain lengths as a comma list, e.g. 5,5,10");
  hetero->add_option("-m,--m", shape_flags, "one chain length (repeatable)");
  hetero->add_option("--method", hetero_method)->check(CLI::IsMember({"formula", "convolution", "both"}));

  auto* homo = app.add_subcommand("homo", "largest antichain of [m]^n");
  std::int64_t homo_m = 0, homo_n = 0;
  std::string homo_method = "sander", eq5 = "corrected";
  homo->add_option("m", homo_m)->required();
  homo->add_option("n", homo_n)->required();
  homo->add_option("--method", homo_method)
      ->check(CLI::IsMember({"sander", "theorem2", "corollary", "convolution", "all"}));
  homo->add_option("--eq5", eq5, "odd-case trailing term")->check(CLI::IsMember({"corrected", "literal"}));

  auto* gn = app.add_subcommand("gn", "limit of S(m,n)/m^(n-1) as m grows");
  std::int64_t gn_n = 0;
  int gn_digits = 17;
  bool gn_exact = false;
  gn->add_option("n", gn_n)->required();
  gn->add_option("--digits", gn_digits, "significant digits");
  gn->add_flag("--exact", gn_exact, "print the exact fraction");

  auto* converge = app.add_subcommand("converge", "CSV of S(m,n)/m^(n-1) over m = 2^k");
  std::int64_t conv_n = 0;
  int lo = 1, hi = 10, conv_digits = 17;
  std::string out_path;
  converge->add_option("n", conv_n)->required();
  converge->add_option("--m-min-log2", lo);
  converge->add_option("--m-max-log2", hi);
  converge->add_option("--digits", conv_digits);
  converge->add_option("--out", out_path, "output CSV (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "run the cross-formula and oracle checks, JSON report");
  VerifyOptions vopts;
  verify->add_option("--max-product", vopts.max_product, "element cap for Dilworth checks");
  verify->add_option("--max-n", vopts.max_n);
  verify->add_option("--max-m", vopts.max_m);
  verify->add_option("--seed", vopts.seed);
  verify->add_option("--random-shapes", vopts.random_shapes);

  auto* check = app.add_subcommand("check", "compare against an expected-value CSV");
  std::string expected_path;
  check->add_option("--expected", expected_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*hetero) return cmd_hetero(shape_lists, shape_flags, hetero_method);
    if (*homo) return cmd_homo(homo_m, homo_n, homo_method, eq5);
    if (*gn) return cmd_gn(gn_n, gn_digits, gn_exact);
    if (*converge) return cmd_converge(conv_n, lo, hi, conv_digits, out_path);
    if (*verify) return cmd_verify(vopts);
    if (*check) return cmd_check(expected_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
