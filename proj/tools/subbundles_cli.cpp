// Command-line front end: count, table, verify, trace.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "subbundles/cli.hpp"

namespace {

subbundles::Format parse_format(const std::string& name) {
  const auto format = subbundles::format_from_string(name);
  if (!format) throw subbundles::InvalidArgumentError("unknown format '" + name + "'");
  return *format;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of maximal subbundles of generic vector bundles on curves"};
  app.require_subcommand(1);

  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t r_prime = 0;
  std::int64_t g = 0;
  std::string method_name;
  std::string format_name;
  std::string case_name;
  std::int64_t max_g = 64;

  CLI::App* count = app.add_subcommand(
      "count", "count maximal subbundles for one instance, cross-checking all methods");
  count->add_option("--r", r, "ambient rank (>= 2)")->required();
  count->add_option("--d", d, "ambient degree (any integer)")->required();
  count->add_option("--r-prime", r_prime, "subbundle rank (1 <= r' < r)")->required();
  count->add_option("--g", g, "genus (>= 1)")->required();
  count->add_option("--method", method_name, "single computation path instead of all four")
      ->check(CLI::IsMember({"recurrence", "matrix-power", "binomial-sum", "eigen-form"}));
  count->add_option("--format", format_name, "output format (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* table = app.add_subcommand("table", "tabulate counts for g = 1..max-g");
  table->add_option("--case", case_name, "'line' or 'rank2of4'")
      ->required()
      ->check(CLI::IsMember({"line", "rank2of4"}));
  table->add_option("--r", r, "ambient rank, required for --case line");
  table->add_option("--max-g", max_g, "largest genus to tabulate")->required();
  table->add_option("--format", format_name, "output format (default csv)")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "sweep the identity suite (four paths plus derived identities) up to max-g");
  verify->add_option("--max-g", max_g, "largest genus to verify (default 64)");

  CLI::App* trace = app.add_subcommand(
      "trace", "show the degree-splitting decomposition of a count at genus g >= 2");
  trace->add_option("--r", r, "ambient rank (>= 2)")->required();
  trace->add_option("--d", d, "ambient degree (any integer)")->required();
  trace->add_option("--r-prime", r_prime, "subbundle rank (1 <= r' < r)")->required();
  trace->add_option("--g", g, "genus (>= 2)")->required();
  trace->add_option("--format", format_name, "output format (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? subbundles::kExitSuccess : subbundles::kExitInvalidInstance;
  }

  try {
    if (count->parsed()) {
      subbundles::CountOptions options{r, d, r_prime, g, std::nullopt, subbundles::Format::text};
      if (!method_name.empty()) options.method = subbundles::method_from_string(method_name);
      if (!format_name.empty()) options.format = parse_format(format_name);
      return subbundles::run_count(options, std::cout, std::cerr);
    }
    if (table->parsed()) {
      subbundles::TableOptions options{case_name, std::nullopt, max_g, subbundles::Format::csv};
      if (table->count("--r") > 0) options.r = r;
      if (!format_name.empty()) options.format = parse_format(format_name);
      return subbundles::run_table(options, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      return subbundles::run_verify(subbundles::VerifyOptions{max_g}, std::cout, std::cerr);
    }
    if (trace->parsed()) {
      subbundles::TraceOptions options{r, d, r_prime, g, subbundles::Format::text};
      if (!format_name.empty()) options.format = parse_format(format_name);
      return subbundles::run_trace(options, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return subbundles::kExitInvalidInstance;
  }
  return subbundles::kExitInvalidInstance;
}
