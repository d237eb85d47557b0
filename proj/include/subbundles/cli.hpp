#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "subbundles/counting.hpp"
#include "subbundles/degeneration.hpp"
#include "subbundles/errors.hpp"
#include "subbundles/invariants.hpp"
#include "subbundles/serialize.hpp"
#include "subbundles/verify.hpp"

namespace subbundles {

// Exit-code contract, stable across releases.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInvalidInstance = 2;
inline constexpr int kExitUnsupportedRankPair = 3;

enum class Format { text, json, csv, jsonl };

inline std::optional<Format> format_from_string(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "jsonl") return Format::jsonl;
  return std::nullopt;
}

struct CountOptions {
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t r_prime = 0;
  std::int64_t g = 0;
  std::optional<Method> method;  ///< empty: run all four paths and cross-check
  Format format = Format::text;
};

struct TableOptions {
  std::string case_name;            ///< "line" or "rank2of4"
  std::optional<std::int64_t> r;    ///< required for "line"
  std::int64_t max_g = 1;
  Format format = Format::csv;
};

struct VerifyOptions {
  std::int64_t max_g = 64;
};

struct TraceOptions {
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t r_prime = 0;
  std::int64_t g = 0;
  Format format = Format::text;
};

namespace detail {

inline int report_error(const std::exception& e, std::ostream& err, int code) {
  err << "error: " << e.what() << "\n";
  return code;
}

}  // namespace detail

/// count: solve d', count by the selected method (or all of them), emit one
/// OutputRecord. Methods disagreeing is a verification failure, not a
/// result.
inline int run_count(const CountOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.format != Format::text && options.format != Format::json) {
      throw InvalidArgumentError("count supports --format text or json");
    }
    const SubbundleProblem problem{options.r, options.d, options.r_prime, options.g};
    SupportedCase::classify(problem);  // settle the rank pair before looking at d'
    const SolvedProblem solved = solve_dprime(problem);
    OutputRecord record;
    if (options.method) {
      record = OutputRecord{solved, count_maximal_subbundles(solved, *options.method),
                            *options.method, true};
    } else {
      record = count_with_all_methods(solved);
    }
    if (options.format == Format::json) {
      out << to_json(record).dump() << "\n";
    } else {
      write_text(out, record);
    }
    if (!record.agreement) {
      err << "error: computation paths disagree on this instance\n";
      return kExitVerificationFailure;
    }
    return kExitSuccess;
  } catch (const UnsupportedRankPairError& e) {
    return detail::report_error(e, err, kExitUnsupportedRankPair);
  } catch (const Error& e) {
    return detail::report_error(e, err, kExitInvalidInstance);
  }
}

/// table: rows (g, counts) for g = 1..max-g, CSV by default.
inline int run_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.max_g < 1) {
      throw InvalidArgumentError("table needs --max-g >= 1, got " + std::to_string(options.max_g));
    }
    if (options.format != Format::csv && options.format != Format::jsonl) {
      throw InvalidArgumentError("table supports --format csv or jsonl");
    }
    TransferSystem<Count> system;
    if (options.case_name == "rank2of4") {
      system = rank_two_of_four_system();
    } else if (options.case_name == "line") {
      if (!options.r) throw InvalidArgumentError("--case line needs --r");
      system = line_subbundle_system(*options.r);
    } else {
      throw InvalidArgumentError("unknown --case '" + options.case_name +
                                 "' (expected 'line' or 'rank2of4')");
    }
    if (options.format == Format::jsonl) {
      write_table_jsonl(out, system, options.max_g);
    } else {
      write_table_csv(out, system, options.max_g);
    }
    return kExitSuccess;
  } catch (const UnsupportedRankPairError& e) {
    return detail::report_error(e, err, kExitUnsupportedRankPair);
  } catch (const Error& e) {
    return detail::report_error(e, err, kExitInvalidInstance);
  }
}

/// verify driver shared by the CLI and the fault-injection build: sweeps the
/// identity suite over the given system and maps the report onto the exit
/// contract.
inline int run_verify_with(const TransferSystem<Count>& system, const VerifyOptions& options,
                           std::ostream& out, std::ostream& err) {
  try {
    const VerificationReport report = run_verification(system, options.max_g);
    write_report(out, report);
    return report.all_passed() ? kExitSuccess : kExitVerificationFailure;
  } catch (const Error& e) {
    return detail::report_error(e, err, kExitInvalidInstance);
  }
}

inline int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  try {
    return run_verify_with(rank_two_of_four_system(), options, out, err);
  } catch (const Error& e) {
    return detail::report_error(e, err, kExitInvalidInstance);
  }
}

/// trace: the audited degree-splitting decomposition at genus g >= 2.
inline int run_trace(const TraceOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.format != Format::text && options.format != Format::json) {
      throw InvalidArgumentError("trace supports --format text or json");
    }
    const SubbundleProblem problem{options.r, options.d, options.r_prime, options.g};
    SupportedCase::classify(problem);  // settle the rank pair before looking at d'
    const SolvedProblem solved = solve_dprime(problem);
    const TraceTree tree = build_trace(solved);
    if (options.format == Format::json) {
      out << to_json(tree).dump() << "\n";
    } else {
      write_text(out, tree);
    }
    return kExitSuccess;
  } catch (const UnsupportedRankPairError& e) {
    return detail::report_error(e, err, kExitUnsupportedRankPair);
  } catch (const Error& e) {
    return detail::report_error(e, err, kExitInvalidInstance);
  }
}

}  // namespace subbundles
