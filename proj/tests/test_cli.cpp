#include <doctest.h>

#include <json.hpp>

#include <cstdint>
#include <regex>
#include <sstream>
#include <string>

#include "subbundles/cli.hpp"

using namespace subbundles;

namespace {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

template <typename Options, typename Runner>
CommandResult run(Runner runner, const Options& options) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = runner(options, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count command on the reference instances") {
  auto result = run(run_count, CountOptions{4, 8, 2, 3, std::nullopt, Format::json});
  CHECK(result.exit_code == kExitSuccess);
  auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("d_prime") == 2);
  CHECK(j.at("parity") == "even");
  CHECK(j.at("count") == "288");
  CHECK(j.at("agreement") == true);

  result = run(run_count, CountOptions{4, 10, 2, 3, std::nullopt, Format::json});
  CHECK(result.exit_code == kExitSuccess);
  j = nlohmann::json::parse(result.out);
  CHECK(j.at("d_prime") == 3);
  CHECK(j.at("parity") == "odd");
  CHECK(j.at("count") == "224");

  result = run(run_count, CountOptions{4, 9, 2, 3, std::nullopt, Format::json});
  CHECK(result.exit_code == kExitInvalidInstance);
  CHECK(result.out.empty());
  CHECK_FALSE(result.err.empty());

  result = run(run_count, CountOptions{3, 4, 2, 2, std::nullopt, Format::text});
  CHECK(result.exit_code == kExitUnsupportedRankPair);

  result = run(run_count, CountOptions{4, 8, 2, 0, std::nullopt, Format::text});
  CHECK(result.exit_code == kExitInvalidInstance);
}

TEST_CASE("count command with a line-subbundle instance") {
  const auto result = run(run_count, CountOptions{3, 4, 1, 2, std::nullopt, Format::json});
  // d - 3d' = 2(g - 1) has no integer solution for d = 4, g = 2
  CHECK(result.exit_code == kExitInvalidInstance);

  const auto ok = run(run_count, CountOptions{3, 5, 1, 2, std::nullopt, Format::json});
  CHECK(ok.exit_code == kExitSuccess);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("d_prime") == 1);
  CHECK(j.at("count") == "9");
}

TEST_CASE("every method flag produces the same count") {
  // (4, 10, 2, 6) solves to d' = 0, even; the genus-6 even count is 133120
  for (Method method : {Method::recurrence, Method::matrix_power, Method::binomial_sum,
                        Method::eigen_form}) {
    const auto result = run(run_count, CountOptions{4, 10, 2, 6, method, Format::json});
    CHECK(result.exit_code == kExitSuccess);
    const auto j = nlohmann::json::parse(result.out);
    CHECK(j.at("count") == "133120");
    CHECK(j.at("method") == std::string(to_string(method)));
  }
}

TEST_CASE("counts serialize as decimal strings with no leading zeros") {
  const auto result = run(run_count, CountOptions{4, 202, 2, 100, std::nullopt, Format::json});
  CHECK(result.exit_code == kExitSuccess);
  const auto j = nlohmann::json::parse(result.out);
  const auto count = j.at("count").get<std::string>();
  CHECK(count.size() == 91);  // even count at genus 100 has 91 decimal digits
  CHECK(std::regex_match(count, std::regex("0|[1-9][0-9]*")));
  CHECK(j.at("count").is_string());
}

TEST_CASE("output records round-trip through JSON") {
  const SolvedProblem solved = solve_dprime({4, 8, 2, 5});
  const OutputRecord record = count_with_all_methods(solved);
  CHECK(record.count == 16896);
  CHECK(record.agreement);
  CHECK(output_record_from_json(to_json(record)) == record);
}

TEST_CASE("trace trees round-trip through JSON") {
  const TraceTree tree = build_trace(solve_dprime({4, 8, 2, 3}));
  CHECK(trace_tree_from_json(to_json(tree)) == tree);

  const TraceTree line_tree = build_trace(solve_dprime({3, 5, 1, 2}));
  CHECK(trace_tree_from_json(to_json(line_tree)) == line_tree);

  // abstract trees have no concrete split degrees, so they cannot serialize
  const TraceTree abstract = build_trace(SupportedCase::rank_two_of_four(), Parity::even, 3);
  CHECK_THROWS_AS(to_json(abstract), InvalidArgumentError);
}

TEST_CASE("trace command emits the expected JSON schema") {
  const auto result = run(run_trace, TraceOptions{4, 8, 2, 3, Format::json});
  CHECK(result.exit_code == kExitSuccess);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("genus") == 3);
  CHECK(j.at("parity") == "even");
  CHECK(j.at("total") == "288");
  REQUIRE(j.at("records").size() == 3);
  CHECK(j.at("records").at(0).at("split") == nlohmann::json::array({0, 2}));
  CHECK(j.at("records").at(1).at("split") == nlohmann::json::array({1, 1}));
  CHECK(j.at("records").at(2).at("split") == nlohmann::json::array({1, 2}));
  CHECK(j.at("records").at(2).at("excluded") == true);
  CHECK(j.at("records").at(2).at("product") == "0");
  CHECK(j.at("records").at(2).at("reason").get<std::string>().size() > 0);

  CHECK(run(run_trace, TraceOptions{4, 8, 2, 1, Format::json}).exit_code == kExitInvalidInstance);
  CHECK(run(run_trace, TraceOptions{3, 4, 2, 3, Format::json}).exit_code ==
        kExitUnsupportedRankPair);
}

TEST_CASE("table command emits CSV and JSON lines") {
  auto result = run(run_table, TableOptions{"rank2of4", std::nullopt, 2, Format::csv});
  CHECK(result.exit_code == kExitSuccess);
  CHECK(result.out == "g,even,odd\n1,6,2\n2,40,24\n");

  result = run(run_table, TableOptions{"line", 2, 3, Format::csv});
  CHECK(result.exit_code == kExitSuccess);
  CHECK(result.out == "g,count\n1,2\n2,4\n3,8\n");

  result = run(run_table, TableOptions{"rank2of4", std::nullopt, 2, Format::jsonl});
  CHECK(result.exit_code == kExitSuccess);
  std::istringstream lines(result.out);
  std::string line;
  std::getline(lines, line);
  auto j = nlohmann::json::parse(line);
  CHECK(j.at("g") == 1);
  CHECK(j.at("even") == "6");
  CHECK(j.at("odd") == "2");
  std::getline(lines, line);
  j = nlohmann::json::parse(line);
  CHECK(j.at("even") == "40");

  CHECK(run(run_table, TableOptions{"rank2of4", std::nullopt, 0, Format::csv}).exit_code ==
        kExitInvalidInstance);
  CHECK(run(run_table, TableOptions{"line", std::nullopt, 3, Format::csv}).exit_code ==
        kExitInvalidInstance);
  CHECK(run(run_table, TableOptions{"quintic", std::nullopt, 3, Format::csv}).exit_code ==
        kExitInvalidInstance);
}

TEST_CASE("verify passes on the shipped system and fails on a perturbed one") {
  auto result = run([](const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    return run_verify(o, out, err);
  }, VerifyOptions{64});
  CHECK(result.exit_code == kExitSuccess);
  CHECK(result.out.find("result: PASS") != std::string::npos);
  CHECK(result.out.find("64/64") != std::string::npos);

  TransferSystem<Count> perturbed = rank_two_of_four_system();
  perturbed.matrix(1, 0) += Count(1);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_verify_with(perturbed, VerifyOptions{16}, out, err);
  CHECK(code == kExitVerificationFailure);
  CHECK(out.str().find("result: FAIL") != std::string::npos);

  CHECK(run([](const VerifyOptions& o, std::ostream& o2, std::ostream& e2) {
          return run_verify(o, o2, e2);
        }, VerifyOptions{0}).exit_code == kExitInvalidInstance);
}

TEST_CASE("verification report structure") {
  const VerificationReport report = run_verification(rank_two_of_four_system(), 48);
  CHECK(report.checks.size() == 7);
  for (const auto& check : report.checks) {
    CHECK(check.passed == 48);
    CHECK(check.failed == 0);
  }
  CHECK(report.all_passed());

  TransferSystem<Count> perturbed = rank_two_of_four_system();
  perturbed.matrix(0, 1) += Count(1);
  const VerificationReport bad = run_verification(perturbed, 8);
  CHECK_FALSE(bad.all_passed());
  // recurrence and matrix power share the perturbed matrix, so they still
  // agree with each other; every identity anchored off-matrix must fail
  CHECK(bad.checks[0].failed == 0);
  CHECK(bad.checks[1].failed > 0);
  CHECK(bad.checks[2].failed > 0);
  CHECK(bad.checks[3].failed > 0);

  CHECK_THROWS_AS(run_verification(line_subbundle_system(2), 4), InvalidArgumentError);
}

TEST_CASE("format and method name parsing") {
  CHECK(format_from_string("json") == Format::json);
  CHECK(format_from_string("jsonl") == Format::jsonl);
  CHECK_FALSE(format_from_string("yaml").has_value());
  CHECK(method_from_string("matrix-power") == Method::matrix_power);
  CHECK_FALSE(method_from_string("guess").has_value());
  CHECK(to_string(Method::binomial_sum) == "binomial-sum");
}

TEST_CASE("text renderings stay readable") {
  auto result = run(run_count, CountOptions{4, 8, 2, 3, std::nullopt, Format::text});
  CHECK(result.exit_code == kExitSuccess);
  CHECK(result.out.find("count: 288") != std::string::npos);
  CHECK(result.out.find("d'=2") != std::string::npos);

  result = run(run_trace, TraceOptions{4, 8, 2, 3, Format::text});
  CHECK(result.exit_code == kExitSuccess);
  CHECK(result.out.find("split (0, 2): 6 x 40 = 240") != std::string::npos);
  CHECK(result.out.find("total: 288") != std::string::npos);

  std::ostringstream os;
  write_text(os, build_trace(SupportedCase::rank_two_of_four(), Parity::even, 2));
  CHECK(os.str().find("split (1, d'-1)") != std::string::npos);
}
