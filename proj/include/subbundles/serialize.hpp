#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "subbundles/count.hpp"
#include "subbundles/counting.hpp"
#include "subbundles/degeneration.hpp"
#include "subbundles/errors.hpp"
#include "subbundles/recurrence.hpp"

namespace subbundles {

// Counts always serialize as decimal strings: common JSON consumers truncate
// integers beyond 2^53, and the counts here outgrow that by genus 18.

inline nlohmann::json to_json(const OutputRecord& record) {
  return nlohmann::json{{"r", record.instance.problem.r},
                        {"d", record.instance.problem.d},
                        {"r_prime", record.instance.problem.r_prime},
                        {"g", record.instance.problem.g},
                        {"d_prime", record.instance.d_prime},
                        {"parity", to_string(record.instance.parity)},
                        {"count", record.count.str()},
                        {"method", to_string(record.method)},
                        {"agreement", record.agreement}};
}

inline OutputRecord output_record_from_json(const nlohmann::json& j) {
  OutputRecord record;
  record.instance.problem.r = j.at("r").get<std::int64_t>();
  record.instance.problem.d = j.at("d").get<std::int64_t>();
  record.instance.problem.r_prime = j.at("r_prime").get<std::int64_t>();
  record.instance.problem.g = j.at("g").get<std::int64_t>();
  record.instance.d_prime = j.at("d_prime").get<std::int64_t>();
  record.instance.parity = parity_from_string(j.at("parity").get<std::string>());
  record.count = Count::from_decimal(j.at("count").get<std::string>());
  const std::string method_name = j.at("method").get<std::string>();
  const auto method = method_from_string(method_name);
  if (!method) throw Error("unknown method '" + method_name + "'");
  record.method = *method;
  record.agreement = j.at("agreement").get<bool>();
  return record;
}

inline void write_text(std::ostream& os, const OutputRecord& record) {
  const SolvedProblem& s = record.instance;
  os << "instance: r=" << s.problem.r << " d=" << s.problem.d << " r'=" << s.problem.r_prime
     << " g=" << s.problem.g << "  ->  d'=" << s.d_prime << " (" << to_string(s.parity) << ")\n";
  os << "count: " << record.count << "\n";
  os << "method: " << to_string(record.method)
     << (record.agreement ? "" : "  [methods disagree]") << "\n";
}

inline nlohmann::json to_json(const TraceTree& tree) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& record : tree.records) {
    const auto split = concrete_split(tree, record);
    records.push_back(nlohmann::json{{"split", {split.first, split.second}},
                                     {"elliptic_count", record.elliptic_count.str()},
                                     {"recursive_count", record.recursive_count.str()},
                                     {"product", record.product.str()},
                                     {"excluded", record.excluded},
                                     {"reason", record.reason}});
  }
  return nlohmann::json{{"genus", tree.genus},
                        {"parity", to_string(tree.parity)},
                        {"records", std::move(records)},
                        {"total", tree.total.str()}};
}

/// Rebuilds a TraceTree from its JSON form. The schema does not carry the
/// case tag explicitly; it is recovered from the record count (a line trace
/// has a single split, the rank-2-of-4 trace has three) and, for the line
/// case, the ambient rank is the elliptic-side count.
inline TraceTree trace_tree_from_json(const nlohmann::json& j) {
  TraceTree tree;
  tree.genus = j.at("genus").get<std::int64_t>();
  tree.parity = parity_from_string(j.at("parity").get<std::string>());
  tree.total = Count::from_decimal(j.at("total").get<std::string>());

  const auto& records = j.at("records");
  if (!records.is_array() || records.empty()) throw Error("trace JSON needs a records array");
  const std::int64_t d_prime = records.at(0).at("split").at(1).get<std::int64_t>();
  tree.d_prime = d_prime;
  for (const auto& rj : records) {
    ContributionRecord record;
    record.elliptic_degree = rj.at("split").at(0).get<std::int64_t>();
    record.genus_side_offset = rj.at("split").at(1).get<std::int64_t>() - d_prime;
    record.elliptic_count = Count::from_decimal(rj.at("elliptic_count").get<std::string>());
    record.recursive_count = Count::from_decimal(rj.at("recursive_count").get<std::string>());
    record.product = Count::from_decimal(rj.at("product").get<std::string>());
    record.excluded = rj.at("excluded").get<bool>();
    record.reason = rj.at("reason").get<std::string>();
    tree.records.push_back(std::move(record));
  }
  tree.trace_case = tree.records.size() == 1
                        ? SupportedCase::line_subbundle(tree.records.at(0).elliptic_count.to_int64())
                        : SupportedCase::rank_two_of_four();
  return tree;
}

inline void write_text(std::ostream& os, const TraceTree& tree) {
  const bool line_case = tree.trace_case.kind == SupportedCase::Kind::line_subbundle;
  os << "trace: " << (line_case ? "line subbundles, r=" + std::to_string(tree.trace_case.ambient_rank)
                                : std::string("rank-2 subbundles of a rank-4 bundle"))
     << ", genus " << tree.genus << ", d' " << to_string(tree.parity);
  if (tree.d_prime) os << " (d' = " << *tree.d_prime << ")";
  os << "\n";
  for (const auto& record : tree.records) {
    os << "  split (";
    if (tree.d_prime) {
      const auto split = concrete_split(tree, record);
      os << split.first << ", " << split.second;
    } else {
      os << record.elliptic_degree << ", d'"
         << (record.genus_side_offset == 0 ? "" : std::to_string(record.genus_side_offset));
    }
    os << "): ";
    if (record.excluded) {
      os << "excluded; " << record.reason << "\n";
    } else {
      os << record.elliptic_count << " x " << record.recursive_count << " = " << record.product
         << "\n";
    }
  }
  os << "total: " << tree.total << "\n";
}

/// Table rows (g, counts...) for g = 1..max_genus, one step of the
/// recurrence per row. CSV carries a header with the state labels.
inline void write_table_csv(std::ostream& os, const TransferSystem<Count>& system,
                            std::int64_t max_genus) {
  os << "g";
  for (const auto& label : system.base.labels) os << "," << label;
  os << "\n";
  StateVector<Count> state = system.base;
  for (std::int64_t g = 1; g <= max_genus; ++g) {
    if (g > 1) state = step(system, state);
    os << g;
    for (Eigen::Index i = 0; i < state.entries.size(); ++i) os << "," << state.entries(i);
    os << "\n";
  }
}

/// JSON-lines variant: one object per genus, counts as decimal strings.
inline void write_table_jsonl(std::ostream& os, const TransferSystem<Count>& system,
                              std::int64_t max_genus) {
  StateVector<Count> state = system.base;
  for (std::int64_t g = 1; g <= max_genus; ++g) {
    if (g > 1) state = step(system, state);
    nlohmann::json row{{"g", g}};
    for (Eigen::Index i = 0; i < state.entries.size(); ++i) {
      row[state.labels[static_cast<std::size_t>(i)]] = state.entries(i).str();
    }
    os << row.dump() << "\n";
  }
}

}  // namespace subbundles
