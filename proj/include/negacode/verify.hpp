#pragma once

// Recomputes the published example tables row by row.

#include <cstdint>
#include <string>
#include <vector>

#include "negacode/analysis.hpp"

namespace negacode {

enum class RowStatus { Pass, Fail, Flagged };
std::string to_string(RowStatus status);

struct VerifyRow {
  std::string label;
  std::string expected;
  std::string actual;
  RowStatus status = RowStatus::Pass;
  std::string note;
};

struct VerifyReport {
  std::string table;
  std::vector<VerifyRow> rows;

  /// No Fail rows; Flagged rows do not count against it.
  bool passed() const;
  std::size_t count(RowStatus status) const;
};

struct VerifyOptions {
  unsigned threads = 0;
  std::uint64_t distance_budget = kDefaultDistanceBudget;
  std::uint64_t mds_budget = kDefaultMdsBudget;
};

/// "3.6", "4.6", "5.3", "5.10", "5.14", "6.2".
const std::vector<std::string>& table_ids();
/// Throws InvalidArgument for an unknown id.
VerifyReport verify_table(const std::string& id, const VerifyOptions& opts = {});

}  // namespace negacode
