#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splinedim::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kIoError = 2, kMismatch = 3 };

struct TableRow {
  int r = 0;
  int d = 0;
  std::int64_t lower_bound = 0;
  std::int64_t correction = 0;
  std::int64_t total = 0;
  std::string method;
  std::optional<std::int64_t> oracle_total;
  std::optional<bool> match;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

enum class TableFormat { Csv, Tsv, Pretty };

void emit_table(std::ostream& out, const std::vector<TableRow>& rows, TableFormat format);
/// Inverse of emit_table for Csv; throws splinedim::Error(ParseError).
std::vector<TableRow> parse_table_csv(std::string_view text);

/// Entry point behind the splinedim executable. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splinedim::cli
