#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "antichain/numeric.hpp"
#include "antichain/rank.hpp"

namespace antichain {

/// Malformed expected-value file; the message names the offending line.
class TableParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RecordKind { hetero, homo };

/// One row of an expected-value CSV:
///   kind,shape_or_m,n,expected
///   hetero,"5,5,10",3,25
///   homo,10,10,432457640
/// A hetero shape may also be written with ';' or spaces between entries.
struct ExpectedRecord {
  RecordKind kind;
  std::optional<ShapeVector> shape;  // hetero rows
  std::int64_t m = 0;                // homo rows
  std::int64_t n = 0;
  ExactInteger expected;
  int line = 0;

  std::string describe() const;  // "hetero 5,5,10" / "homo m=10 n=10"
};

/// Reads the header line and every record. Blank lines and lines starting
/// with '#' are skipped.
std::vector<ExpectedRecord> parse_expected_table(std::istream& in);

struct RecordOutcome {
  ExpectedRecord record;
  ExactInteger actual;
  bool pass = false;
};

/// hetero rows go through the heterogeneous formula, homo rows through the
/// homogeneous one (S(1, n) = 1 included).
std::vector<RecordOutcome> check_expected(const std::vector<ExpectedRecord>& records);

/// Splits one CSV line, honouring double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace antichain
