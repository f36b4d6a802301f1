#include "antichain/expected_table.hpp"

#include <charconv>
#include <istream>

#include "antichain/closed_forms.hpp"

namespace antichain {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::int64_t parse_int(const std::string& text, int line, const char* what) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw TableParseError("line " + std::to_string(line) + ": bad " + what + " '" + text + "'");
  }
  return v;
}

ShapeVector parse_shape(const std::string& text, int line) {
  std::vector<std::int64_t> entries;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) entries.push_back(parse_int(token, line, "shape entry"));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ';' || c == ' ') flush();
    else token += c;
  }
  flush();
  try {
    return ShapeVector(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw TableParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

}  // namespace

std::string ExpectedRecord::describe() const {
  if (kind == RecordKind::hetero) return "hetero " + shape->to_string();
  return "homo m=" + std::to_string(m) + " n=" + std::to_string(n);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  for (auto& f : fields) f = trim(f);
  return fields;
}

std::vector<ExpectedRecord> parse_expected_table(std::istream& in) {
  std::vector<ExpectedRecord> records;
  std::string raw;
  int line = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = split_csv_line(text);
    if (!header_seen) {
      if (fields != std::vector<std::string>{"kind", "shape_or_m", "n", "expected"}) {
        throw TableParseError("line " + std::to_string(line) + ": expected header kind,shape_or_m,n,expected");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 4) {
      throw TableParseError("line " + std::to_string(line) + ": expected 4 fields, got " + std::to_string(fields.size()));
    }
    ExpectedRecord r{RecordKind::hetero, std::nullopt, 0, parse_int(fields[2], line, "n"), ExactInteger(0), line};
    try {
      r.expected = ExactInteger::parse(fields[3]);
    } catch (const std::invalid_argument&) {
      throw TableParseError("line " + std::to_string(line) + ": bad expected count '" + fields[3] + "'");
    }
    if (fields[0] == "hetero") {
      r.shape = parse_shape(fields[1], line);
      if (r.shape->size() != r.n) {
        throw TableParseError("line " + std::to_string(line) + ": n = " + fields[2] + " but shape has " +
                              std::to_string(r.shape->size()) + " entries");
      }
    } else if (fields[0] == "homo") {
      r.kind = RecordKind::homo;
      r.m = parse_int(fields[1], line, "m");
      if (r.m < 1 || r.n < 1) throw TableParseError("line " + std::to_string(line) + ": m and n must be positive");
    } else {
      throw TableParseError("line " + std::to_string(line) + ": unknown kind '" + fields[0] + "'");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<RecordOutcome> check_expected(const std::vector<ExpectedRecord>& records) {
  std::vector<RecordOutcome> outcomes;
  outcomes.reserve(records.size());
  for (const auto& r : records) {
    ExactInteger actual =
        r.kind == RecordKind::hetero ? hetero_largest_antichain(*r.shape) : sander_homogeneous(r.m, r.n);
    const bool pass = actual == r.expected;
    outcomes.push_back({r, std::move(actual), pass});
  }
  return outcomes;
}

}  // namespace antichain
