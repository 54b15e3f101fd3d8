#include "neutro/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

namespace neutro::io {

std::string render_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

constexpr std::string_view kPairFields[] = {"mu", "nu"};
constexpr std::string_view kTripletFields[] = {"mu", "omega", "nu"};

std::span<const std::string_view> fields_for(Schema schema) {
  return schema == Schema::pair ? std::span<const std::string_view>(kPairFields)
                                : std::span<const std::string_view>(kTripletFields);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string lowered(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      return out;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_number(std::string_view text, std::size_t line, std::string_view field) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty()) {
    throw MalformedRow(line, "field '" + std::string(field) + "' is not a number: '" +
                                 std::string(text) + "'");
  }
  return value;
}

// Pulls near-miss inputs back onto [0,1]; anything beyond the tolerance is a
// hard error. NaN never passes the window test.
UnitValue ingest(double value, double clamp_tol, std::size_t line, std::string_view field,
                 std::size_t& clamped) {
  if (!(value >= -clamp_tol) || !(value <= 1.0 + clamp_tol)) {
    throw OutOfRange(line, std::string(field), value);
  }
  if (value < 0.0 || value > 1.0) {
    value = value < 0.0 ? 0.0 : 1.0;
    ++clamped;
  }
  return UnitValue{value};
}

void push_row(RecordBatch& batch, const double* values, std::size_t line) {
  if (batch.schema == Schema::pair) {
    batch.pairs.push_back({UnitValue{values[0]}, UnitValue{values[1]}});
  } else {
    batch.triplets.push_back({UnitValue{values[0]}, UnitValue{values[1]}, UnitValue{values[2]}});
  }
  batch.lines.push_back(line);
}

RecordBatch parse_csv(std::istream& in, Schema schema, double clamp_tol) {
  RecordBatch batch;
  batch.schema = schema;
  const auto fields = fields_for(schema);

  std::string raw;
  std::size_t line_no = 0;

  // Header: the first non-blank line. Columns may come in any order; ones we
  // do not know are counted and skipped.
  std::vector<std::string> names;
  std::size_t header_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) continue;
    for (std::string_view cell : split_fields(raw)) names.push_back(lowered(cell));
    header_line = line_no;
    break;
  }
  if (names.empty()) throw EmptyInput();

  std::vector<std::size_t> columns(fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (names[j] == fields[i]) {
        columns[i] = j;
        ++hits;
      }
    }
    if (hits == 0) {
      throw MalformedRow(header_line, "missing column '" + std::string(fields[i]) + "'");
    }
    if (hits > 1) {
      throw MalformedRow(header_line, "duplicate column '" + std::string(fields[i]) + "'");
    }
  }
  batch.ignored_columns = names.size() - fields.size();

  double values[3] = {0.0, 0.0, 0.0};
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) continue;
    const std::vector<std::string_view> cells = split_fields(raw);
    if (cells.size() != names.size()) {
      throw MalformedRow(line_no, "expected " + std::to_string(names.size()) + " fields, got " +
                                      std::to_string(cells.size()));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const double v = parse_number(cells[columns[i]], line_no, fields[i]);
      values[i] = ingest(v, clamp_tol, line_no, fields[i], batch.clamped_values);
    }
    push_row(batch, values, line_no);
  }
  if (batch.size() == 0) throw EmptyInput();
  return batch;
}

RecordBatch parse_jsonl(std::istream& in, Schema schema, double clamp_tol) {
  RecordBatch batch;
  batch.schema = schema;
  const auto fields = fields_for(schema);

  std::string raw;
  std::size_t line_no = 0;
  double values[3] = {0.0, 0.0, 0.0};
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) continue;
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::exception& e) {
      throw MalformedRow(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!row.is_object()) throw MalformedRow(line_no, "expected a JSON object");
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto key = std::string(fields[i]);
      const auto it = row.find(key);
      if (it == row.end()) throw MalformedRow(line_no, "missing field '" + key + "'");
      if (!it->is_number()) throw MalformedRow(line_no, "field '" + key + "' is not a number");
      values[i] = ingest(it->get<double>(), clamp_tol, line_no, key, batch.clamped_values);
    }
    batch.ignored_columns += row.size() - fields.size();
    push_row(batch, values, line_no);
  }
  if (batch.size() == 0) throw EmptyInput();
  return batch;
}

}  // namespace

RecordBatch parse_records(std::istream& in, Format format, Schema schema, double clamp_tol) {
  return format == Format::csv ? parse_csv(in, schema, clamp_tol)
                               : parse_jsonl(in, schema, clamp_tol);
}

RecordBatch generate_grid(Schema schema, double step) {
  if (!(step > 0.0)) throw InvalidStep(step);
  const double divisions = 1.0 / step;
  const long long n = std::llround(divisions);
  if (n < 1 || std::fabs(divisions - static_cast<double>(n)) > 1e-9) throw InvalidStep(step);

  const auto points = static_cast<std::size_t>(n) + 1;
  const auto level = [n](std::size_t i) {
    return UnitValue{static_cast<double>(i) / static_cast<double>(n)};
  };

  RecordBatch batch;
  batch.schema = schema;
  if (schema == Schema::pair) {
    batch.pairs.reserve(points * points);
    for (std::size_t i = 0; i < points; ++i) {
      for (std::size_t j = 0; j < points; ++j) {
        batch.pairs.push_back({level(i), level(j)});
      }
    }
  } else {
    batch.triplets.reserve(points * points * points);
    for (std::size_t i = 0; i < points; ++i) {
      for (std::size_t j = 0; j < points; ++j) {
        for (std::size_t k = 0; k < points; ++k) {
          batch.triplets.push_back({level(i), level(j), level(k)});
        }
      }
    }
  }
  batch.lines.resize(batch.size());
  for (std::size_t i = 0; i < batch.lines.size(); ++i) batch.lines[i] = i + 1;
  return batch;
}

namespace {

constexpr std::string_view kTripletHeader =
    "mu,omega,nu,t,t_w,f,f_w,c,n,s,u,a,h,entropy,neutro_entropy,anti_entropy";
constexpr std::string_view kPairHeader = "mu,nu,truth,falsity,ambiguity,ignorance,contradiction";

void require_good(std::ostream& out) {
  if (!out) throw SinkFailure("output stream failed");
}

void csv_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out.put(',');
    out << render_double(v);
    first = false;
  }
  out.put('\n');
}

void json_row(std::ostream& out, std::initializer_list<std::pair<std::string_view, double>> kv) {
  out.put('{');
  bool first = true;
  for (const auto& [key, value] : kv) {
    if (!first) out.put(',');
    out.put('"');
    out << key;
    out << "\":" << render_double(value);
    first = false;
  }
  out << "}\n";
}

}  // namespace

std::size_t write_results(std::span<const TripletResult> rows, Format format, std::ostream& out) {
  require_good(out);
  if (format == Format::csv) {
    out << kTripletHeader << '\n';
    for (const TripletResult& r : rows) {
      csv_row(out, {r.input.mu, r.input.omega, r.input.nu, r.indexes.t, r.indexes.t_w,
                    r.indexes.f, r.indexes.f_w, r.indexes.c, r.indexes.n, r.indexes.s,
                    r.indexes.u, r.indexes.a, r.indexes.h, r.triad.entropy,
                    r.triad.neutro_entropy, r.triad.anti_entropy});
      require_good(out);
    }
  } else {
    for (const TripletResult& r : rows) {
      json_row(out, {{"mu", r.input.mu},
                     {"omega", r.input.omega},
                     {"nu", r.input.nu},
                     {"t", r.indexes.t},
                     {"t_w", r.indexes.t_w},
                     {"f", r.indexes.f},
                     {"f_w", r.indexes.f_w},
                     {"c", r.indexes.c},
                     {"n", r.indexes.n},
                     {"s", r.indexes.s},
                     {"u", r.indexes.u},
                     {"a", r.indexes.a},
                     {"h", r.indexes.h},
                     {"entropy", r.triad.entropy},
                     {"neutro_entropy", r.triad.neutro_entropy},
                     {"anti_entropy", r.triad.anti_entropy}});
      require_good(out);
    }
  }
  out.flush();
  require_good(out);
  return rows.size();
}

std::size_t write_results(std::span<const PairResult> rows, Format format, std::ostream& out) {
  require_good(out);
  if (format == Format::csv) {
    out << kPairHeader << '\n';
    for (const PairResult& r : rows) {
      csv_row(out, {r.input.mu, r.input.nu, r.indexes.truth, r.indexes.falsity,
                    r.indexes.ambiguity, r.indexes.ignorance, r.indexes.contradiction});
      require_good(out);
    }
  } else {
    for (const PairResult& r : rows) {
      json_row(out, {{"mu", r.input.mu},
                     {"nu", r.input.nu},
                     {"truth", r.indexes.truth},
                     {"falsity", r.indexes.falsity},
                     {"ambiguity", r.indexes.ambiguity},
                     {"ignorance", r.indexes.ignorance},
                     {"contradiction", r.indexes.contradiction}});
      require_good(out);
    }
  }
  out.flush();
  require_good(out);
  return rows.size();
}

}  // namespace neutro::io
