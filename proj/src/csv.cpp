#include <geofreq/csv.hpp>

#include <geofreq/error.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace geofreq {
namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::MalformedCsv, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

void append_double(std::string& out, double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  out.append(buf.data(), res.ptr);
}

std::string format_double(double x) {
  std::string s;
  append_double(s, x);
  return s;
}

void append_cell(std::string& out, std::optional<double> x) {
  if (x) append_double(out, *x);
}

std::optional<double> parse_double(std::string_view field) {
  if (field.empty()) return std::nullopt;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  // from_chars refuses a leading '+'
  if (*first == '+') ++first;
  double x = 0.0;
  const auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(x)) return std::nullopt;
  return x;
}

void write_waveform_csv(std::ostream& os, const TimeSeries& series,
                        std::span<const std::string> comments) {
  if (series.channel_count() != 3) {
    throw Error(ErrorKind::WrongChannelCount, "waveform CSV holds exactly three channels");
  }
  std::string out;
  out.reserve(series.size() * 80 + 64);
  for (const auto& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  out += kWaveformHeader;
  out += '\n';
  for (std::size_t k = 0; k < series.size(); ++k) {
    append_double(out, series.time(k));
    for (std::size_t c = 0; c < 3; ++c) {
      out += ',';
      append_double(out, series.value(k, c));
    }
    out += '\n';
  }
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
}

TimeSeries read_waveform_csv(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.front() == '#') continue;
    if (line != kWaveformHeader) {
      malformed(lineno, "expected header '" + std::string(kWaveformHeader) + "', got '" + line +
                            "'");
    }
    header_seen = true;
    break;
  }
  if (!header_seen) malformed(lineno, "missing header");

  std::vector<double> times;
  std::vector<double> values;
  bool ended = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) {
      ended = true;
      continue;
    }
    if (ended) malformed(lineno - 1, "blank line inside data");
    std::array<double, 4> row{};
    std::size_t start = 0;
    for (std::size_t f = 0; f < 4; ++f) {
      const std::size_t comma = line.find(',', start);
      const bool last = f == 3;
      if (last != (comma == std::string::npos)) {
        malformed(lineno, "expected 4 fields");
      }
      const std::string_view field =
          std::string_view(line).substr(start, last ? std::string::npos : comma - start);
      const auto x = parse_double(field);
      if (!x) malformed(lineno, "bad number '" + std::string(field) + "'");
      row[f] = *x;
      start = comma + 1;
    }
    times.push_back(row[0]);
    values.insert(values.end(), row.begin() + 1, row.end());
  }

  if (times.size() < 2) malformed(lineno, "need at least two data rows");
  try {
    return TimeSeries({"va", "vb", "vc"}, std::move(times), std::move(values));
  } catch (const Error& e) {
    throw Error(ErrorKind::MalformedCsv, e.what());
  }
}

TimeSeries read_waveform_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
  return read_waveform_csv(in);
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace geofreq
