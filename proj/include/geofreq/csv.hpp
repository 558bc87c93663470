#pragma once

#include <geofreq/time_series.hpp>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geofreq {

inline constexpr std::string_view kWaveformHeader = "t,va,vb,vc";

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);
void append_double(std::string& out, double x);

/// Appends the cell, or nothing for an empty optional.
void append_cell(std::string& out, std::optional<double> x);

/// Parses a whole field as a double. Rejects blanks, trailing junk and
/// non-finite values.
std::optional<double> parse_double(std::string_view field);

/// Header `t,va,vb,vc`, one LF-terminated row per sample, leading comment
/// lines each prefixed with "# ".
void write_waveform_csv(std::ostream& os, const TimeSeries& series,
                        std::span<const std::string> comments = {});

/// Reads a waveform CSV. `#` lines are allowed before the header and a
/// final empty line is tolerated. Throws Error{MalformedCsv} with the line
/// number for a wrong header, a bad field, a short row or a non-uniform grid.
TimeSeries read_waveform_csv(std::istream& is);

TimeSeries read_waveform_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace geofreq
