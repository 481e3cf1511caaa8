#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace simtrace {

using FileId = std::size_t;
using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

// One submission in a collection.
struct SourceFile {
  FileId id = 0;
  std::string path;  // relative, '/'-separated
  std::string content;
  std::size_t line_count = 0;
  std::string language;
  std::optional<std::string> author;
  std::optional<Timestamp> timestamp;
  std::optional<std::string> label;
};

// Number of newline-delimited lines: "a\nb" and "a\nb\n" both have two,
// the empty string has none.
std::size_t CountLines(std::string_view content) noexcept;

// Parses an ISO 8601 instant. Accepts a date ("2024-01-02"), an optional
// time separated by 'T' or a space, optional fractional seconds and an
// optional zone designator ("Z", "+01:00", "+0100", " +0200"). Missing zone
// means UTC.
std::optional<Timestamp> ParseTimestamp(std::string_view text);

// "YYYY-MM-DDTHH:MM:SSZ", with ".mmm" when the instant has milliseconds.
std::string FormatTimestamp(Timestamp ts);

}  // namespace simtrace
