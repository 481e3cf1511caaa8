#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace simtrace::csv {

using Row = std::vector<std::string>;

// RFC 4180 reader: comma separated, double-quote escaping, CRLF or LF line
// ends. A trailing newline does not produce an empty row. A UTF-8 BOM is
// skipped. Throws Error(kMetadataFormat) on an unterminated quoted field or
// on a stray quote inside an unquoted field.
std::vector<Row> Parse(std::string_view text);

// Quotes a field when it contains a comma, quote, CR or LF.
std::string Escape(std::string_view field);

std::string FormatRow(const Row& row);

}  // namespace simtrace::csv
