#include "simtrace/source_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace simtrace {

std::size_t CountLines(std::string_view content) noexcept {
  if (content.empty()) return 0;
  auto lines = static_cast<std::size_t>(std::count(content.begin(), content.end(), '\n'));
  if (content.back() != '\n') ++lines;
  return lines;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  // Exactly `digits` decimal digits.
  std::optional<int> number(int digits) {
    if (pos_ + static_cast<std::size_t>(digits) > text_.size()) return std::nullopt;
    int value = 0;
    auto first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, first + digits, value);
    if (ec != std::errc{} || ptr != first + digits) return std::nullopt;
    pos_ += static_cast<std::size_t>(digits);
    return value;
  }

  // Fraction digits after the decimal point, as milliseconds.
  int fraction_ms() {
    int ms = 0;
    int scale = 100;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ms += (peek() - '0') * scale;
      scale /= 10;
      ++pos_;
    }
    return ms;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Timestamp> ParseTimestamp(std::string_view text) {
  using namespace std::chrono;
  Cursor in(Trim(text));

  auto y = in.number(4);
  if (!y || !in.accept('-')) return std::nullopt;
  auto mo = in.number(2);
  if (!mo || !in.accept('-')) return std::nullopt;
  auto d = in.number(2);
  if (!d) return std::nullopt;

  year_month_day ymd{year{*y}, month{static_cast<unsigned>(*mo)},
                     day{static_cast<unsigned>(*d)}};
  if (!ymd.ok()) return std::nullopt;

  int hh = 0, mm = 0, ss = 0, ms = 0;
  int offset_minutes = 0;
  if (in.accept('T') || in.accept(' ')) {
    auto h = in.number(2);
    if (!h || !in.accept(':')) return std::nullopt;
    auto m = in.number(2);
    if (!m) return std::nullopt;
    hh = *h;
    mm = *m;
    if (in.accept(':')) {
      auto s = in.number(2);
      if (!s) return std::nullopt;
      ss = *s;
      if (in.accept('.') || in.accept(',')) ms = in.fraction_ms();
    }
    if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;

    in.accept(' ');
    if (in.accept('Z') || in.accept('z')) {
      // UTC
    } else if (in.peek() == '+' || in.peek() == '-') {
      int sign = in.peek() == '-' ? -1 : 1;
      in.accept(in.peek());
      auto oh = in.number(2);
      if (!oh) return std::nullopt;
      in.accept(':');
      auto om = in.number(2);
      if (!om) return std::nullopt;
      offset_minutes = sign * (*oh * 60 + *om);
    }
  }
  if (!in.done()) return std::nullopt;

  sys_time<milliseconds> t = sys_days{ymd};
  t += hours{hh} + minutes{mm} + seconds{ss} + milliseconds{ms};
  t -= minutes{offset_minutes};
  return t;
}

std::string FormatTimestamp(Timestamp ts) {
  using namespace std::chrono;
  auto day_point = floor<days>(ts);
  year_month_day ymd{day_point};
  hh_mm_ss<milliseconds> tod{ts - day_point};
  char buf[40];
  auto ms = tod.subseconds().count();
  if (ms == 0) {
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ",
                  static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()), static_cast<int>(tod.hours().count()),
                  static_cast<int>(tod.minutes().count()),
                  static_cast<int>(tod.seconds().count()));
  } else {
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ",
                  static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()), static_cast<int>(tod.hours().count()),
                  static_cast<int>(tod.minutes().count()),
                  static_cast<int>(tod.seconds().count()), static_cast<int>(ms));
  }
  return buf;
}

}  // namespace simtrace
