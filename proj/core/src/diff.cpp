#include "simtrace/diff.hpp"

#include <algorithm>

namespace simtrace {

const char* ToString(DiffOp op) noexcept {
  switch (op) {
    case DiffOp::kEqual: return "equal";
    case DiffOp::kInsert: return "insert";
    case DiffOp::kDelete: return "delete";
  }
  return "equal";
}

std::vector<std::string_view> SplitLines(std::string_view content) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    lines.push_back(content.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

namespace {

// Furthest-reaching x per diagonal k in [-bound, bound], stored at k + bound.
struct Frontier {
  std::ptrdiff_t bound = 0;
  std::vector<std::ptrdiff_t> x;

  std::ptrdiff_t at(std::ptrdiff_t k) const { return x[static_cast<std::size_t>(k + bound)]; }
};

void Append(std::vector<DiffHunk>& hunks, DiffOp op, std::size_t x, std::size_t y) {
  const std::size_t dx = op == DiffOp::kInsert ? 0 : 1;
  const std::size_t dy = op == DiffOp::kDelete ? 0 : 1;
  if (!hunks.empty() && hunks.back().op == op) {
    hunks.back().left.end += dx;
    hunks.back().right.end += dy;
    return;
  }
  hunks.push_back({op, {x, x + dx}, {y, y + dy}});
}

}  // namespace

std::vector<DiffHunk> DiffLines(const std::vector<std::string_view>& a,
                                const std::vector<std::string_view>& b) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  const auto m = static_cast<std::ptrdiff_t>(b.size());
  const std::ptrdiff_t max = n + m;

  std::vector<std::ptrdiff_t> v(static_cast<std::size_t>(2 * max + 3), 0);
  auto V = [&](std::ptrdiff_t k) -> std::ptrdiff_t& {
    return v[static_cast<std::size_t>(k + max + 1)];
  };

  // trace[d] is the frontier before round d, restricted to the diagonals the
  // backtrack can touch.
  std::vector<Frontier> trace;
  std::ptrdiff_t found = -1;
  for (std::ptrdiff_t d = 0; d <= max && found < 0; ++d) {
    Frontier snapshot{d + 1, {}};
    snapshot.x.reserve(static_cast<std::size_t>(2 * d + 3));
    for (std::ptrdiff_t k = -d - 1; k <= d + 1; ++k) snapshot.x.push_back(V(k));
    trace.push_back(std::move(snapshot));

    for (std::ptrdiff_t k = -d; k <= d; k += 2) {
      std::ptrdiff_t x = (k == -d || (k != d && V(k - 1) < V(k + 1))) ? V(k + 1) : V(k - 1) + 1;
      std::ptrdiff_t y = x - k;
      while (x < n && y < m && a[static_cast<std::size_t>(x)] == b[static_cast<std::size_t>(y)]) {
        ++x;
        ++y;
      }
      V(k) = x;
      if (x >= n && y >= m) {
        found = d;
        break;
      }
    }
  }

  // Walk back from (n, m), collecting single-line steps in reverse.
  struct Step {
    DiffOp op;
    std::size_t x, y;
  };
  std::vector<Step> steps;
  std::ptrdiff_t x = n, y = m;
  for (std::ptrdiff_t d = found; d >= 0; --d) {
    const auto& frontier = trace[static_cast<std::size_t>(d)];
    const std::ptrdiff_t k = x - y;
    const std::ptrdiff_t prev_k =
        (k == -d || (k != d && frontier.at(k - 1) < frontier.at(k + 1))) ? k + 1 : k - 1;
    const std::ptrdiff_t prev_x = frontier.at(prev_k);
    const std::ptrdiff_t prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      --x;
      --y;
      steps.push_back({DiffOp::kEqual, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
    }
    if (d > 0) {
      if (x == prev_x) {
        steps.push_back({DiffOp::kInsert, static_cast<std::size_t>(prev_x),
                         static_cast<std::size_t>(prev_y)});
      } else {
        steps.push_back({DiffOp::kDelete, static_cast<std::size_t>(prev_x),
                         static_cast<std::size_t>(prev_y)});
      }
    }
    x = prev_x;
    y = prev_y;
  }

  std::vector<DiffHunk> hunks;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) Append(hunks, it->op, it->x, it->y);
  return hunks;
}

std::vector<DiffHunk> DiffLines(std::string_view left, std::string_view right) {
  return DiffLines(SplitLines(left), SplitLines(right));
}

std::size_t EditDistance(const std::vector<DiffHunk>& hunks) {
  std::size_t distance = 0;
  for (const auto& h : hunks) {
    if (h.op == DiffOp::kDelete) distance += h.left.size();
    if (h.op == DiffOp::kInsert) distance += h.right.size();
  }
  return distance;
}

}  // namespace simtrace
