// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. An optional argument runs only criteria whose name contains it.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "program_gen.hpp"
#include "simtrace/analyze.hpp"
#include "simtrace/compare.hpp"
#include "simtrace/csv.hpp"
#include "simtrace/diff.hpp"
#include "simtrace/fingerprint.hpp"
#include "simtrace/report_io.hpp"

namespace st = simtrace;
namespace tst = simtrace::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::duration d) { return std::chrono::duration<double>(d).count(); }

// ---------------------------------------------------------------------------

st::TokenizedFile RandomTokens(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<st::TokenKind> kind(0, st::kMaxTokenKind);
  st::TokenizedFile f;
  for (std::size_t i = 0; i < n; ++i) {
    const auto col = static_cast<std::uint32_t>(i);
    f.tokens.push_back({kind(rng), {0, col, 0, col + 1}});
  }
  return f;
}

Outcome WinnowingGuarantee() {
  const std::size_t k = st::kDefaultKgramLength, w = st::kDefaultWindowLength;
  const std::size_t planted = k + w - 1;
  std::mt19937_64 rng(101);
  const auto start = Clock::now();
  int hits = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const auto shared = RandomTokens(rng, planted).tokens;
    auto plant = [&](st::FileId id) {
      auto f = RandomTokens(rng, 100 + rng() % 400);
      const auto at = static_cast<std::ptrdiff_t>(rng() % (f.tokens.size() + 1));
      f.tokens.insert(f.tokens.begin() + at, shared.begin(), shared.end());
      f.file_id = id;
      return st::FingerprintFile(f, k, w);
    };
    const auto a = plant(0).Hashes();
    const auto b = plant(1).Hashes();
    const std::set<st::Hash> left(a.begin(), a.end());
    if (std::any_of(b.begin(), b.end(), [&](st::Hash h) { return left.contains(h); })) ++hits;
  }
  const double elapsed = Seconds(Clock::now() - start);
  return {hits == trials && elapsed < 10.0,
          fmt::format("{}/{} trials share a fingerprint, {:.2f} s (limit 10 s)", hits, trials,
                      elapsed)};
}

Outcome SamplingDensity() {
  std::mt19937_64 rng(102);
  const std::size_t n = 10000;
  const int sequences = 20;
  bool pass = true;
  std::string detail;
  for (std::size_t w : {4u, 17u, 50u}) {
    const double expected = 2.0 / static_cast<double>(w + 1);
    double worst = 0.0;
    std::size_t selected_total = 0;
    for (int s = 0; s < sequences; ++s) {
      std::vector<st::Hash> values(n);
      std::iota(values.begin(), values.end(), st::Hash{0});
      std::shuffle(values.begin(), values.end(), rng);
      std::vector<st::KgramHash> seq;
      for (std::size_t i = 0; i < n; ++i) seq.push_back({values[i] * 7919 % st::kHashModulus, i});
      const auto picked = st::Winnow(seq, w).size();
      selected_total += picked;
      const double density = static_cast<double>(picked) / static_cast<double>(n);
      worst = std::max(worst, std::abs(density / expected - 1.0));
    }
    const double mean = static_cast<double>(selected_total) / static_cast<double>(n * sequences);
    const bool ok = worst <= 0.15;
    pass = pass && ok;
    detail += fmt::format("{}w={} mean {:.4f} vs {:.4f} (worst dev {:.1f}%)", detail.empty() ? "" : "; ",
                          w, mean, expected, 100 * worst);
  }
  return {pass, detail};
}

Outcome HashBound() {
  std::mt19937_64 rng(103);
  const std::size_t k = st::kDefaultKgramLength;
  const std::size_t count = 1'000'000;
  std::uniform_int_distribution<st::TokenKind> kind(0, st::kMaxTokenKind);
  std::vector<st::TokenKind> kinds(count + k - 1);
  for (auto& t : kinds) t = kind(rng);
  // Saturate a stretch with the largest kind as an extreme case.
  std::fill(kinds.begin(), kinds.begin() + 100, st::kMaxTokenKind);

  const auto rolling = st::HashKgrams(kinds, k);
  const auto direct = tst::DirectPolynomialHashes(kinds, k, st::kHashBase, st::kHashModulus);
  std::size_t below = 0, equal = 0;
  for (std::size_t i = 0; i < rolling.size(); ++i) {
    if (rolling[i].hash < st::kHashBound) ++below;
    if (i < direct.size() && rolling[i].hash == direct[i] && rolling[i].start == i) ++equal;
  }

  // Other window lengths on shorter inputs.
  bool others = true;
  for (std::size_t kk : {1u, 2u, 7u, 64u}) {
    const std::span<const st::TokenKind> head(kinds.data(), 5000);
    const auto r = st::HashKgrams(head, kk);
    const auto d = tst::DirectPolynomialHashes(head, kk, st::kHashBase, st::kHashModulus);
    others = others && r.size() == d.size() &&
             std::equal(r.begin(), r.end(), d.begin(), [](const auto& x, auto y) { return x.hash == y; });
  }
  const bool pass = rolling.size() == count && below == count && equal == count && others;
  return {pass, fmt::format("{} k-grams, {} below 2^53, {} equal to direct recomputation{}",
                            rolling.size(), below, equal, others ? "" : ", other k MISMATCH")};
}

Outcome MaskingInvariance() {
  int programs = 0, exact = 0;
  std::vector<std::string> misses;
  for (int i = 0; i < 50; ++i) {
    const auto lang = tst::kAllGenLangs[i % 5];
    const auto program = tst::GenerateProgram(lang, 1000 + static_cast<std::uint64_t>(i), 4, 8);
    const std::string ext = tst::Extension(lang);
    const auto original = tst::Render(program);
    const tst::GenStyle variants[] = {{.rename = true}, {.string_variant = 1}, {.comments = true}};
    const char* names[] = {"rename", "strings", "comments"};
    ++programs;
    bool all = true;
    for (int v = 0; v < 3; ++v) {
      const double s = tst::PairSimilarity({"a" + ext, original}, {"b" + ext, tst::Render(program, variants[v])});
      if (s != 1.0) {
        all = false;
        misses.push_back(fmt::format("{}#{} {} -> {:.4f}", tst::LanguageId(lang), i, names[v], s));
      }
    }
    if (all) ++exact;
  }
  std::string detail = fmt::format("{}/{} programs (python, javascript, java, c, go) exact 1.0 under "
                                   "renaming, string rewriting and comment insertion",
                                   exact, programs);
  for (std::size_t i = 0; i < std::min<std::size_t>(misses.size(), 3); ++i) detail += "; " + misses[i];
  return {exact == programs, detail};
}

Outcome BlockReordering() {
  std::mt19937_64 rng(105);
  double worst = 1.0;
  int ok = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t functions = 3 + static_cast<std::size_t>(i % 4);
    const auto program = tst::GenerateProgram(tst::GenLang::kPython, 2000 + static_cast<std::uint64_t>(i),
                                              functions, 8);
    std::vector<std::size_t> order(functions);
    std::iota(order.begin(), order.end(), 0);
    do std::shuffle(order.begin(), order.end(), rng);
    while (std::is_sorted(order.begin(), order.end()));
    const double s = tst::PairSimilarity({"a.py", tst::Render(program)},
                                         {"b.py", tst::Render(program, {.order = order})});
    worst = std::min(worst, s);
    if (s >= 0.8) ++ok;
  }
  return {ok == 20, fmt::format("{}/20 permuted programs >= 0.8, minimum {:.3f}", ok, worst)};
}

std::vector<st::Hash> RandomHashes(std::mt19937_64& rng, std::size_t n, st::Hash alphabet) {
  std::vector<st::Hash> out(n);
  for (auto& h : out) h = rng() % alphabet;
  return out;
}

std::vector<st::Hash> Edited(std::mt19937_64& rng, std::vector<st::Hash> seq, st::Hash alphabet) {
  const int edits = static_cast<int>(rng() % 12);
  for (int e = 0; e < edits && !seq.empty(); ++e) {
    const std::size_t at = rng() % seq.size();
    switch (rng() % 4) {
      case 0: seq[at] = rng() % alphabet; break;
      case 1: seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(at)); break;
      case 2: seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(at), rng() % alphabet); break;
      default: {
        const std::size_t len = std::min<std::size_t>(1 + rng() % 20, seq.size() - at);
        std::vector<st::Hash> block(seq.begin() + static_cast<std::ptrdiff_t>(at),
                                    seq.begin() + static_cast<std::ptrdiff_t>(at + len));
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(at),
                  seq.begin() + static_cast<std::ptrdiff_t>(at + len));
        const std::size_t to = seq.empty() ? 0 : rng() % (seq.size() + 1);
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(to), block.begin(), block.end());
      }
    }
  }
  if (seq.size() > 200) seq.resize(200);
  return seq;
}

Outcome FragmentOracle() {
  std::mt19937_64 rng(106);
  const st::Hash alphabets[] = {4, 16, 64, 1'000'000};
  int agree = 0;
  std::size_t fragments = 0;
  std::string first_miss;
  for (int t = 0; t < 500; ++t) {
    const st::Hash alphabet = alphabets[t % 4];
    const auto left = RandomHashes(rng, rng() % 201, alphabet);
    const auto right = t % 2 ? Edited(rng, left, alphabet) : RandomHashes(rng, rng() % 201, alphabet);
    const auto got = st::FindSharedFragments(left, right);
    std::vector<tst::Run> runs;
    for (const auto& f : got) runs.push_back({f.left.start, f.right.start, f.length()});
    if (runs == tst::MaximalCommonRuns(left, right)) {
      ++agree;
    } else if (first_miss.empty()) {
      first_miss = fmt::format("; first mismatch at trial {}", t);
    }
    fragments += runs.size();
  }
  return {agree == 500,
          fmt::format("{}/500 pairs equal to the DP oracle ({} fragments compared){}", agree, fragments,
                      first_miss)};
}

Outcome ClusteringOracle() {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int agree = 0, refine = 0;
  for (int g = 0; g < 500; ++g) {
    const std::size_t n = 1 + rng() % 50;
    const double density = unit(rng) * 0.15;
    std::vector<st::PairAnalysis> pairs;
    std::vector<tst::WeightedEdge> edges;
    for (st::FileId i = 0; i < n; ++i)
      for (st::FileId j = i + 1; j < n; ++j)
        if (unit(rng) < density) {
          st::PairAnalysis p;
          p.left = i;
          p.right = j;
          p.similarity = std::round(unit(rng) * 1000) / 1000;
          pairs.push_back(p);
          edges.push_back({i, j, p.similarity});
        }
    std::vector<st::SourceFile> files(n);
    for (std::size_t i = 0; i < n; ++i) files[i].id = i;

    std::vector<double> thresholds(10);
    for (auto& t : thresholds) t = std::round(unit(rng) * 100) / 100;
    std::sort(thresholds.begin(), thresholds.end());

    bool same = true, refined = true;
    std::vector<std::vector<st::FileId>> previous;
    for (std::size_t ti = 0; ti < thresholds.size(); ++ti) {
      std::vector<std::vector<st::FileId>> got;
      for (const auto& c : st::ClusterPairs(pairs, thresholds[ti], files)) got.push_back(c.files);
      same = same && got == tst::ClosureComponents(n, edges, thresholds[ti]);
      if (ti > 0) {
        for (const auto& c : got) {
          const bool inside = std::any_of(previous.begin(), previous.end(), [&](const auto& p) {
            return std::includes(p.begin(), p.end(), c.begin(), c.end());
          });
          refined = refined && inside;
        }
      }
      previous = std::move(got);
    }
    agree += same;
    refine += refined;
  }
  return {agree == 500 && refine == 500,
          fmt::format("{}/500 graphs equal the closure oracle at 10 thresholds; {}/500 refine monotonically",
                      agree, refine)};
}

Outcome ThresholdHeuristic() {
  int good = 0;
  double lo_t = 1.0, hi_t = 0.0;
  for (int run = 0; run < 100; ++run) {
    std::mt19937_64 rng(5000 + static_cast<std::uint64_t>(run));
    std::normal_distribution<double> low(0.40, 0.08), high(0.95, 0.03);
    std::vector<double> lows(100), highs(30);
    for (auto& s : lows) s = std::clamp(low(rng), 0.0, 1.0);
    for (auto& s : highs) s = std::clamp(high(rng), 0.0, 1.0);
    std::vector<double> all = lows;
    all.insert(all.end(), highs.begin(), highs.end());
    const double t = st::InferThreshold(st::SimilarityHistogram::FromSimilarities(all));
    lo_t = std::min(lo_t, t);
    hi_t = std::max(hi_t, t);
    const auto below = std::count_if(lows.begin(), lows.end(), [&](double s) { return s < t; });
    const auto above = std::count_if(highs.begin(), highs.end(), [&](double s) { return s >= t; });
    if (below * 100 >= 95 * static_cast<long>(lows.size()) &&
        above * 100 >= 95 * static_cast<long>(highs.size())) {
      ++good;
    }
  }
  return {good >= 95, fmt::format("{}/100 runs separate both modes (needs 95); thresholds in [{:.3f}, {:.3f}]",
                                  good, lo_t, hi_t)};
}

Outcome DiffCorrectness() {
  std::mt19937_64 rng(109);
  const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "{", "}", ""};
  int ok = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t symbols = 2 + rng() % (pool.size() - 1);
    std::vector<std::string_view> a(rng() % 80), b;
    for (auto& l : a) l = pool[rng() % symbols];
    if (t % 2) {
      b = a;
      for (int e = static_cast<int>(rng() % 10); e > 0 && !b.empty(); --e) {
        const auto at = static_cast<std::ptrdiff_t>(rng() % b.size());
        if (rng() % 2) b.erase(b.begin() + at);
        else b.insert(b.begin() + at, pool[rng() % symbols]);
      }
    } else {
      b.resize(rng() % 80);
      for (auto& l : b) l = pool[rng() % symbols];
    }
    const auto hunks = st::DiffLines(a, b);
    std::vector<std::string_view> left, right;
    bool consistent = true;
    for (const auto& h : hunks) {
      if (h.op != st::DiffOp::kInsert)
        for (auto i = h.left.start; i < h.left.end; ++i) left.push_back(a[i]);
      if (h.op != st::DiffOp::kDelete)
        for (auto i = h.right.start; i < h.right.end; ++i) right.push_back(b[i]);
      if (h.op == st::DiffOp::kEqual) {
        for (std::size_t i = 0; i < h.left.size(); ++i)
          consistent = consistent && a[h.left.start + i] == b[h.right.start + i];
      }
    }
    if (consistent && left == a && right == b &&
        st::EditDistance(hunks) == tst::InsertDeleteDistance(a, b)) {
      ++ok;
    }
  }
  const std::vector<std::string_view> ca = {"A", "B", "C", "A", "B", "B", "A"};
  const std::vector<std::string_view> cb = {"C", "B", "A", "B", "A", "C"};
  const auto classic = st::EditDistance(st::DiffLines(ca, cb));
  return {ok == 500 && classic == 5 && tst::InsertDeleteDistance(ca, cb) == 5,
          fmt::format("{}/500 scripts rebuild both sides at DP distance; classic instance distance {}", ok,
                      classic)};
}

// ---------------------------------------------------------------------------

std::vector<tst::NamedSource> NearDuplicates(std::size_t files, std::size_t lines, std::uint64_t seed) {
  std::size_t functions = 1;
  auto base = tst::GenerateProgram(tst::GenLang::kPython, seed, functions, 8);
  while (tst::CountRenderedLines(base) < lines) {
    base = tst::GenerateProgram(tst::GenLang::kPython, seed, ++functions, 8);
  }
  std::vector<tst::NamedSource> out;
  for (std::size_t i = 0; i < files; ++i) {
    const auto variant = tst::Mutate(base, seed * 1000 + i, 0.1);
    out.push_back({fmt::format("s{:03}/main.py", i), tst::Render(variant, {.rename = i % 2 == 1})});
  }
  return out;
}

double TimeAnalysis(const std::vector<tst::NamedSource>& sources, int repeats) {
  st::CollectionOptions options;
  options.threads = 1;
  const auto collection = tst::CollectionOf(sources, options);
  std::vector<double> times;
  for (int r = 0; r < repeats; ++r) {
    auto copy = collection;
    const auto start = Clock::now();
    const auto report = st::Analyze(std::move(copy), options);
    times.push_back(Seconds(Clock::now() - start));
    if (report.pairs.empty()) return -1;
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return num / den;
}

// Least-squares fit of t = a*n + b*n^2; returns {a, b}.
std::pair<double, double> LinearQuadraticFit(const std::vector<double>& n, const std::vector<double>& t) {
  double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double x1 = n[i], x2 = n[i] * n[i];
    s11 += x1 * x1;
    s12 += x1 * x2;
    s22 += x2 * x2;
    r1 += x1 * t[i];
    r2 += x2 * t[i];
  }
  const double det = s11 * s22 - s12 * s12;
  return {(r1 * s22 - r2 * s12) / det, (s11 * r2 - s12 * r1) / det};
}

Outcome ScalingShape() {
  const std::vector<double> counts = {50, 100, 200};
  std::vector<double> count_times;
  for (double n : counts) {
    count_times.push_back(TimeAnalysis(NearDuplicates(static_cast<std::size_t>(n), 200, 7), 3));
  }
  const std::vector<double> lengths = {100, 200, 400, 800};
  std::vector<double> length_times;
  for (double l : lengths) {
    length_times.push_back(TimeAnalysis(NearDuplicates(50, static_cast<std::size_t>(l), 9), 3));
  }
  const double count_slope = LogLogSlope(counts, count_times);
  const double length_slope = LogLogSlope(lengths, length_times);
  const double largest = count_times.back();
  const auto [per_file, half_per_pair] = LinearQuadraticFit(counts, count_times);
  const bool pass = std::abs(count_slope - 2.0) <= 0.4 && std::abs(length_slope - 1.0) <= 0.3 &&
                    largest > 0 && largest < 60.0;
  return {pass, fmt::format("count slope {:.2f} (2.0 +/- 0.4; {:.3f}/{:.3f}/{:.3f} s; fit {:.0f} us per file + "
                            "{:.1f} us per pair), length slope {:.2f} (1.0 +/- 0.3), 200 files x 200 lines "
                            "{:.2f} s single-threaded",
                            count_slope, count_times[0], count_times[1], count_times[2], per_file * 1e6,
                            half_per_pair * 2e6, length_slope, largest)};
}

Outcome EndToEndDeterminism() {
  tst::TempDir dir;
  auto sources = NearDuplicates(12, 60, 11);
  sources.push_back({"lone/extra.py", "import os\nprint(os.listdir('.'))\n"});
  std::string info = "filename,full_name,label,created_at\n";
  for (std::size_t i = 0; i < sources.size(); ++i) {
    info += fmt::format("{},Student {},{},2024-02-{:02}T08:00:00Z\n", sources[i].first, i,
                        i % 2 ? "evening" : "morning", 1 + i % 28);
  }
  for (const auto& [name, text] : sources) tst::WriteText(dir / name, text);
  tst::WriteText(dir / "info.csv", info);

  st::CollectionOptions serial, parallel;
  serial.threads = 1;
  parallel.threads = 8;
  const auto a = st::AnalyzePath(dir.path(), serial);
  const auto b = st::AnalyzePath(dir.path(), parallel);
  const auto ja = tst::JsonWithoutCreatedAt(st::ToJson(a, {.include_fragments = true}));
  const auto jb = tst::JsonWithoutCreatedAt(st::ToJson(b, {.include_fragments = true}));
  const bool bytes_equal = ja == jb && !a.pairs.empty();

  st::WriteCsv(a, dir / "csv");
  const auto parsed = st::ParsePairsCsv(tst::ReadText(dir / "csv/pairs.csv"));
  const auto file_rows = st::csv::Parse(tst::ReadText(dir / "csv/files.csv"));
  std::map<st::FileId, std::size_t> prints;
  for (std::size_t r = 1; r < file_rows.size(); ++r) {
    prints[std::stoul(file_rows[r][0])] = std::stoul(file_rows[r][3]);
  }
  std::size_t exact = 0;
  for (std::size_t i = 0; i < parsed.size() && i < a.pairs.size(); ++i) {
    const auto& p = parsed[i];
    const auto& q = a.pairs[i];
    const double rebuilt = static_cast<double>(p.total_overlap) /
                           static_cast<double>(prints[p.left] + prints[p.right]);
    if (p.left == q.left && p.right == q.right && p.total_overlap == q.total_overlap &&
        p.longest_fragment == q.longest_fragment && rebuilt == q.similarity &&
        st::FormatSimilarity(p.similarity) == st::FormatSimilarity(q.similarity)) {
      ++exact;
    }
  }
  const auto cluster_rows = st::csv::Parse(tst::ReadText(dir / "csv/clusters.csv"));
  std::map<std::size_t, std::vector<st::FileId>> clusters;
  for (std::size_t r = 1; r < cluster_rows.size(); ++r) {
    clusters[std::stoul(cluster_rows[r][0])].push_back(std::stoul(cluster_rows[r][1]));
  }
  bool clusters_equal = clusters.size() == a.clusters.size();
  for (const auto& c : a.clusters) clusters_equal = clusters_equal && clusters[c.id] == c.files;

  const auto fixture = std::filesystem::path(SIMTRACE_FIXTURE_DIR) / "collection.zip";
  const auto fa = st::AnalyzePath(fixture, serial);
  const auto fb = st::AnalyzePath(fixture, parallel);
  const bool fixture_equal = tst::JsonWithoutCreatedAt(st::ToJson(fa, {.include_fragments = true})) ==
                             tst::JsonWithoutCreatedAt(st::ToJson(fb, {.include_fragments = true}));

  const bool pass = bytes_equal && fixture_equal && exact == a.pairs.size() &&
                    parsed.size() == a.pairs.size() && clusters_equal;
  return {pass, fmt::format("report.json {} across runs ({} bytes), collection.zip {}; {}/{} pairs rebuilt "
                            "exactly from CSV; clusters {}",
                            bytes_equal ? "byte-identical" : "DIFFERS", ja.size(),
                            fixture_equal ? "byte-identical" : "DIFFERS", exact, a.pairs.size(),
                            clusters_equal ? "match" : "DIFFER")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"winnowing-guarantee", WinnowingGuarantee},
      {"sampling-density", SamplingDensity},
      {"hash-bound", HashBound},
      {"masking-invariance", MaskingInvariance},
      {"block-reordering", BlockReordering},
      {"fragment-oracle", FragmentOracle},
      {"clustering-oracle", ClusteringOracle},
      {"threshold-heuristic", ThresholdHeuristic},
      {"diff-correctness", DiffCorrectness},
      {"scaling-shape", ScalingShape},
      {"end-to-end-determinism", EndToEndDeterminism},
  };
  const std::string filter = argc > 1 ? argv[1] : "";
  int failed = 0, ran = 0;
  for (const auto& [name, check] : criteria) {
    if (!filter.empty() && std::string(name).find(filter) == std::string::npos) continue;
    ++ran;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    fmt::print("[{}] {:<24} {} ({:.2f} s)\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail,
               Seconds(Clock::now() - start));
    std::fflush(stdout);
    if (!outcome.pass) ++failed;
  }
  fmt::print("{} of {} criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
