#include "simtrace/fingerprint.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace simtrace {

std::vector<KgramHash> HashKgrams(std::span<const TokenKind> kinds, std::size_t k) {
  assert(k >= 1);
  std::vector<KgramHash> out;
  if (k == 0 || kinds.size() < k) return out;
  out.reserve(kinds.size() - k + 1);

  // base^(k-1): weight of the token leaving the window.
  Hash leading_weight = 1;
  for (std::size_t i = 1; i < k; ++i) leading_weight = MulMod(leading_weight, kHashBase);

  Hash h = 0;
  for (std::size_t i = 0; i < k; ++i) h = (MulMod(h, kHashBase) + kinds[i]) % kHashModulus;
  out.push_back({h, 0});

  for (std::size_t i = k; i < kinds.size(); ++i) {
    const Hash outgoing = MulMod(kinds[i - k], leading_weight);
    h = (h + kHashModulus - outgoing) % kHashModulus;
    h = (MulMod(h, kHashBase) + kinds[i]) % kHashModulus;
    out.push_back({h, i - k + 1});
  }
  return out;
}

std::vector<KgramHash> Winnow(std::span<const KgramHash> hashes, std::size_t w) {
  assert(w >= 1);
  std::vector<KgramHash> selected;
  if (hashes.empty()) return selected;
  w = std::max<std::size_t>(w, 1);
  const std::size_t window = std::min(w, hashes.size());

  // Indices with strictly increasing hash from front to back; an incoming
  // hash evicts every entry that is >= it, so the front is always the
  // rightmost minimum of the window.
  std::deque<std::size_t> candidates;
  std::size_t last = hashes.size();  // none yet
  for (std::size_t i = 0; i < hashes.size(); ++i) {
    while (!candidates.empty() && hashes[candidates.back()].hash >= hashes[i].hash) {
      candidates.pop_back();
    }
    candidates.push_back(i);
    if (i + 1 < window) continue;
    while (candidates.front() + window <= i) candidates.pop_front();
    if (candidates.front() != last) {
      last = candidates.front();
      selected.push_back(hashes[last]);
    }
  }
  return selected;
}

std::vector<Hash> FingerprintSequence::Hashes() const {
  std::vector<Hash> out;
  out.reserve(prints.size());
  for (const auto& p : prints) out.push_back(p.hash);
  return out;
}

FingerprintSequence FingerprintFile(const TokenizedFile& file, std::size_t k, std::size_t w) {
  FingerprintSequence seq;
  seq.file_id = file.file_id;
  const auto kinds = file.Kinds();
  const auto hashes = HashKgrams(kinds, k);
  for (const auto& [hash, start] : Winnow(hashes, w)) {
    Fingerprint fp;
    fp.hash = hash;
    fp.token_start = start;
    fp.token_end = start + k - 1;
    fp.region = file.tokens[start].region;
    for (std::size_t t = start + 1; t <= fp.token_end; ++t) {
      fp.region = Span(fp.region, file.tokens[t].region);
    }
    seq.prints.push_back(fp);
  }
  return seq;
}

FingerprintIndex::FingerprintIndex(std::span<const FingerprintSequence> sequences) {
  for (const auto& seq : sequences) {
    for (std::size_t pos = 0; pos < seq.prints.size(); ++pos) {
      by_hash_[seq.prints[pos].hash].push_back({seq.file_id, pos});
    }
  }
  for (auto& [hash, postings] : by_hash_) std::sort(postings.begin(), postings.end());
}

const std::vector<Posting>* FingerprintIndex::Find(Hash hash) const {
  auto it = by_hash_.find(hash);
  return it == by_hash_.end() ? nullptr : &it->second;
}

std::vector<std::pair<FileId, FileId>> FingerprintIndex::CandidatePairs() const {
  FileId max_id = 0;
  for (const auto& [hash, postings] : by_hash_) max_id = std::max(max_id, postings.back().file_id);
  const std::size_t n = max_id + 1;

  std::vector<bool> seen(n * n, false);
  std::vector<std::pair<FileId, FileId>> pairs;
  std::vector<FileId> files;
  for (const auto& [hash, postings] : by_hash_) {
    files.clear();
    for (const auto& p : postings) {
      if (files.empty() || files.back() != p.file_id) files.push_back(p.file_id);
    }
    for (std::size_t a = 0; a < files.size(); ++a) {
      for (std::size_t b = a + 1; b < files.size(); ++b) {
        auto bit = files[a] * n + files[b];
        if (!seen[bit]) {
          seen[bit] = true;
          pairs.emplace_back(files[a], files[b]);
        }
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace simtrace
