#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simtrace/source_file.hpp"
#include "simtrace/token.hpp"

namespace simtrace {

using Hash = std::uint64_t;

// Polynomial rolling hash over token kinds:
//   h(t_1..t_k) = sum t_i * base^(k-i)  (mod modulus)
// The modulus is the largest prime below 2^53.
inline constexpr Hash kHashModulus = 9007199254740881ull;
inline constexpr Hash kHashBase = 2097169ull;
inline constexpr Hash kHashBound = 1ull << 53;

struct KgramHash {
  Hash hash = 0;
  std::size_t start = 0;

  friend bool operator==(const KgramHash&, const KgramHash&) = default;
};

__extension__ using UInt128 = unsigned __int128;

// (a * b) mod kHashModulus through 128-bit intermediates.
constexpr Hash MulMod(Hash a, Hash b) noexcept {
  return static_cast<Hash>((static_cast<UInt128>(a) * b) % kHashModulus);
}

// n - k + 1 hashes for n kinds (none when n < k), O(n).
std::vector<KgramHash> HashKgrams(std::span<const TokenKind> kinds,
                                  std::size_t k);

struct Fingerprint {
  Hash hash = 0;
  std::size_t token_start = 0;
  std::size_t token_end = 0;  // inclusive: token_start + k - 1
  Region region;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintSequence {
  FileId file_id = 0;
  std::vector<Fingerprint> prints;

  std::vector<Hash> Hashes() const;
};

// Robust winnowing: the minimum of every window of w consecutive hashes,
// rightmost on ties, each position recorded once. Fewer than w hashes yields
// the overall minimum.
std::vector<KgramHash> Winnow(std::span<const KgramHash> hashes,
                              std::size_t w);

// hash_kgrams + winnow over a tokenized file, attaching token spans and
// source regions to the selected k-grams.
FingerprintSequence FingerprintFile(const TokenizedFile& file, std::size_t k,
                                    std::size_t w);

struct Posting {
  FileId file_id = 0;
  std::size_t position = 0;  // index into the file's prints

  friend bool operator==(const Posting&, const Posting&) = default;
  friend auto operator<=>(const Posting&, const Posting&) = default;
};

// Inverted index hash -> postings, postings sorted by (file, position).
class FingerprintIndex {
 public:
  FingerprintIndex() = default;
  explicit FingerprintIndex(std::span<const FingerprintSequence> sequences);

  const std::vector<Posting>* Find(Hash hash) const;
  std::size_t size() const { return by_hash_.size(); }
  bool empty() const { return by_hash_.empty(); }
  const std::unordered_map<Hash, std::vector<Posting>>& entries() const {
    return by_hash_;
  }

  // Unordered file pairs (left < right) sharing at least one hash, sorted.
  std::vector<std::pair<FileId, FileId>> CandidatePairs() const;

 private:
  std::unordered_map<Hash, std::vector<Posting>> by_hash_;
};

}  // namespace simtrace
