#include "simtrace/zip_archive.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <iterator>

#include "simtrace/error.hpp"

namespace simtrace {
namespace {

constexpr std::uint32_t kLocalHeaderSig = 0x04034b50;
constexpr std::uint32_t kCentralHeaderSig = 0x02014b50;
constexpr std::uint32_t kEndOfCentralDirSig = 0x06054b50;
constexpr std::size_t kEndOfCentralDirSize = 22;
constexpr std::size_t kCentralHeaderSize = 46;
constexpr std::size_t kLocalHeaderSize = 30;

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kArchiveFormat, "malformed ZIP archive: " + what);
}

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::byte> data) : data_(data) {}

  std::size_t size() const { return data_.size(); }

  void Require(std::size_t offset, std::size_t length) const {
    if (offset > data_.size() || length > data_.size() - offset) {
      Malformed("truncated record");
    }
  }

  std::uint16_t U16(std::size_t offset) const {
    Require(offset, 2);
    return static_cast<std::uint16_t>(std::to_integer<unsigned>(data_[offset]) |
                                      std::to_integer<unsigned>(data_[offset + 1]) << 8);
  }

  std::uint32_t U32(std::size_t offset) const {
    return static_cast<std::uint32_t>(U16(offset)) |
           static_cast<std::uint32_t>(U16(offset + 2)) << 16;
  }

  std::span<const std::byte> Slice(std::size_t offset, std::size_t length) const {
    Require(offset, length);
    return data_.subspan(offset, length);
  }

 private:
  std::span<const std::byte> data_;
};

std::size_t FindEndOfCentralDirectory(const ByteReader& in) {
  if (in.size() < kEndOfCentralDirSize) Malformed("too short");
  std::size_t lowest = in.size() > 0xFFFF + kEndOfCentralDirSize
                           ? in.size() - 0xFFFF - kEndOfCentralDirSize
                           : 0;
  for (std::size_t pos = in.size() - kEndOfCentralDirSize + 1; pos-- > lowest;) {
    if (in.U32(pos) == kEndOfCentralDirSig &&
        pos + kEndOfCentralDirSize + in.U16(pos + 20) == in.size()) {
      return pos;
    }
  }
  Malformed("end of central directory not found");
}

std::string Inflate(std::span<const std::byte> compressed, std::uint32_t expected_size,
                    const std::string& name) {
  std::string out(expected_size, '\0');
  z_stream stream{};
  if (inflateInit2(&stream, -MAX_WBITS) != Z_OK) {
    throw Error(ErrorCode::kArchiveFormat, "zlib initialisation failed");
  }
  stream.next_in = reinterpret_cast<Bytef*>(const_cast<std::byte*>(compressed.data()));
  stream.avail_in = static_cast<uInt>(compressed.size());
  stream.next_out = reinterpret_cast<Bytef*>(out.data());
  stream.avail_out = static_cast<uInt>(out.size());

  int rc = inflate(&stream, Z_FINISH);
  bool overflow = rc == Z_BUF_ERROR && stream.avail_out == 0;
  if (overflow) {
    // Output space exhausted: the stream may only be finished if no byte
    // remains to be produced.
    unsigned char probe = 0;
    stream.next_out = &probe;
    stream.avail_out = 1;
    rc = inflate(&stream, Z_FINISH);
    overflow = stream.avail_out == 0;
  }
  auto produced = stream.total_out;
  inflateEnd(&stream);
  if (overflow) {
    throw Error(ErrorCode::kArchiveLimit,
                "ZIP entry '" + name + "' inflates past its declared size");
  }
  if (rc != Z_STREAM_END || produced != expected_size) {
    Malformed("corrupt deflate data in '" + name + "'");
  }
  return out;
}

}  // namespace

std::vector<ZipEntry> ReadZip(std::span<const std::byte> archive, const ZipLimits& limits) {
  ByteReader in(archive);
  const std::size_t eocd = FindEndOfCentralDirectory(in);
  const std::uint16_t entry_count = in.U16(eocd + 10);
  const std::uint32_t cd_size = in.U32(eocd + 12);
  const std::uint32_t cd_offset = in.U32(eocd + 16);
  if (entry_count == 0xFFFF || cd_size == 0xFFFFFFFF || cd_offset == 0xFFFFFFFF) {
    throw Error(ErrorCode::kArchiveFormat, "ZIP64 archives are not supported");
  }
  in.Require(cd_offset, cd_size);

  std::vector<ZipEntry> entries;
  std::uint64_t total = 0;
  std::size_t pos = cd_offset;
  for (std::uint16_t i = 0; i < entry_count; ++i) {
    if (in.U32(pos) != kCentralHeaderSig) Malformed("bad central directory header");
    const std::uint16_t flags = in.U16(pos + 8);
    const std::uint16_t method = in.U16(pos + 10);
    const std::uint32_t crc = in.U32(pos + 16);
    const std::uint32_t compressed_size = in.U32(pos + 20);
    const std::uint32_t size = in.U32(pos + 24);
    const std::uint16_t name_len = in.U16(pos + 28);
    const std::uint16_t extra_len = in.U16(pos + 30);
    const std::uint16_t comment_len = in.U16(pos + 32);
    const std::uint32_t local_offset = in.U32(pos + 42);
    auto name_bytes = in.Slice(pos + kCentralHeaderSize, name_len);
    std::string name(reinterpret_cast<const char*>(name_bytes.data()), name_bytes.size());
    pos += kCentralHeaderSize + name_len + extra_len + comment_len;

    if (name.empty() || name.back() == '/') continue;
    if (flags & 0x1) {
      throw Error(ErrorCode::kArchiveFormat, "encrypted ZIP entry '" + name + "'");
    }
    if (size > limits.max_entry_bytes) {
      throw Error(ErrorCode::kArchiveLimit, "ZIP entry '" + name + "' exceeds " +
                                                std::to_string(limits.max_entry_bytes) +
                                                " bytes");
    }
    total += size;
    if (total > limits.max_total_bytes) {
      throw Error(ErrorCode::kArchiveLimit, "ZIP archive exceeds " +
                                                std::to_string(limits.max_total_bytes) +
                                                " uncompressed bytes");
    }

    if (in.U32(local_offset) != kLocalHeaderSig) Malformed("bad local header for '" + name + "'");
    const std::size_t data_offset = local_offset + kLocalHeaderSize +
                                    in.U16(local_offset + 26) + in.U16(local_offset + 28);
    auto payload = in.Slice(data_offset, compressed_size);

    std::string data;
    if (method == 0) {
      if (compressed_size != size) Malformed("stored entry size mismatch for '" + name + "'");
      data.assign(reinterpret_cast<const char*>(payload.data()), payload.size());
    } else if (method == 8) {
      data = Inflate(payload, size, name);
    } else {
      throw Error(ErrorCode::kArchiveFormat, "unsupported compression method " +
                                                 std::to_string(method) + " for '" + name +
                                                 "'");
    }
    auto actual_crc = crc32(0L, reinterpret_cast<const Bytef*>(data.data()),
                            static_cast<uInt>(data.size()));
    if (actual_crc != crc) Malformed("CRC mismatch for '" + name + "'");
    entries.push_back({std::move(name), std::move(data)});
  }
  return entries;
}

std::vector<ZipEntry> ReadZipFile(const std::filesystem::path& path, const ZipLimits& limits) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  if (file.bad()) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  return ReadZip(std::as_bytes(std::span(bytes.data(), bytes.size())), limits);
}

bool LooksLikeZip(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  char magic[4] = {};
  if (!file.read(magic, 4)) return false;
  return std::memcmp(magic, "PK\x03\x04", 4) == 0 || std::memcmp(magic, "PK\x05\x06", 4) == 0;
}

}  // namespace simtrace
