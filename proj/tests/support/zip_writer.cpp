#include "zip_writer.hpp"

#include <zlib.h>

#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace simtrace::testing {
namespace {

void Put16(std::vector<std::byte>& out, std::uint16_t v) {
  out.push_back(std::byte(v & 0xff));
  out.push_back(std::byte(v >> 8));
}

void Put32(std::vector<std::byte>& out, std::uint32_t v) {
  Put16(out, static_cast<std::uint16_t>(v & 0xffff));
  Put16(out, static_cast<std::uint16_t>(v >> 16));
}

void PutBytes(std::vector<std::byte>& out, const std::string& s) {
  for (char c : s) out.push_back(std::byte(static_cast<unsigned char>(c)));
}

std::string RawDeflate(const std::string& data) {
  z_stream zs{};
  if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
    throw std::runtime_error("deflateInit2 failed");
  }
  std::string out(deflateBound(&zs, data.size()), '\0');
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw std::runtime_error("deflate failed");
  out.resize(zs.total_out);
  return out;
}

}  // namespace

std::vector<std::byte> WriteZip(const std::vector<ZipInput>& entries) {
  std::vector<std::byte> out;
  std::vector<std::byte> central;
  for (const auto& e : entries) {
    const auto crc = static_cast<std::uint32_t>(
        crc32(0, reinterpret_cast<const Bytef*>(e.data.data()), static_cast<uInt>(e.data.size())));
    const std::string payload = e.deflate ? RawDeflate(e.data) : e.data;
    const std::uint16_t method = e.deflate ? 8 : 0;
    const auto offset = static_cast<std::uint32_t>(out.size());

    Put32(out, 0x04034b50);
    Put16(out, 20);
    Put16(out, 0);
    Put16(out, method);
    Put16(out, 0);
    Put16(out, 0x21);
    Put32(out, crc);
    Put32(out, static_cast<std::uint32_t>(payload.size()));
    Put32(out, static_cast<std::uint32_t>(e.data.size()));
    Put16(out, static_cast<std::uint16_t>(e.name.size()));
    Put16(out, 0);
    PutBytes(out, e.name);
    PutBytes(out, payload);

    Put32(central, 0x02014b50);
    Put16(central, 20);
    Put16(central, 20);
    Put16(central, 0);
    Put16(central, method);
    Put16(central, 0);
    Put16(central, 0x21);
    Put32(central, crc);
    Put32(central, static_cast<std::uint32_t>(payload.size()));
    Put32(central, static_cast<std::uint32_t>(e.data.size()));
    Put16(central, static_cast<std::uint16_t>(e.name.size()));
    Put16(central, 0);
    Put16(central, 0);
    Put16(central, 0);
    Put16(central, 0);
    Put32(central, 0);
    Put32(central, offset);
    PutBytes(central, e.name);
  }
  const auto central_offset = static_cast<std::uint32_t>(out.size());
  out.insert(out.end(), central.begin(), central.end());
  Put32(out, 0x06054b50);
  Put16(out, 0);
  Put16(out, 0);
  Put16(out, static_cast<std::uint16_t>(entries.size()));
  Put16(out, static_cast<std::uint16_t>(entries.size()));
  Put32(out, static_cast<std::uint32_t>(central.size()));
  Put32(out, central_offset);
  Put16(out, 0);
  return out;
}

void WriteZipFile(const std::filesystem::path& path, const std::vector<ZipInput>& entries) {
  const auto bytes = WriteZip(entries);
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace simtrace::testing
