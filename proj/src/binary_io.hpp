// Little-endian byte buffers with a trailing CRC-64/XZ, shared by the tensor cache
// and the conversion-table dump.
#ifndef FPL_SRC_BINARY_IO_HPP
#define FPL_SRC_BINARY_IO_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/crc.hpp>

#include "fpl/errors.hpp"

namespace fpl::detail {

using Crc64 = boost::crc_optimal<64, 0x42F0E1EBA9EA3693ULL, ~0ULL, ~0ULL, true, true>;

inline std::uint64_t crc64(std::string_view bytes) {
    Crc64 crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

class ByteWriter {
public:
    void magic(std::string_view tag) { buf_.append(tag); }
    void u32(std::uint32_t v) { put(v); }
    void u64(std::uint64_t v) { put(v); }
    void f64(double v) { put(std::bit_cast<std::uint64_t>(v)); }

    /// Appends the checksum of everything written so far and flushes to `out`.
    void finish(std::ostream& out) {
        put(crc64(buf_));
        out.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        if (!out) throw std::ios_base::failure("write failed");
    }

private:
    template <typename U>
    void put(U v) {
        for (std::size_t i = 0; i < sizeof(U); ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
    }
    std::string buf_;
};

class ByteReader {
public:
    /// Reads the whole stream and verifies the trailing checksum.
    explicit ByteReader(std::istream& in) : buf_(std::istreambuf_iterator<char>(in), {}) {
        if (buf_.size() < 8) throw FormatError("file too short to hold a checksum");
        const std::string_view payload(buf_.data(), buf_.size() - 8);
        end_ = buf_.size();
        pos_ = payload.size();
        const auto stored = get<std::uint64_t>();
        if (stored != crc64(payload)) throw FormatError("checksum mismatch (truncated or corrupted file)");
        end_ = payload.size();
        pos_ = 0;
    }

    void expect_magic(std::string_view tag) {
        need(tag.size());
        if (std::string_view(buf_.data() + pos_, tag.size()) != tag)
            throw FormatError("bad magic: expected '" + std::string(tag) + "'");
        pos_ += tag.size();
    }
    std::uint32_t u32() { return get<std::uint32_t>(); }
    std::uint64_t u64() { return get<std::uint64_t>(); }
    double f64() { return std::bit_cast<double>(get<std::uint64_t>()); }
    bool at_end() const { return pos_ == end_; }
    std::size_t remaining() const { return end_ - pos_; }

private:
    void need(std::size_t n) const {
        if (pos_ + n > end_) throw FormatError("unexpected end of data");
    }
    template <typename U>
    U get() {
        need(sizeof(U));
        U v = 0;
        for (std::size_t i = 0; i < sizeof(U); ++i)
            v |= static_cast<U>(static_cast<unsigned char>(buf_[pos_ + i])) << (8 * i);
        pos_ += sizeof(U);
        return v;
    }
    std::string buf_;
    std::size_t pos_ = 0;
    std::size_t end_ = 0;
};

}  // namespace fpl::detail

#endif  // FPL_SRC_BINARY_IO_HPP
