/*
Copyright 2026 The dynshannon Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <streambuf>
#include <string>
#include <string_view>
#include <vector>

#include "dsc/errors.hpp"

namespace dsc {

/// Growable sequence of bits. Codewords, index fields and whole encodings
/// are all BitStrings. Bit 0 is the first bit written / read.
class BitString {
public:
    BitString() = default;

    /// Parses a string of '0' and '1' characters.
    static BitString from_string(std::string_view bits);
    /// The low `width` bits of `value`, most significant first.
    static BitString from_uint(std::uint64_t value, unsigned width);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool operator[](std::size_t i) const { return (words_[i >> 6] >> (63 - (i & 63))) & 1U; }

    void push_back(bool bit);
    void append(const BitString& other);
    void append_uint(std::uint64_t value, unsigned width);
    void clear() {
        words_.clear();
        size_ = 0;
    }

    /// Bits [pos, pos + len) packed MSB-first into an integer; len <= 64.
    std::uint64_t to_uint(std::size_t pos, unsigned len) const;

    /// True if this is a (not necessarily proper) prefix of `other`.
    bool is_prefix_of(const BitString& other) const;

    std::string to_string() const;

    friend bool operator==(const BitString& a, const BitString& b);
    /// Lexicographic order on bit sequences; a proper prefix sorts first.
    friend bool operator<(const BitString& a, const BitString& b);

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Appends bits MSB-first into bytes. The final partial byte is zero-padded
/// by close(). Writes either into an owned buffer or through to a stream.
class BitWriter {
public:
    BitWriter() = default;
    explicit BitWriter(std::ostream& out) : out_(&out) {}
    BitWriter(const BitWriter&) = delete;
    BitWriter& operator=(const BitWriter&) = delete;
    ~BitWriter();

    void write_bit(bool bit);
    void write(const BitString& bits);
    void write_uint(std::uint64_t value, unsigned width);

    /// Pads the last byte with zeros and flushes to the stream, if any.
    void close();

    std::uint64_t bits_written() const { return bits_written_; }
    /// Bytes produced so far (only meaningful without an output stream).
    const std::vector<std::uint8_t>& bytes() const { return buffer_; }
    std::vector<std::uint8_t> take_bytes();

private:
    void flush_buffer();

    std::ostream* out_ = nullptr;
    std::vector<std::uint8_t> buffer_;
    std::uint8_t pending_ = 0;
    unsigned pending_bits_ = 0;
    std::uint64_t bits_written_ = 0;
    bool closed_ = false;
};

/// Reads bits MSB-first from a byte span or a stream buffer.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : data_(bytes) {}
    explicit BitReader(std::streambuf& in) : stream_(&in) {}

    /// Throws TruncatedStream when no bit is left.
    bool read_bit();
    BitString read(std::size_t count);
    std::uint64_t read_uint(unsigned width);

    std::uint64_t bits_consumed() const { return consumed_; }
    /// Bits left in the current byte (the ones a writer would have padded).
    unsigned bits_left_in_byte() const { return avail_; }
    std::uint8_t remaining_in_byte_value() const {
        return static_cast<std::uint8_t>(current_ & ((1U << avail_) - 1U));
    }
    /// True if no further byte can be fetched.
    bool at_byte_end();

private:
    bool fetch();

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
    std::streambuf* stream_ = nullptr;
    unsigned current_ = 0;
    unsigned avail_ = 0;
    std::uint64_t consumed_ = 0;
};

/// Exactly ceil(log2 n) bits: the binary representation of index j < n.
BitString index_bits(std::uint64_t j, std::uint64_t n);
unsigned index_width(std::uint64_t n);

/// First k bits of the binary expansion of p/q, 0 <= p < q, by exact doubling.
BitString fraction_prefix(std::uint64_t p, std::uint64_t q, std::size_t k);

}  // namespace dsc
