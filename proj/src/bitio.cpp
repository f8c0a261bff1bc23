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
#include "dsc/bitio.hpp"

#include <algorithm>
#include <ostream>

#include "dsc/exact.hpp"

namespace dsc {

BitString BitString::from_string(std::string_view bits) {
    BitString out;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidArgument("bit string may only contain 0 and 1");
        }
        out.push_back(c == '1');
    }
    return out;
}

BitString BitString::from_uint(std::uint64_t value, unsigned width) {
    BitString out;
    out.append_uint(value, width);
    return out;
}

void BitString::push_back(bool bit) {
    if ((size_ & 63) == 0) {
        words_.push_back(0);
    }
    if (bit) {
        words_.back() |= std::uint64_t{1} << (63 - (size_ & 63));
    }
    ++size_;
}

void BitString::append_uint(std::uint64_t value, unsigned width) {
    if (width > 64) {
        throw InvalidArgument("append_uint width exceeds 64");
    }
    if (width == 0) {
        return;
    }
    if (width < 64) {
        value &= (std::uint64_t{1} << width) - 1;
    }
    const unsigned used = size_ & 63;
    if (used == 0) {
        words_.push_back(value << (64 - width));
    } else {
        const unsigned room = 64 - used;
        if (width <= room) {
            words_.back() |= value << (room - width);
        } else {
            words_.back() |= value >> (width - room);
            words_.push_back(value << (64 - (width - room)));
        }
    }
    size_ += width;
}

void BitString::append(const BitString& other) {
    std::size_t done = 0;
    while (done < other.size_) {
        const auto chunk = static_cast<unsigned>(std::min<std::size_t>(64, other.size_ - done));
        append_uint(other.to_uint(done, chunk), chunk);
        done += chunk;
    }
}

std::uint64_t BitString::to_uint(std::size_t pos, unsigned len) const {
    if (len > 64 || pos + len > size_) {
        throw InvalidArgument("to_uint range out of bounds");
    }
    if (len == 0) {
        return 0;
    }
    const std::size_t w = pos >> 6;
    const unsigned off = pos & 63;
    std::uint64_t hi = words_[w] << off;
    if (off != 0 && off + len > 64) {
        hi |= words_[w + 1] >> (64 - off);
    }
    return hi >> (64 - len);
}

bool BitString::is_prefix_of(const BitString& other) const {
    if (size_ > other.size_) {
        return false;
    }
    std::size_t done = 0;
    while (done < size_) {
        const auto chunk = static_cast<unsigned>(std::min<std::size_t>(64, size_ - done));
        if (to_uint(done, chunk) != other.to_uint(done, chunk)) {
            return false;
        }
        done += chunk;
    }
    return true;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        s.push_back((*this)[i] ? '1' : '0');
    }
    return s;
}

bool operator==(const BitString& a, const BitString& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
}

bool operator<(const BitString& a, const BitString& b) {
    const std::size_t common = std::min(a.size_, b.size_);
    std::size_t done = 0;
    while (done < common) {
        const auto chunk = static_cast<unsigned>(std::min<std::size_t>(64, common - done));
        const auto x = a.to_uint(done, chunk);
        const auto y = b.to_uint(done, chunk);
        if (x != y) {
            return x < y;
        }
        done += chunk;
    }
    return a.size_ < b.size_;
}

BitWriter::~BitWriter() {
    // Flushing from a destructor must not throw; callers close() explicitly.
    try {
        if (!closed_ && out_ != nullptr) {
            close();
        }
    } catch (...) {
    }
}

void BitWriter::write_bit(bool bit) {
    pending_ = static_cast<std::uint8_t>((pending_ << 1) | (bit ? 1U : 0U));
    ++bits_written_;
    if (++pending_bits_ == 8) {
        buffer_.push_back(pending_);
        pending_ = 0;
        pending_bits_ = 0;
        if (out_ != nullptr && buffer_.size() >= (1U << 16)) {
            flush_buffer();
        }
    }
}

void BitWriter::write_uint(std::uint64_t value, unsigned width) {
    for (unsigned b = width; b-- > 0;) {
        write_bit((value >> b) & 1U);
    }
}

void BitWriter::write(const BitString& bits) {
    std::size_t done = 0;
    while (done < bits.size()) {
        const auto chunk = static_cast<unsigned>(std::min<std::size_t>(64, bits.size() - done));
        write_uint(bits.to_uint(done, chunk), chunk);
        done += chunk;
    }
}

void BitWriter::close() {
    if (closed_) {
        return;
    }
    if (pending_bits_ > 0) {
        buffer_.push_back(static_cast<std::uint8_t>(pending_ << (8 - pending_bits_)));
        pending_ = 0;
        pending_bits_ = 0;
    }
    closed_ = true;
    if (out_ != nullptr) {
        flush_buffer();
        out_->flush();
    }
}

void BitWriter::flush_buffer() {
    out_->write(reinterpret_cast<const char*>(buffer_.data()),
                static_cast<std::streamsize>(buffer_.size()));
    if (!*out_) {
        throw Error("write to output stream failed");
    }
    buffer_.clear();
}

std::vector<std::uint8_t> BitWriter::take_bytes() {
    close();
    return std::move(buffer_);
}

bool BitReader::fetch() {
    if (stream_ != nullptr) {
        const auto c = stream_->sbumpc();
        if (c == std::char_traits<char>::eof()) {
            return false;
        }
        current_ = static_cast<unsigned>(c) & 0xFFU;
    } else {
        if (pos_ >= data_.size()) {
            return false;
        }
        current_ = data_[pos_++];
    }
    avail_ = 8;
    return true;
}

bool BitReader::read_bit() {
    if (avail_ == 0 && !fetch()) {
        throw TruncatedStream();
    }
    --avail_;
    ++consumed_;
    return (current_ >> avail_) & 1U;
}

BitString BitReader::read(std::size_t count) {
    BitString out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(read_bit());
    }
    return out;
}

std::uint64_t BitReader::read_uint(unsigned width) {
    if (width > 64) {
        throw InvalidArgument("read_uint width exceeds 64");
    }
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) {
        v = (v << 1) | (read_bit() ? 1U : 0U);
    }
    return v;
}

bool BitReader::at_byte_end() {
    if (stream_ != nullptr) {
        return stream_->sgetc() == std::char_traits<char>::eof();
    }
    return pos_ >= data_.size();
}

unsigned index_width(std::uint64_t n) {
    if (n < 2) {
        throw InvalidArgument("alphabet size must be at least 2");
    }
    return static_cast<unsigned>(ceil_log2(n));
}

BitString index_bits(std::uint64_t j, std::uint64_t n) {
    const unsigned width = index_width(n);
    if (j >= n) {
        throw InvalidArgument("symbol index out of range");
    }
    return BitString::from_uint(j, width);
}

BitString fraction_prefix(std::uint64_t p, std::uint64_t q, std::size_t k) {
    if (p >= q) {
        throw InvalidArgument("fraction_prefix needs p < q");
    }
    BitString out;
    u128 r = p;
    for (std::size_t i = 0; i < k; ++i) {
        r <<= 1;
        if (r >= q) {
            out.push_back(true);
            r -= q;
        } else {
            out.push_back(false);
        }
    }
    return out;
}

}  // namespace dsc
