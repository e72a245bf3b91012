#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "turyn/errors.hpp"
#include "turyn/sequence.hpp"

namespace turyn {

namespace detail {

inline void check_shift(std::size_t n, std::size_t k) {
    if (n == 0 || k > n - 1) {
        throw DomainError("shift " + std::to_string(k) + " outside 0.." +
                          std::to_string(n == 0 ? 0 : n - 1));
    }
}

constexpr std::uint64_t low_mask(std::size_t bits) noexcept {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace detail

/// Aperiodic autocorrelation c_k = sum_{i=1}^{n-k} x_i x_{i+k}.
inline int autocorrelation(const BinarySequence& x, std::size_t k) {
    detail::check_shift(x.size(), k);
    auto v = x.values();
    int c = 0;
    for (std::size_t i = 0; i + k < v.size(); ++i) c += v[i] * v[i + k];
    return c;
}

/// Signs packed one per bit (+1 -> 0, -1 -> 1), any length.
///
/// With that mapping x_i x_{i+k} = -1 exactly when the two bits differ, so
/// c_k = (n - k) - 2 * popcount(bits ^ (bits >> k)) over the first n - k bits.
class PackedSequence {
public:
    explicit PackedSequence(const BinarySequence& x)
        : n_(x.size()), words_((x.size() + 63) / 64, 0) {
        auto v = x.values();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == -1) words_[i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }

    std::size_t size() const noexcept { return n_; }

    int autocorrelation(std::size_t k) const {
        detail::check_shift(n_, k);
        const std::size_t overlap = n_ - k;
        std::size_t mismatches = 0;
        for (std::size_t w = 0; w * 64 < overlap; ++w) {
            std::uint64_t diff = words_[w] ^ bits_from(w * 64 + k);
            const std::size_t remaining = overlap - w * 64;
            if (remaining < 64) diff &= detail::low_mask(remaining);
            mismatches += static_cast<std::size_t>(std::popcount(diff));
        }
        return static_cast<int>(overlap) - 2 * static_cast<int>(mismatches);
    }

private:
    // 64 bits starting at bit offset `start`; bits past the end read as 0.
    std::uint64_t bits_from(std::size_t start) const noexcept {
        const std::size_t w = start / 64;
        const std::size_t s = start % 64;
        if (w >= words_.size()) return 0;
        std::uint64_t lo = words_[w] >> s;
        if (s != 0 && w + 1 < words_.size()) lo |= words_[w + 1] << (64 - s);
        return lo;
    }

    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

/// c_k for a sequence of length n <= 64 held in a single word.
inline int autocorrelation_word(std::uint64_t bits, std::size_t n, std::size_t k) noexcept {
    const std::size_t overlap = n - k;
    const std::uint64_t diff = (bits ^ (bits >> k)) & detail::low_mask(overlap);
    return static_cast<int>(overlap) - 2 * std::popcount(diff);
}

inline bool is_barker(const BinarySequence& x) {
    if (x.size() < 2) throw DomainError("Barker property needs n >= 2");
    PackedSequence packed(x);
    for (std::size_t k = 1; k < x.size(); ++k) {
        const int c = packed.autocorrelation(k);
        if (c > 1 || c < -1) return false;
    }
    return true;
}

}  // namespace turyn
