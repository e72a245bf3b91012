#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turyn/errors.hpp"

namespace turyn {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char symbol(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

/// A finite sequence of +1/-1 values.
///
/// Every public accessor that takes a position uses 1-based indexing, so that
/// `x.at(1)` is the first element. `values()` exposes the 0-based storage for
/// kernels; it is the only place where the two conventions meet.
class BinarySequence {
public:
    BinarySequence() = default;

    explicit BinarySequence(std::vector<std::int8_t> values) : values_(std::move(values)) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i] != 1 && values_[i] != -1) {
                throw ValidationError("element " + std::to_string(i + 1) + " is " +
                                      std::to_string(int{values_[i]}) + ", expected +1 or -1");
            }
        }
    }

    BinarySequence(std::initializer_list<int> values)
        : BinarySequence(std::vector<std::int8_t>(values.begin(), values.end())) {}

    static BinarySequence constant(std::size_t n, Sign s = Sign::plus) {
        return BinarySequence(std::vector<std::int8_t>(n, static_cast<std::int8_t>(value(s))));
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// x_i for 1 <= i <= n.
    int at(std::size_t i) const {
        if (i < 1 || i > values_.size()) {
            throw DomainError("index " + std::to_string(i) + " outside 1.." +
                              std::to_string(values_.size()));
        }
        return values_[i - 1];
    }

    std::span<const std::int8_t> values() const noexcept { return values_; }

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    std::vector<std::int8_t> values_;
};

/// Lexicographic order with +1 ranked before -1.
inline bool lex_less(const BinarySequence& a, const BinarySequence& b) {
    return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(),
                                        b.values().end(),
                                        [](std::int8_t l, std::int8_t r) { return l > r; });
}

inline BinarySequence negated(const BinarySequence& x) {
    std::vector<std::int8_t> v(x.values().begin(), x.values().end());
    for (auto& e : v) e = static_cast<std::int8_t>(-e);
    return BinarySequence(std::move(v));
}

inline BinarySequence reversed(const BinarySequence& x) {
    return BinarySequence(std::vector<std::int8_t>(x.values().rbegin(), x.values().rend()));
}

/// x_i -> (-1)^i x_i.
inline BinarySequence alternated(const BinarySequence& x) {
    std::vector<std::int8_t> v(x.values().begin(), x.values().end());
    // 0-based slot s holds x_{s+1}; odd i are the even slots.
    for (std::size_t s = 0; s < v.size(); s += 2) v[s] = static_cast<std::int8_t>(-v[s]);
    return BinarySequence(std::move(v));
}

/// Extends `x` with +1 entries up to length `n`; returns `x` unchanged when already long enough.
inline BinarySequence padded(const BinarySequence& x, std::size_t n, Sign fill = Sign::plus) {
    std::vector<std::int8_t> v(x.values().begin(), x.values().end());
    if (v.size() < n) v.resize(n, static_cast<std::int8_t>(value(fill)));
    return BinarySequence(std::move(v));
}

/// Leading sign plus the lengths of maximal constant runs.
struct RunLengthEncoding {
    Sign leading_sign = Sign::plus;
    std::vector<std::size_t> runs;

    std::size_t total_length() const noexcept {
        std::size_t n = 0;
        for (auto r : runs) n += r;
        return n;
    }

    void validate() const {
        if (runs.empty()) throw ValidationError("run-length encoding has no runs");
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (runs[i] == 0) {
                throw ValidationError("run " + std::to_string(i + 1) + " has length 0");
            }
        }
    }

    friend bool operator==(const RunLengthEncoding&, const RunLengthEncoding&) = default;
};

inline BinarySequence rle_decode(const RunLengthEncoding& rle) {
    rle.validate();
    std::vector<std::int8_t> v;
    v.reserve(rle.total_length());
    Sign s = rle.leading_sign;
    for (auto r : rle.runs) {
        v.insert(v.end(), r, static_cast<std::int8_t>(value(s)));
        s = flip(s);
    }
    return BinarySequence(std::move(v));
}

inline RunLengthEncoding rle_encode(const BinarySequence& x) {
    if (x.empty()) throw ValidationError("cannot encode an empty sequence");
    auto v = x.values();
    RunLengthEncoding rle{v[0] == 1 ? Sign::plus : Sign::minus, {}};
    std::size_t run = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] == v[i - 1]) {
            ++run;
        } else {
            rle.runs.push_back(run);
            run = 1;
        }
    }
    rle.runs.push_back(run);
    return rle;
}

// Text formats ---------------------------------------------------------------

/// "+++--+" style literal.
inline std::string to_literal(const BinarySequence& x) {
    std::string s;
    s.reserve(x.size());
    for (auto e : x.values()) s.push_back(e == 1 ? '+' : '-');
    return s;
}

inline BinarySequence parse_literal(std::string_view text) {
    if (text.empty()) throw ParseError("empty sequence literal", 0);
    std::vector<std::int8_t> v;
    v.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '+') {
            v.push_back(1);
        } else if (text[i] == '-') {
            v.push_back(-1);
        } else {
            throw ParseError(std::string("unexpected character '") + text[i] +
                                 "' in sequence literal",
                             i);
        }
    }
    return BinarySequence(std::move(v));
}

/// "+3,3,6" style encoding; the sign is always written.
inline std::string to_text(const RunLengthEncoding& rle) {
    std::string s(1, symbol(rle.leading_sign));
    for (std::size_t i = 0; i < rle.runs.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(rle.runs[i]);
    }
    return s;
}

/// Parses "[+|-]r1,r2,...". A missing sign is an error unless `default_sign` is given.
inline RunLengthEncoding parse_rle(std::string_view text,
                                   std::optional<Sign> default_sign = std::nullopt) {
    if (text.empty()) throw ParseError("empty run-length encoding", 0);
    RunLengthEncoding rle;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        rle.leading_sign = text[0] == '+' ? Sign::plus : Sign::minus;
        pos = 1;
    } else if (default_sign) {
        rle.leading_sign = *default_sign;
    } else {
        throw ParseError("run-length encoding must start with '+' or '-'", 0);
    }
    while (true) {
        std::size_t start = pos;
        std::size_t run = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            run = run * 10 + static_cast<std::size_t>(text[pos] - '0');
            if (run > (std::size_t{1} << 32)) throw ParseError("run length too large", start);
            ++pos;
        }
        if (pos == start) {
            if (pos < text.size()) {
                throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
            }
            throw ParseError("expected a run length", pos);
        }
        if (run == 0) throw ParseError("run length must be positive", start);
        rle.runs.push_back(run);
        if (pos == text.size()) break;
        if (text[pos] != ',') {
            throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        }
        ++pos;
    }
    return rle;
}

}  // namespace turyn
