#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "turyn/correlation.hpp"
#include "turyn/errors.hpp"
#include "turyn/parallel.hpp"
#include "turyn/sequence.hpp"
#include "turyn/theorem1.hpp"

namespace turyn {

/// Longest length the single-word search kernel handles.
inline constexpr std::size_t kMaxBarkerLength = 64;

struct BarkerSearchResult {
    std::size_t n = 0;
    std::vector<BinarySequence> sequences;  // lexicographic, +1 first
    std::chrono::nanoseconds elapsed{0};

    std::size_t count() const noexcept { return sequences.size(); }
};

namespace detail {

inline void check_barker_length(std::size_t n) {
    if (n < 2) throw ValidationError("Barker search needs n >= 2, got " + std::to_string(n));
    if (n > kMaxBarkerLength) {
        throw CapacityError("Barker search supports n <= " + std::to_string(kMaxBarkerLength) +
                            ", got " + std::to_string(n));
    }
}

// Grows the sequence from both ends. After fixing x_1..x_d and x_{n-d+1}..x_n
// the correlation c_{n-d} is final, so it is checked immediately. Bit s of
// `bits` is set when x_{s+1} = -1.
class BarkerSearcher {
public:
    explicit BarkerSearcher(std::size_t n) : n_(n) {}

    struct Node {
        std::uint64_t bits;
        std::size_t depth;
    };

    std::vector<Node> frontier(std::size_t depth) const {
        std::vector<Node> out;
        extend_to({0, 0}, depth, out);
        return out;
    }

    void complete(Node node, std::vector<BinarySequence>& out) const {
        const std::size_t front = node.depth;
        const std::size_t back = n_ - 1 - node.depth;
        if (front > back) {
            if (leaf_ok(node.bits)) out.push_back(unpack(node.bits));
            return;
        }
        if (front == back) {
            for (std::uint64_t b : {std::uint64_t{0}, std::uint64_t{1}}) {
                const std::uint64_t bits = node.bits | (b << front);
                if (leaf_ok(bits)) out.push_back(unpack(bits));
            }
            return;
        }
        for (unsigned choice = 0; choice < 4; ++choice) {
            Node child{place(node.bits, front, back, choice), node.depth + 1};
            if (outer_ok(child)) complete(child, out);
        }
    }

private:
    static std::uint64_t place(std::uint64_t bits, std::size_t front, std::size_t back,
                               unsigned choice) {
        return bits | (std::uint64_t{choice & 1u} << front) |
               (std::uint64_t{(choice >> 1) & 1u} << back);
    }

    bool outer_ok(const Node& node) const {
        const int c = autocorrelation_word(node.bits, n_, n_ - node.depth);
        return c >= -1 && c <= 1;
    }

    bool leaf_ok(std::uint64_t bits) const {
        for (std::size_t k = 1; k < n_; ++k) {
            const int c = autocorrelation_word(bits, n_, k);
            if (c > 1 || c < -1) return false;
        }
        return true;
    }

    void extend_to(Node node, std::size_t depth, std::vector<Node>& out) const {
        const std::size_t front = node.depth;
        const std::size_t back = n_ - 1 - node.depth;
        if (node.depth == depth || front >= back) {
            out.push_back(node);
            return;
        }
        for (unsigned choice = 0; choice < 4; ++choice) {
            Node child{place(node.bits, front, back, choice), node.depth + 1};
            if (outer_ok(child)) extend_to(child, depth, out);
        }
    }

    BinarySequence unpack(std::uint64_t bits) const {
        std::vector<std::int8_t> v(n_);
        for (std::size_t s = 0; s < n_; ++s) v[s] = ((bits >> s) & 1u) ? -1 : 1;
        return BinarySequence(std::move(v));
    }

    std::size_t n_;
};

}  // namespace detail

/// All Barker sequences of length n, found by exhaustive pruned search.
inline BarkerSearchResult barker_search(std::size_t n, std::size_t threads = default_thread_count()) {
    detail::check_barker_length(n);
    const auto started = std::chrono::steady_clock::now();

    detail::BarkerSearcher searcher(n);
    const auto tasks = searcher.frontier(std::min<std::size_t>(n / 2, 5));
    BarkerSearchResult result;
    result.n = n;
    result.sequences = ordered_parallel_collect<BinarySequence>(
        tasks.size(), threads, [&](std::size_t i) {
            std::vector<BinarySequence> found;
            searcher.complete(tasks[i], found);
            return found;
        });
    std::sort(result.sequences.begin(), result.sequences.end(), lex_less);
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - started);
    return result;
}

struct OddScanEntry {
    std::size_t n = 0;
    std::size_t count = 0;
    friend bool operator==(const OddScanEntry&, const OddScanEntry&) = default;
};

/// Barker counts for every odd 13 < n <= n_max.
inline std::vector<OddScanEntry> odd_nonexistence_scan(
    std::size_t n_max, std::size_t threads = default_thread_count()) {
    if (n_max > kMaxBarkerLength) {
        throw CapacityError("Barker search supports n <= " + std::to_string(kMaxBarkerLength) +
                            ", got " + std::to_string(n_max));
    }
    std::vector<OddScanEntry> scan;
    for (std::size_t n = 15; n <= n_max; n += 2) scan.push_back({n, barker_search(n, threads).count()});
    return scan;
}

/// A nonzero count in an odd scan would contradict the known nonexistence result.
inline bool has_odd_barker(const std::vector<OddScanEntry>& scan) {
    return std::any_of(scan.begin(), scan.end(), [](const OddScanEntry& e) { return e.count != 0; });
}

/// The k in 1..k_max(n) for which x satisfies equation (k).
inline std::vector<std::size_t> eq_k_profile(const BinarySequence& x) {
    if (x.size() < 3) throw DomainError("equation profile needs n >= 3");
    std::vector<std::size_t> ks;
    for (std::size_t k = 1; k <= k_max(x.size()); ++k) {
        if (satisfies_eq_k(x, k)) ks.push_back(k);
    }
    return ks;
}

}  // namespace turyn
