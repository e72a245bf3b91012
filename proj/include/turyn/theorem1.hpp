#pragma once

// Equation (k) and executable checks for the four claims of the Turyn-Storer
// structure theorem on binary sequences.
//
// x satisfies equation (k) when
//
//     (1 + (-1)^(k+1)) / 2  ==  sum_{i=1}^{k} (-1)^(i+1) x_i x_{2k+2-i}
//
// which only reads x_1 .. x_{2k+1}. All positions below are 1-based.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "turyn/errors.hpp"
#include "turyn/sequence.hpp"

namespace turyn {

/// Left-hand side of equation (k): 1 for odd k, 0 for even k.
constexpr int eq_k_lhs(std::size_t k) noexcept { return k % 2 == 1 ? 1 : 0; }

/// Largest k the equation family is defined for on length n, i.e. k < (n-1)/2.
constexpr std::size_t k_max(std::size_t n) noexcept { return n < 2 ? 0 : (n - 2) / 2; }

/// Right-hand side of equation (k). Requires only 2k+1 <= n.
inline int eq_k_sum(const BinarySequence& x, std::size_t k) {
    if (k < 1 || 2 * k + 1 > x.size()) {
        throw DomainError("equation (" + std::to_string(k) + ") needs 2k+1 <= n, n = " +
                          std::to_string(x.size()));
    }
    int sum = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        const int term = x.at(i) * x.at(2 * k + 2 - i);
        sum += (i % 2 == 1) ? term : -term;
    }
    return sum;
}

inline bool satisfies_eq_k(const BinarySequence& x, std::size_t k) {
    return eq_k_sum(x, k) == eq_k_lhs(k);
}

/// Largest t with equations (1)..(t) all holding, capped at k_max(n).
inline std::size_t max_t(const BinarySequence& x) {
    if (x.size() < 3) throw DomainError("max_t needs n >= 3");
    const std::size_t cap = k_max(x.size());
    std::size_t t = 0;
    while (t < cap && satisfies_eq_k(x, t + 1)) ++t;
    return t;
}

/// Length p of the initial run of +1 entries.
inline std::size_t leading_run(const BinarySequence& x) {
    if (x.empty() || x.at(1) != 1) throw PremiseError("sequence does not start with +1");
    std::size_t p = 1;
    while (p < x.size() && x.at(p + 1) == 1) ++p;
    return p;
}

/// z_j = x_{p(j-1)+1} for every j with p(j-1)+1 <= n.
inline BinarySequence derived_sequence(const BinarySequence& x, std::size_t p) {
    if (p < 1 || p > x.size()) {
        throw DomainError("subsampling step " + std::to_string(p) + " outside 1..n");
    }
    std::vector<std::int8_t> z;
    z.reserve((x.size() - 1) / p + 1);
    for (std::size_t pos = 1; pos <= x.size(); pos += p) {
        z.push_back(static_cast<std::int8_t>(x.at(pos)));
    }
    return BinarySequence(std::move(z));
}

/// Verdict of one claim together with every witness against it.
template <typename Witness>
struct ClaimResult {
    std::vector<Witness> failing;

    bool ok() const noexcept { return failing.empty(); }
    friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

/// Position (j, r) inside block j of claim (iii).
struct BlockIndex {
    std::size_t j = 0;
    std::size_t r = 0;
    friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

namespace detail {

inline void require_prefix(const BinarySequence& x, std::size_t t) {
    if (2 * t + 1 > x.size()) {
        throw DomainError("t = " + std::to_string(t) + " needs 2t+1 <= n, n = " +
                          std::to_string(x.size()));
    }
}

}  // namespace detail

/// Claim (i): x_i x_{i+1} = x_{2i} x_{2i+1} for 1 <= i <= t.
inline ClaimResult<std::size_t> check_claim_i(const BinarySequence& x, std::size_t t) {
    detail::require_prefix(x, t);
    ClaimResult<std::size_t> result;
    for (std::size_t i = 1; i <= t; ++i) {
        if (x.at(i) * x.at(i + 1) != x.at(2 * i) * x.at(2 * i + 1)) result.failing.push_back(i);
    }
    return result;
}

/// Claim (ii): p <= 2t+1 implies p odd.
constexpr bool check_claim_ii(std::size_t p, std::size_t t) noexcept {
    return p > 2 * t + 1 || p % 2 == 1;
}

/// Claim (iii): pj + r <= 2t+1 with 1 <= r <= p implies x_{p(j-1)+r} = x_{p(j-1)+1}.
inline ClaimResult<BlockIndex> check_claim_iii(const BinarySequence& x, std::size_t p,
                                               std::size_t t) {
    detail::require_prefix(x, t);
    if (p < 1) throw DomainError("block length must be positive");
    ClaimResult<BlockIndex> result;
    const std::size_t bound = 2 * t + 1;
    for (std::size_t j = 1; p * j + 1 <= bound; ++j) {
        const int head = x.at(p * (j - 1) + 1);
        for (std::size_t r = 1; r <= p && p * j + r <= bound; ++r) {
            if (x.at(p * (j - 1) + r) != head) result.failing.push_back({j, r});
        }
    }
    return result;
}

/// Claim (iv): z satisfies equation (k) for every integer k <= floor(t/p).
inline ClaimResult<std::size_t> check_claim_iv(const BinarySequence& x, std::size_t p,
                                               std::size_t t) {
    if (p < 1) throw DomainError("block length must be positive");
    ClaimResult<std::size_t> result;
    const std::size_t k_bound = t / p;
    if (k_bound == 0) return result;
    const BinarySequence z = derived_sequence(x, p);
    if (2 * k_bound + 1 > z.size()) {
        throw DomainError("derived sequence has " + std::to_string(z.size()) +
                          " elements, equation (" + std::to_string(k_bound) + ") needs " +
                          std::to_string(2 * k_bound + 1));
    }
    for (std::size_t k = 1; k <= k_bound; ++k) {
        if (!satisfies_eq_k(z, k)) result.failing.push_back(k);
    }
    return result;
}

/// Which parts of the theorem's hypothesis hold.
struct Premise {
    bool prefix_long_enough = false;  // 2t+1 <= n
    std::vector<std::size_t> failing_equations;
    bool starts_with_plus = false;
    std::optional<std::size_t> p;  // leading +1 run, when x_1 = +1
    bool minus_follows_run = false;
    bool p_greater_than_one = false;

    bool ok() const noexcept {
        return prefix_long_enough && failing_equations.empty() && starts_with_plus &&
               minus_follows_run && p_greater_than_one;
    }
    friend bool operator==(const Premise&, const Premise&) = default;
};

/// Outcome of auditing all four claims on one sequence. Claims stay empty
/// (not applicable) when the premise fails.
struct Theorem1Report {
    std::size_t n = 0;
    std::size_t t = 0;
    Premise premise;
    std::optional<ClaimResult<std::size_t>> claim_i;
    std::optional<bool> claim_ii;
    std::optional<ClaimResult<BlockIndex>> claim_iii;
    std::optional<ClaimResult<std::size_t>> claim_iv;

    bool premise_ok() const noexcept { return premise.ok(); }

    /// True when the premise holds and at least one claim fails.
    bool falsified() const noexcept {
        if (!premise_ok()) return false;
        return !claim_i->ok() || !*claim_ii || !claim_iii->ok() || !claim_iv->ok();
    }

    friend bool operator==(const Theorem1Report&, const Theorem1Report&) = default;
};

inline Theorem1Report theorem1_audit(const BinarySequence& x, std::size_t t) {
    Theorem1Report report;
    report.n = x.size();
    report.t = t;
    Premise& pr = report.premise;

    pr.prefix_long_enough = 2 * t + 1 <= x.size();
    for (std::size_t k = 1; k <= t && 2 * k + 1 <= x.size(); ++k) {
        if (!satisfies_eq_k(x, k)) pr.failing_equations.push_back(k);
    }
    pr.starts_with_plus = !x.empty() && x.at(1) == 1;
    if (pr.starts_with_plus) {
        pr.p = leading_run(x);
        pr.minus_follows_run = *pr.p < x.size();
        pr.p_greater_than_one = *pr.p > 1;
    }
    if (!pr.ok()) return report;

    const std::size_t p = *pr.p;
    report.claim_i = check_claim_i(x, t);
    report.claim_ii = check_claim_ii(p, t);
    report.claim_iii = check_claim_iii(x, p, t);
    report.claim_iv = check_claim_iv(x, p, t);
    return report;
}

}  // namespace turyn
