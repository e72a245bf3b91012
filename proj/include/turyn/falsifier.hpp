#pragma once

// Counterexamples to claim (iv): the four published ones, the
// (p, p, 2p, p, p-1, p-1) family, and an exhaustive search at fixed (p, t).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "turyn/errors.hpp"
#include "turyn/parallel.hpp"
#include "turyn/sequence.hpp"
#include "turyn/theorem1.hpp"

namespace turyn {

enum class RecordSource { catalog, family, search };

inline const char* to_string(RecordSource s) noexcept {
    switch (s) {
        case RecordSource::catalog: return "catalog";
        case RecordSource::family: return "family";
        case RecordSource::search: return "search";
    }
    return "unknown";
}

/// A length-(2t+1) prefix meeting the premise whose derived sequence fails
/// equation (k) for every k in `failing_k`.
struct CounterexampleRecord {
    RunLengthEncoding rle;
    std::size_t t = 0;
    std::size_t p = 0;
    BinarySequence z_prefix;
    std::vector<std::size_t> failing_k;
    RecordSource source = RecordSource::search;
    // Verdicts on claims (i)-(iii); empty when not evaluated.
    std::optional<bool> claim_i_ok;
    std::optional<bool> claim_ii_ok;
    std::optional<bool> claim_iii_ok;

    BinarySequence prefix() const { return rle_decode(rle); }

    friend bool operator==(const CounterexampleRecord&, const CounterexampleRecord&) = default;
};

/// Prefixes of 2t+1 elements are audited on n = 2t+2, with a trailing +1, so
/// that t <= k_max(n). Equation (k) for k <= t never reads the pad.
inline BinarySequence pad_prefix(const BinarySequence& prefix, std::size_t t) {
    return padded(prefix, 2 * t + 2);
}

namespace detail {

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

// Builds a record whose verdicts come from a fresh audit of `prefix`.
inline CounterexampleRecord audited_record(const BinarySequence& prefix, std::size_t t,
                                           RecordSource source, const Theorem1Report& report) {
    CounterexampleRecord rec;
    rec.rle = rle_encode(prefix);
    rec.t = t;
    rec.p = report.premise.p.value_or(0);
    rec.z_prefix = derived_sequence(prefix, rec.p);
    rec.failing_k = report.claim_iv->failing;
    rec.source = source;
    rec.claim_i_ok = report.claim_i->ok();
    rec.claim_ii_ok = *report.claim_ii;
    rec.claim_iii_ok = report.claim_iii->ok();
    return rec;
}

inline CounterexampleRecord catalog_entry(std::vector<std::size_t> runs, std::size_t t,
                                          std::size_t p, std::vector<std::size_t> failing_k) {
    CounterexampleRecord rec;
    rec.rle = {Sign::plus, std::move(runs)};
    rec.t = t;
    rec.p = p;
    rec.z_prefix = derived_sequence(rec.prefix(), p);
    rec.failing_k = std::move(failing_k);
    rec.source = RecordSource::catalog;
    return rec;
}

}  // namespace detail

/// The four published counterexamples, as (rle, t, p, failing k).
inline std::vector<CounterexampleRecord> published_catalog() {
    return {
        detail::catalog_entry({3, 3, 6, 3, 2, 2}, 9, 3, {3}),
        detail::catalog_entry({5, 5, 10, 5, 4, 4}, 16, 5, {3}),
        detail::catalog_entry({5, 5, 5, 5, 10, 10, 9, 4}, 26, 5, {5}),
        detail::catalog_entry({5, 5, 10, 5, 15, 5, 4, 1, 3}, 26, 5, {5}),
    };
}

/// Re-audits a record from its RLE; throws RecordMismatch on any disagreement.
inline Theorem1Report verify_record(const CounterexampleRecord& rec) {
    rec.rle.validate();
    if (rec.rle.total_length() != 2 * rec.t + 1) {
        throw ValidationError("record prefix has " + std::to_string(rec.rle.total_length()) +
                              " elements, expected 2t+1 = " + std::to_string(2 * rec.t + 1));
    }
    const BinarySequence prefix = rec.prefix();
    Theorem1Report report = theorem1_audit(pad_prefix(prefix, rec.t), rec.t);
    const std::string where = "record " + to_text(rec.rle) + " (t=" + std::to_string(rec.t) + ")";

    if (!report.premise_ok()) throw RecordMismatch(where + ": premise does not hold");
    if (*report.premise.p != rec.p) {
        throw RecordMismatch(where + ": expected p=" + std::to_string(rec.p) +
                             ", observed p=" + std::to_string(*report.premise.p));
    }
    if (report.claim_iv->failing != rec.failing_k) {
        throw RecordMismatch(where + ": expected failing_k=" + detail::join(rec.failing_k) +
                             ", observed failing_k=" + detail::join(report.claim_iv->failing));
    }
    if (rec.z_prefix != derived_sequence(prefix, rec.p)) {
        throw RecordMismatch(where + ": stored z does not match the prefix");
    }
    auto check_claim = [&](const std::optional<bool>& stored, bool observed, const char* name) {
        if (stored && *stored != observed) {
            throw RecordMismatch(where + ": claim (" + name + ") recorded as " +
                                 (*stored ? "true" : "false") + ", observed " +
                                 (observed ? "true" : "false"));
        }
    };
    check_claim(rec.claim_i_ok, report.claim_i->ok(), "i");
    check_claim(rec.claim_ii_ok, *report.claim_ii, "ii");
    check_claim(rec.claim_iii_ok, report.claim_iii->ok(), "iii");
    return report;
}

/// Instance of the (p, p, 2p, p, p-1, p-1) pattern; t = (7p-3)/2.
inline CounterexampleRecord family_counterexample(std::size_t p) {
    if (p < 3 || p % 2 == 0) {
        throw ValidationError("family needs odd p >= 3, got p=" + std::to_string(p));
    }
    const RunLengthEncoding rle{Sign::plus, {p, p, 2 * p, p, p - 1, p - 1}};
    const std::size_t t = (7 * p - 3) / 2;
    const BinarySequence prefix = rle_decode(rle);
    const Theorem1Report report = theorem1_audit(pad_prefix(prefix, t), t);
    const std::string where = "family p=" + std::to_string(p) + " (t=" + std::to_string(t) + ")";

    if (!report.premise_ok()) {
        throw FalsificationFailure(where + ": premise does not hold; failing equations " +
                                   detail::join(report.premise.failing_equations));
    }
    const auto& failing = report.claim_iv->failing;
    if (std::find(failing.begin(), failing.end(), std::size_t{3}) == failing.end()) {
        throw FalsificationFailure(where + ": claim (iv) does not fail at k=3; failing_k=" +
                                   detail::join(failing));
    }
    CounterexampleRecord rec = detail::audited_record(prefix, t, RecordSource::family, report);
    const BinarySequence expected_z{1, -1, 1, 1, -1, 1, -1};
    const auto zv = rec.z_prefix.values();
    if (zv.size() < expected_z.size() ||
        !std::equal(expected_z.values().begin(), expected_z.values().end(), zv.begin())) {
        throw FalsificationFailure(where + ": unexpected derived sequence " +
                                   to_literal(rec.z_prefix));
    }
    return rec;
}

struct SearchConfig {
    std::size_t p = 3;
    std::size_t t = 1;
    bool require_premise = true;
    std::optional<std::size_t> max_results;
    std::optional<std::size_t> thread_count;
};

struct SearchResult {
    SearchConfig config;
    std::vector<CounterexampleRecord> records;
    // Partial prefixes that survived the equation checks, leaves included.
    std::uint64_t nodes_visited = 0;
};

namespace detail {

// Right-hand side of equation (k) on 0-based storage, 2k+1 <= v.size().
inline int eq_k_sum_raw(const std::vector<std::int8_t>& v, std::size_t k) {
    int sum = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        const int term = v[i - 1] * v[2 * k + 1 - i];
        sum += (i % 2 == 1) ? term : -term;
    }
    return sum;
}

// Equation ((m-1)/2) becomes decidable once position m (odd, >= 3) is fixed.
inline bool newest_equation_holds(const std::vector<std::int8_t>& v) {
    const std::size_t m = v.size();
    if (m < 3 || m % 2 == 0) return true;
    const std::size_t k = (m - 1) / 2;
    return eq_k_sum_raw(v, k) == eq_k_lhs(k);
}

class PrefixSearcher {
public:
    PrefixSearcher(std::size_t p, std::size_t t) : p_(p), t_(t), length_(2 * t + 1) {}

    // Surviving prefixes of `depth` elements, in lexicographic order.
    std::vector<std::vector<std::int8_t>> frontier(std::vector<std::int8_t> start,
                                                   std::size_t depth, std::uint64_t& nodes) const {
        std::vector<std::vector<std::int8_t>> out;
        expand_to(start, depth, nodes, out);
        return out;
    }

    void complete(std::vector<std::int8_t>& v, std::uint64_t& nodes,
                  std::vector<CounterexampleRecord>& out) const {
        if (v.size() == length_) {
            emit_if_counterexample(v, out);
            return;
        }
        for (std::int8_t s : {std::int8_t{1}, std::int8_t{-1}}) {
            v.push_back(s);
            if (newest_equation_holds(v)) {
                ++nodes;
                complete(v, nodes, out);
            }
            v.pop_back();
        }
    }

private:
    void expand_to(std::vector<std::int8_t>& v, std::size_t depth, std::uint64_t& nodes,
                   std::vector<std::vector<std::int8_t>>& out) const {
        if (v.size() == depth) {
            out.push_back(v);
            return;
        }
        for (std::int8_t s : {std::int8_t{1}, std::int8_t{-1}}) {
            v.push_back(s);
            if (newest_equation_holds(v)) {
                ++nodes;
                expand_to(v, depth, nodes, out);
            }
            v.pop_back();
        }
    }

    void emit_if_counterexample(const std::vector<std::int8_t>& v,
                                std::vector<CounterexampleRecord>& out) const {
        // z_j = x_{p(j-1)+1}; claim (iv) needs z_1 .. z_{2K+1}, K = floor(t/p).
        const std::size_t k_bound = t_ / p_;
        std::vector<std::int8_t> z;
        for (std::size_t s = 0; s < v.size(); s += p_) z.push_back(v[s]);
        bool fails = false;
        for (std::size_t k = 1; k <= k_bound && !fails; ++k) {
            fails = eq_k_sum_raw(z, k) != eq_k_lhs(k);
        }
        if (!fails) return;
        BinarySequence prefix(v);
        const Theorem1Report report = theorem1_audit(pad_prefix(prefix, t_), t_);
        out.push_back(audited_record(prefix, t_, RecordSource::search, report));
    }

    std::size_t p_;
    std::size_t t_;
    std::size_t length_;
};

// Depth at which the search tree is cut into independent tasks. Fixed, so the
// task list (and therefore the output) never depends on the thread count.
inline constexpr std::size_t kSplitDepth = 10;

}  // namespace detail

/// Every length-(2t+1) prefix with x_1..x_p = +1, x_{p+1} = -1, equations
/// (1)..(t) satisfied and claim (iv) failing, in lexicographic order (+1 first).
inline SearchResult search(const SearchConfig& config) {
    if (config.p < 3) throw ValidationError("search needs p >= 3");
    if (config.t < 1) throw ValidationError("search needs t >= 1");
    if (!config.require_premise) {
        throw ValidationError("only premise-constrained search is supported");
    }
    if (config.thread_count && *config.thread_count == 0) {
        throw ValidationError("thread count must be positive");
    }

    SearchResult result;
    result.config = config;
    if (config.t < config.p) return result;

    const std::size_t length = 2 * config.t + 1;
    std::vector<std::int8_t> start(config.p, 1);
    start.push_back(-1);
    // The fixed head may already decide some equations.
    for (std::size_t m = 3; m <= start.size(); m += 2) {
        std::vector<std::int8_t> head(start.begin(), start.begin() + static_cast<long>(m));
        if (!detail::newest_equation_holds(head)) return result;
    }

    detail::PrefixSearcher searcher(config.p, config.t);
    const std::size_t depth = std::min(length, start.size() + detail::kSplitDepth);
    std::uint64_t nodes = 0;
    const auto tasks = searcher.frontier(start, depth, nodes);

    std::vector<std::uint64_t> task_nodes(tasks.size(), 0);
    const std::size_t threads = config.thread_count.value_or(default_thread_count());
    result.records = ordered_parallel_collect<CounterexampleRecord>(
        tasks.size(), threads, [&](std::size_t i) {
            std::vector<CounterexampleRecord> found;
            std::vector<std::int8_t> v = tasks[i];
            searcher.complete(v, task_nodes[i], found);
            return found;
        });
    for (auto n : task_nodes) nodes += n;
    result.nodes_visited = nodes;

    if (config.max_results && result.records.size() > *config.max_results) {
        result.records.resize(*config.max_results);
    }
    return result;
}

// Tabular catalog format: one record per line, tab separated
//   <rle>  <t>  <p>  <failing k, comma separated>
// Lines starting with '#' are comments.

inline void write_catalog_table(std::ostream& os, const std::vector<CounterexampleRecord>& records) {
    os << "# rle\tt\tp\tfailing_k\n";
    for (const auto& rec : records) {
        os << to_text(rec.rle) << '\t' << rec.t << '\t' << rec.p << '\t';
        for (std::size_t i = 0; i < rec.failing_k.size(); ++i) {
            if (i) os << ',';
            os << rec.failing_k[i];
        }
        os << '\n';
    }
}

inline std::vector<CounterexampleRecord> read_catalog_table(
    std::istream& is, RecordSource source = RecordSource::catalog) {
    std::vector<CounterexampleRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, '\t');) fields.push_back(f);
        const std::string where = "catalog line " + std::to_string(line_no);
        if (fields.size() != 4) {
            throw ValidationError(where + ": expected 4 tab-separated fields, got " +
                                  std::to_string(fields.size()));
        }
        auto number = [&](const std::string& s) -> std::size_t {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
                throw ValidationError(where + ": '" + s + "' is not a non-negative integer");
            }
            return std::stoul(s);
        };
        CounterexampleRecord rec;
        rec.rle = parse_rle(fields[0]);
        rec.t = number(fields[1]);
        rec.p = number(fields[2]);
        std::stringstream ks(fields[3]);
        for (std::string k; std::getline(ks, k, ',');) rec.failing_k.push_back(number(k));
        if (rec.p < 1 || rec.p > rec.rle.total_length()) {
            throw ValidationError(where + ": p out of range");
        }
        rec.z_prefix = derived_sequence(rec.prefix(), rec.p);
        rec.source = source;
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace turyn
