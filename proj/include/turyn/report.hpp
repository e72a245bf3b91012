#pragma once

// JSON forms of the library's result types and the per-invocation report
// document emitted by the command-line tool.

#include <string>
#include <vector>

#include "json.hpp"
#include "turyn/barker.hpp"
#include "turyn/errors.hpp"
#include "turyn/falsifier.hpp"
#include "turyn/sequence.hpp"
#include "turyn/theorem1.hpp"

namespace turyn {

inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::ordered_json;

inline void to_json(json& j, const BinarySequence& x) { j = to_literal(x); }
inline void from_json(const json& j, BinarySequence& x) { x = parse_literal(j.get<std::string>()); }

inline void to_json(json& j, const RunLengthEncoding& r) { j = to_text(r); }
inline void from_json(const json& j, RunLengthEncoding& r) { r = parse_rle(j.get<std::string>()); }

inline void to_json(json& j, const BlockIndex& b) { j = json::array({b.j, b.r}); }
inline void from_json(const json& j, BlockIndex& b) {
    b.j = j.at(0).get<std::size_t>();
    b.r = j.at(1).get<std::size_t>();
}

namespace detail {

template <typename Witness>
json claim_to_json(const std::optional<ClaimResult<Witness>>& c, const char* key) {
    if (!c) return nullptr;
    return json{{"ok", c->ok()}, {key, c->failing}};
}

template <typename Witness>
std::optional<ClaimResult<Witness>> claim_from_json(const json& j, const char* key) {
    if (j.is_null()) return std::nullopt;
    ClaimResult<Witness> c;
    c.failing = j.at(key).get<std::vector<Witness>>();
    if (j.at("ok").get<bool>() != c.ok()) {
        throw ValidationError(std::string("claim verdict disagrees with its '") + key + "' list");
    }
    return c;
}

inline json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }
inline std::optional<bool> optional_bool(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

}  // namespace detail

inline void to_json(json& j, const Premise& p) {
    j = json{{"ok", p.ok()},
             {"prefix_long_enough", p.prefix_long_enough},
             {"failing_equations", p.failing_equations},
             {"starts_with_plus", p.starts_with_plus},
             {"p", p.p ? json(*p.p) : json(nullptr)},
             {"minus_follows_run", p.minus_follows_run},
             {"p_greater_than_one", p.p_greater_than_one}};
}

inline void from_json(const json& j, Premise& p) {
    p.prefix_long_enough = j.at("prefix_long_enough").get<bool>();
    p.failing_equations = j.at("failing_equations").get<std::vector<std::size_t>>();
    p.starts_with_plus = j.at("starts_with_plus").get<bool>();
    p.p = j.at("p").is_null() ? std::nullopt : std::optional(j.at("p").get<std::size_t>());
    p.minus_follows_run = j.at("minus_follows_run").get<bool>();
    p.p_greater_than_one = j.at("p_greater_than_one").get<bool>();
    if (j.at("ok").get<bool>() != p.ok()) throw ValidationError("premise verdict is inconsistent");
}

inline void to_json(json& j, const Theorem1Report& r) {
    j = json{{"n", r.n},
             {"t", r.t},
             {"premise", r.premise},
             {"claims",
              {{"i", detail::claim_to_json(r.claim_i, "failing")},
               {"ii", r.claim_ii ? json{{"ok", *r.claim_ii}} : json(nullptr)},
               {"iii", detail::claim_to_json(r.claim_iii, "failing")},
               {"iv", detail::claim_to_json(r.claim_iv, "failing_k")}}},
             {"falsified", r.falsified()}};
}

inline void from_json(const json& j, Theorem1Report& r) {
    r.n = j.at("n").get<std::size_t>();
    r.t = j.at("t").get<std::size_t>();
    r.premise = j.at("premise").get<Premise>();
    const json& c = j.at("claims");
    r.claim_i = detail::claim_from_json<std::size_t>(c.at("i"), "failing");
    r.claim_ii = c.at("ii").is_null() ? std::nullopt
                                      : std::optional(c.at("ii").at("ok").get<bool>());
    r.claim_iii = detail::claim_from_json<BlockIndex>(c.at("iii"), "failing");
    r.claim_iv = detail::claim_from_json<std::size_t>(c.at("iv"), "failing_k");
    if (r.premise.ok() != (r.claim_i && r.claim_ii && r.claim_iii && r.claim_iv)) {
        throw ValidationError("claims must be present exactly when the premise holds");
    }
}

inline void to_json(json& j, const CounterexampleRecord& rec) {
    j = json{{"rle", rec.rle},
             {"t", rec.t},
             {"p", rec.p},
             {"z_prefix", rec.z_prefix},
             {"failing_k", rec.failing_k},
             {"source", to_string(rec.source)},
             {"claims",
              {{"i", detail::optional_bool(rec.claim_i_ok)},
               {"ii", detail::optional_bool(rec.claim_ii_ok)},
               {"iii", detail::optional_bool(rec.claim_iii_ok)}}}};
}

inline void from_json(const json& j, CounterexampleRecord& rec) {
    rec.rle = j.at("rle").get<RunLengthEncoding>();
    rec.t = j.at("t").get<std::size_t>();
    rec.p = j.at("p").get<std::size_t>();
    rec.z_prefix = j.at("z_prefix").get<BinarySequence>();
    rec.failing_k = j.at("failing_k").get<std::vector<std::size_t>>();
    const auto source = j.at("source").get<std::string>();
    if (source == "catalog") {
        rec.source = RecordSource::catalog;
    } else if (source == "family") {
        rec.source = RecordSource::family;
    } else if (source == "search") {
        rec.source = RecordSource::search;
    } else {
        throw ValidationError("unknown record source '" + source + "'");
    }
    const json& c = j.at("claims");
    rec.claim_i_ok = detail::optional_bool(c.at("i"));
    rec.claim_ii_ok = detail::optional_bool(c.at("ii"));
    rec.claim_iii_ok = detail::optional_bool(c.at("iii"));
}

/// Elapsed time is left out so that identical runs serialize identically.
inline void to_json(json& j, const BarkerSearchResult& r) {
    j = json{{"n", r.n}, {"count", r.count()}, {"sequences", r.sequences}};
}

inline void from_json(const json& j, BarkerSearchResult& r) {
    r.n = j.at("n").get<std::size_t>();
    r.sequences = j.at("sequences").get<std::vector<BinarySequence>>();
    if (j.at("count").get<std::size_t>() != r.sequences.size()) {
        throw ValidationError("Barker count disagrees with the sequence list");
    }
}

inline void to_json(json& j, const OddScanEntry& e) { j = json{{"n", e.n}, {"count", e.count}}; }
inline void from_json(const json& j, OddScanEntry& e) {
    e.n = j.at("n").get<std::size_t>();
    e.count = j.at("count").get<std::size_t>();
}

// Run report ------------------------------------------------------------------

/// Outcome of one command. The exit code is a function of this alone.
enum class Status {
    ok,              // all claims hold / command completed
    found,           // a search or catalog produced counterexample records
    falsified,       // verify: a claim failed under a satisfied premise
    premise_failed,  // verify: the hypothesis does not hold for the input
    empty,           // a search finished without results
    mismatch,        // a stored or constructed record did not re-audit
    error,           // usage, parse or capacity error
};

inline const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::ok: return "ok";
        case Status::found: return "found";
        case Status::falsified: return "falsified";
        case Status::premise_failed: return "premise_failed";
        case Status::empty: return "empty";
        case Status::mismatch: return "mismatch";
        case Status::error: return "error";
    }
    return "error";
}

inline Status status_from_string(const std::string& s) {
    for (Status st : {Status::ok, Status::found, Status::falsified, Status::premise_failed,
                      Status::empty, Status::mismatch, Status::error}) {
        if (s == to_string(st)) return st;
    }
    throw ValidationError("unknown status '" + s + "'");
}

constexpr int exit_code(Status s) noexcept {
    switch (s) {
        case Status::ok:
        case Status::found: return 0;
        case Status::falsified:
        case Status::premise_failed:
        case Status::empty:
        case Status::mismatch: return 1;
        case Status::error: return 2;
    }
    return 2;
}

struct RunReport {
    std::string command;
    json inputs = json::object();
    json verdicts = json::object();
    Status status = Status::ok;
    std::string tool_version = kToolVersion;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline void to_json(json& j, const RunReport& r) {
    j = json{{"command", r.command},
             {"inputs", r.inputs},
             {"verdicts", r.verdicts},
             {"status", to_string(r.status)},
             {"tool_version", r.tool_version}};
}

inline void from_json(const json& j, RunReport& r) {
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.verdicts = j.at("verdicts");
    r.status = status_from_string(j.at("status").get<std::string>());
    r.tool_version = j.at("tool_version").get<std::string>();
}

}  // namespace turyn
