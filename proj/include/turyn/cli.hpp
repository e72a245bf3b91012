#pragma once

// Command-line front end: verify, falsify, barker and rle subcommands.
// `run` takes the arguments after the program name and returns the exit code.

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "turyn/barker.hpp"
#include "turyn/errors.hpp"
#include "turyn/falsifier.hpp"
#include "turyn/parallel.hpp"
#include "turyn/report.hpp"
#include "turyn/sequence.hpp"
#include "turyn/theorem1.hpp"

namespace turyn::cli {

struct Outcome {
    RunReport report;
    std::string text;  // human-readable rendering
};

namespace detail {

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s;
}

inline Outcome error_outcome(const std::string& command, json inputs, const std::string& message) {
    Outcome o;
    o.report.command = command;
    o.report.inputs = std::move(inputs);
    o.report.verdicts = json{{"message", message}};
    o.report.status = Status::error;
    o.text = "error: " + message + "\n";
    return o;
}

template <typename Witness>
std::string claim_line(const char* name, const std::optional<ClaimResult<Witness>>& c,
                       const std::string& failing) {
    std::ostringstream os;
    os << "claim " << name << ": ";
    if (!c) {
        os << "not applicable";
    } else if (c->ok()) {
        os << "holds";
    } else {
        os << "FAILS (" << failing << ")";
    }
    return os.str();
}

}  // namespace detail

struct VerifyArgs {
    std::optional<std::string> rle;
    std::optional<std::string> seq;
    std::size_t t = 1;
    std::optional<std::size_t> pad;
};

inline Outcome cmd_verify(const VerifyArgs& args) {
    json inputs = json::object();
    if (args.rle) inputs["rle"] = *args.rle;
    if (args.seq) inputs["seq"] = *args.seq;
    inputs["t"] = args.t;
    inputs["pad"] = args.pad ? json(*args.pad) : json(nullptr);

    if (args.rle.has_value() == args.seq.has_value()) {
        return detail::error_outcome("verify", inputs, "exactly one of --rle or --seq is required");
    }
    if (args.t < 1) return detail::error_outcome("verify", inputs, "--t must be at least 1");

    BinarySequence x;
    try {
        x = args.rle ? rle_decode(parse_rle(*args.rle, Sign::plus)) : parse_literal(*args.seq);
    } catch (const ValidationError& e) {
        return detail::error_outcome("verify", inputs, e.what());
    }
    if (args.pad) {
        if (*args.pad < x.size()) {
            return detail::error_outcome("verify", inputs,
                                         "--pad " + std::to_string(*args.pad) +
                                             " is shorter than the sequence (" +
                                             std::to_string(x.size()) + ")");
        }
        x = padded(x, *args.pad);
    }

    const Theorem1Report audit = theorem1_audit(x, args.t);
    Outcome o;
    o.report.command = "verify";
    o.report.inputs = inputs;
    o.report.verdicts = json{{"sequence", x}, {"audit", audit}};
    if (x.size() >= 3) o.report.verdicts["max_t"] = max_t(x);
    if (audit.premise.p && *audit.premise.p <= x.size()) {
        o.report.verdicts["z"] = derived_sequence(x, *audit.premise.p);
    }
    if (!audit.premise_ok()) {
        o.report.status = Status::premise_failed;
    } else if (audit.falsified()) {
        o.report.status = Status::falsified;
    } else {
        o.report.status = Status::ok;
    }

    std::ostringstream os;
    os << "sequence: " << to_literal(x) << "\n";
    os << "n: " << x.size() << "  t: " << args.t << "\n";
    const Premise& pr = audit.premise;
    os << "premise: " << (pr.ok() ? "holds" : "FAILS");
    if (pr.p) os << " (p=" << *pr.p << ")";
    os << "\n";
    if (!pr.prefix_long_enough) os << "  2t+1 exceeds n\n";
    if (!pr.failing_equations.empty()) {
        os << "  equations failing: " << detail::join(pr.failing_equations) << "\n";
    }
    if (!pr.starts_with_plus) os << "  x_1 is not +1\n";
    if (pr.starts_with_plus && !pr.minus_follows_run) os << "  no -1 follows the leading run\n";
    if (pr.starts_with_plus && !pr.p_greater_than_one) os << "  leading run has length 1\n";
    if (audit.premise_ok()) {
        os << detail::claim_line("i", audit.claim_i, "i = " + detail::join(audit.claim_i->failing))
           << "\n";
        os << "claim ii: " << (*audit.claim_ii ? "holds" : "FAILS") << "\n";
        std::string pairs;
        for (const auto& b : audit.claim_iii->failing) {
            if (!pairs.empty()) pairs += ", ";
            pairs += "(" + std::to_string(b.j) + "," + std::to_string(b.r) + ")";
        }
        os << detail::claim_line("iii", audit.claim_iii, "(j,r) = " + pairs) << "\n";
        os << detail::claim_line("iv", audit.claim_iv, "k = " + detail::join(audit.claim_iv->failing))
           << "\n";
    }
    os << "status: " << to_string(o.report.status) << "\n";
    o.text = os.str();
    return o;
}

struct FalsifyArgs {
    bool catalog = false;
    bool family = false;
    std::optional<std::size_t> p;
    std::optional<std::size_t> t;
    std::optional<std::size_t> max_results;
    std::optional<std::size_t> threads;
    std::optional<std::string> out;
};

inline std::string render_records(const std::vector<CounterexampleRecord>& records) {
    std::ostringstream os;
    os << "rle\tt\tp\tfailing_k\tz_prefix\tclaims(i,ii,iii)\n";
    auto verdict = [](const std::optional<bool>& b) { return b ? (*b ? "T" : "F") : "-"; };
    for (const auto& r : records) {
        os << to_text(r.rle) << '\t' << r.t << '\t' << r.p << '\t' << detail::join(r.failing_k)
           << '\t' << to_literal(r.z_prefix) << '\t' << verdict(r.claim_i_ok)
           << verdict(r.claim_ii_ok) << verdict(r.claim_iii_ok) << '\n';
    }
    os << records.size() << " record(s)\n";
    return os.str();
}

inline Outcome cmd_falsify(const FalsifyArgs& args) {
    json inputs{{"catalog", args.catalog},
                {"family", args.family},
                {"p", args.p ? json(*args.p) : json(nullptr)},
                {"t", args.t ? json(*args.t) : json(nullptr)},
                {"max_results", args.max_results ? json(*args.max_results) : json(nullptr)}};
    auto fail = [&](const std::string& m) { return detail::error_outcome("falsify", inputs, m); };

    if (int{args.catalog} + int{args.family} > 1) {
        return fail("--catalog and --family are mutually exclusive");
    }
    if (args.threads && *args.threads == 0) return fail("--threads must be positive");

    Outcome o;
    o.report.command = "falsify";
    o.report.inputs = inputs;
    std::vector<CounterexampleRecord> records;

    try {
        if (args.catalog) {
            records = published_catalog();
            json audits = json::array();
            std::vector<std::string> mismatches;
            for (const auto& rec : records) {
                try {
                    audits.push_back(verify_record(rec));
                } catch (const RecordMismatch& e) {
                    audits.push_back(nullptr);
                    mismatches.push_back(e.what());
                }
            }
            o.report.verdicts = json{{"records", records}, {"audits", audits}};
            if (!mismatches.empty()) o.report.verdicts["mismatches"] = mismatches;
            o.report.status = mismatches.empty() ? Status::found : Status::mismatch;
        } else if (args.family) {
            if (!args.p) return fail("--family needs --p");
            try {
                records = {family_counterexample(*args.p)};
                o.report.verdicts = json{{"records", records},
                                         {"audits", json::array({verify_record(records[0])})}};
                o.report.status = Status::found;
            } catch (const FalsificationFailure& e) {
                o.report.verdicts = json{{"records", json::array()}, {"message", e.what()}};
                o.report.status = Status::mismatch;
                o.text = std::string("family did not produce a counterexample: ") + e.what() + "\n";
            }
        } else {
            if (!args.p || !args.t) return fail("search needs --p and --t");
            SearchConfig config;
            config.p = *args.p;
            config.t = *args.t;
            config.max_results = args.max_results;
            config.thread_count = args.threads;
            const SearchResult result = search(config);
            records = result.records;
            o.report.verdicts = json{{"count", records.size()},
                                     {"nodes_visited", result.nodes_visited},
                                     {"records", records}};
            o.report.status = records.empty() ? Status::empty : Status::found;
        }
    } catch (const ValidationError& e) {
        return fail(e.what());
    } catch (const DomainError& e) {
        return fail(e.what());
    }

    if (args.out) {
        std::ofstream file(*args.out);
        if (!file) return fail("cannot open '" + *args.out + "' for writing");
        write_catalog_table(file, records);
    }
    if (o.text.empty()) o.text = render_records(records);
    o.text += "status: " + std::string(to_string(o.report.status)) + "\n";
    return o;
}

struct BarkerArgs {
    std::optional<std::size_t> n;
    std::optional<std::size_t> odd_scan;
    std::optional<std::size_t> threads;
};

inline Outcome cmd_barker(const BarkerArgs& args, std::ostream* timing = nullptr) {
    json inputs{{"n", args.n ? json(*args.n) : json(nullptr)},
                {"odd_scan", args.odd_scan ? json(*args.odd_scan) : json(nullptr)}};
    auto fail = [&](const std::string& m) { return detail::error_outcome("barker", inputs, m); };
    if (args.n.has_value() == args.odd_scan.has_value()) {
        return fail("exactly one of --n or --odd-scan is required");
    }
    if (args.threads && *args.threads == 0) return fail("--threads must be positive");
    const std::size_t threads = args.threads.value_or(default_thread_count());

    Outcome o;
    o.report.command = "barker";
    o.report.inputs = inputs;
    o.report.status = Status::ok;
    std::ostringstream os;
    try {
        if (args.n) {
            const BarkerSearchResult result = barker_search(*args.n, threads);
            o.report.verdicts = result;
            json profiles = json::array();
            for (const auto& x : result.sequences) {
                profiles.push_back(x.size() >= 3 ? json(eq_k_profile(x)) : json(nullptr));
            }
            o.report.verdicts["eq_k_profiles"] = profiles;
            os << "n = " << result.n << ": " << result.count() << " Barker sequence(s)\n";
            for (const auto& x : result.sequences) {
                os << to_literal(x);
                if (x.size() >= 3) os << "  eq(k) holds for k in {" << detail::join(eq_k_profile(x)) << "}";
                os << "\n";
            }
            if (timing) {
                *timing << "elapsed: " << std::chrono::duration<double>(result.elapsed).count()
                        << " s\n";
            }
        } else {
            const auto started = std::chrono::steady_clock::now();
            const auto scan = odd_nonexistence_scan(*args.odd_scan, threads);
            const bool found = has_odd_barker(scan);
            o.report.verdicts = json{{"scan", scan}, {"odd_barker_found", found}};
            os << "n\tcount\n";
            for (const auto& e : scan) os << e.n << '\t' << e.count << '\n';
            if (found) {
                os << "NOTE: a nonzero count above is an odd-length Barker sequence longer than 13;"
                      " this contradicts the known nonexistence result and deserves scrutiny\n";
            }
            if (timing) {
                *timing << "elapsed: "
                        << std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                               .count()
                        << " s\n";
            }
        }
    } catch (const ValidationError& e) {
        return fail(e.what());
    } catch (const CapacityError& e) {
        return fail(e.what());
    }
    os << "status: " << to_string(o.report.status) << "\n";
    o.text = os.str();
    return o;
}

/// `rle encode <literal>` / `rle decode <rle>`; prints the converted text.
inline Outcome cmd_rle(const std::string& mode, const std::optional<std::string>& input) {
    json inputs{{"mode", mode}, {"input", input ? json(*input) : json(nullptr)}};
    auto fail = [&](const std::string& m) { return detail::error_outcome("rle", inputs, m); };
    if (!input || input->empty()) return fail("no input given");
    Outcome o;
    o.report.command = "rle";
    o.report.inputs = inputs;
    try {
        if (mode == "encode") {
            o.text = to_text(rle_encode(parse_literal(*input)));
        } else if (mode == "decode") {
            o.text = to_literal(rle_decode(parse_rle(*input, Sign::plus)));
        } else {
            return fail("mode must be 'encode' or 'decode'");
        }
    } catch (const ValidationError& e) {
        return fail(e.what());
    }
    o.report.verdicts = json{{"output", o.text}};
    o.report.status = Status::ok;
    o.text += "\n";
    return o;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary-sequence toolkit: equation (k) audits, counterexample search, Barker search",
                 "turyn"};
    app.require_subcommand(1);
    bool as_json = false;

    auto* verify = app.add_subcommand("verify", "Audit the four Theorem 1 claims on a sequence");
    VerifyArgs va;
    auto* rle_opt = verify->add_option("--rle", va.rle, "Run-length encoding, e.g. +3,3,6,3,2,2");
    verify->add_option("--seq", va.seq, "Sequence literal, e.g. +++---")->excludes(rle_opt);
    verify->add_option("--t", va.t, "Equations (1)..(t) are assumed")->required();
    verify->add_option("--pad", va.pad, "Pad with +1 up to this length");
    verify->add_flag("--json", as_json, "Emit the structured report");

    auto* falsify = app.add_subcommand("falsify", "Produce counterexamples to claim (iv)");
    FalsifyArgs fa;
    falsify->add_flag("--catalog", fa.catalog, "Emit and re-audit the four published records");
    falsify->add_flag("--family", fa.family, "Build the (p,p,2p,p,p-1,p-1) instance for --p");
    falsify->add_option("--p", fa.p, "Leading run length");
    falsify->add_option("--t", fa.t, "Number of equations assumed");
    falsify->add_option("--max-results", fa.max_results, "Keep at most this many records");
    falsify->add_option("--threads", fa.threads, "Worker threads (default: $TURYN_THREADS)");
    falsify->add_option("--out", fa.out, "Write the records as a tab-separated catalog");
    falsify->add_flag("--json", as_json, "Emit the structured report");

    auto* barker = app.add_subcommand("barker", "Exhaustive Barker sequence search");
    BarkerArgs ba;
    bool timing = false;
    auto* n_opt = barker->add_option("--n", ba.n, "List all Barker sequences of this length");
    barker->add_option("--odd-scan", ba.odd_scan, "Count Barker sequences for odd 13 < n <= N")
        ->excludes(n_opt);
    barker->add_option("--threads", ba.threads, "Worker threads (default: $TURYN_THREADS)");
    barker->add_flag("--timing", timing, "Print elapsed time to stderr");
    barker->add_flag("--json", as_json, "Emit the structured report");

    auto* rle = app.add_subcommand("rle", "Convert between sequence literals and run-length encodings");
    std::string mode;
    std::optional<std::string> rle_input;
    rle->add_option("mode", mode, "encode | decode")->required()->check(CLI::IsMember({"encode", "decode"}));
    rle->add_option("input", rle_input, "Text to convert");
    rle->add_flag("--json", as_json, "Emit the structured report");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Outcome o;
    if (verify->parsed()) {
        o = cmd_verify(va);
    } else if (falsify->parsed()) {
        o = cmd_falsify(fa);
    } else if (barker->parsed()) {
        o = cmd_barker(ba, timing ? &err : nullptr);
    } else {
        o = cmd_rle(mode, rle_input);
    }

    if (as_json) {
        out << json(o.report).dump(2) << "\n";
    } else if (o.report.status == Status::error) {
        err << o.text;
    } else {
        out << o.text;
    }
    return exit_code(o.report.status);
}

}  // namespace turyn::cli
