// Copyright 2026 The Singleton Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "singleton_lab/propagate.h"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "singleton_lab/subsets.h"

namespace singleton_lab::propagate {

namespace {

void require_pure_unassisted(const CodeParams &p, const char *rule) {
    if (!p.pure.value_or(false)) fail(Errc::NotPure, std::string(rule) + " needs a pure code, got " + p.str());
    if (p.c != Rational(0)) fail(Errc::NotPure, std::string(rule) + " needs an unassisted code, got " + p.str());
}

CodeParams derived(CodeParams p, std::optional<bool> pure) {
    p.pure = pure;
    p.source = "derived";
    return p;
}

std::string pure_token(const std::optional<bool> &pure) {
    if (!pure) return "unknown";
    return *pure ? "true" : "false";
}

}  // namespace

std::string_view existence_name(Existence e) {
    switch (e) {
        case Existence::Constructed: return "constructed";
        case Existence::Cited: return "cited";
        case Existence::Derived: return "derived";
        case Existence::Nonexistent: return "nonexistent";
    }
    return "?";
}

CodeParams rule_trade_k_for_c(const CodeParams &p) {
    if (p.k < 1) fail(Errc::KTooSmall, "trading a qudit for an ebit needs k >= 1, got " + p.str());
    CodeParams out = p;
    out.k -= 1;
    out.c -= 1;
    return derived(out, std::nullopt);
}

CodeParams rule_pure_shorten(const CodeParams &p, int c) {
    require_pure_unassisted(p, "pure-shorten");
    if (c < 0) fail(Errc::InvalidArgument, "negative ebit count");
    if (c >= p.d) fail(Errc::CTooLarge, "pure-shorten needs c < d, got c=" + std::to_string(c) + " for " + p.str());
    if (p.n - c < 1) fail(Errc::CTooLarge, "pure-shorten leaves no transmitted qudits");
    CodeParams out = p;
    out.n -= c;
    out.c = c;
    return derived(out, std::nullopt);
}

CodeParams rule_rains_lengthen(const CodeParams &p) {
    require_pure_unassisted(p, "rains-lengthen");
    if (p.d < 2) fail(Errc::DTooSmall, "rains-lengthen needs d >= 2, got " + p.str());
    if (p.n < 2) fail(Errc::InvalidArgument, "rains-lengthen needs n >= 2, got " + p.str());
    CodeParams out = p;
    out.n -= 1;
    out.k += 1;
    out.d -= 1;
    return derived(out, true);
}

CodeParams rule_corrupted_shorten(const CodeParams &p, int c) {
    CodeParams out = rule_pure_shorten(p, c);
    out.k += c;
    return out;
}

CodeParams apply_rule(const std::string &rule, const CodeParams &p) {
    const auto colon = rule.find(':');
    const std::string name = rule.substr(0, colon);
    const int arg = colon == std::string::npos ? 0 : std::stoi(rule.substr(colon + 1));
    if (name == "trade-k-for-c") return rule_trade_k_for_c(p);
    if (name == "pure-shorten") return rule_pure_shorten(p, arg);
    if (name == "rains-lengthen") return rule_rains_lengthen(p);
    if (name == "corrupted-shorten") return rule_corrupted_shorten(p, arg);
    fail(Errc::InvalidArgument, "unknown rule '" + rule + "'");
}

ClosureResult closure(const std::vector<CodeRecord> &db, const ClosureOptions &options) {
    ClosureResult result;
    using Key = decltype(CodeParams{}.key());
    std::map<Key, std::size_t> seen;
    std::deque<std::size_t> frontier;

    for (const auto &rec : db) {
        rec.params.validate();
        result.records.push_back(rec);
        if (rec.existence == Existence::Nonexistent) continue;
        if (seen.emplace(rec.params.key(), result.records.size() - 1).second) {
            frontier.push_back(result.records.size() - 1);
        }
    }

    auto emit = [&](std::size_t parent_index, const std::string &rule, CodeParams child,
                    std::deque<std::size_t> &next) {
        const CodeRecord &parent = result.records[parent_index];
        CodeRecord rec{std::move(child), Existence::Derived, parent.trail};
        rec.trail.push_back({rule, parent.params});
        bool admissible = false;
        std::string reason;
        try {
            const auto verdict = bounds::classify(rec.params);
            admissible = verdict.admissible;
            for (auto id : verdict.violating) reason += std::string(bounds::bound_name(id)) + " ";
        } catch (const Error &e) {
            reason = e.what();
        }
        if (!admissible) {
            std::string trail;
            for (const auto &step : rec.trail) trail += " <- " + step.rule + " " + step.parent.str();
            throw SoundnessViolation(rec, "derived " + rec.params.str() + " violates " + reason + "via" + trail);
        }
        if (seen.emplace(rec.params.key(), result.records.size()).second) {
            result.records.push_back(std::move(rec));
            next.push_back(result.records.size() - 1);
        }
    };

    while (!frontier.empty() && result.steps < options.max_steps) {
        std::deque<std::size_t> next;
        for (std::size_t idx : frontier) {
            const CodeParams p = result.records[idx].params;
            if (p.k >= 1) emit(idx, "trade-k-for-c", rule_trade_k_for_c(p), next);
            const bool pure_unassisted = p.pure.value_or(false) && p.c == Rational(0);
            if (pure_unassisted && p.d >= 2 && p.n >= 2) emit(idx, "rains-lengthen", rule_rains_lengthen(p), next);
            if (pure_unassisted) {
                for (int c = 1; c < p.d && p.n - c >= 1; ++c) {
                    emit(idx, "pure-shorten:" + std::to_string(c), rule_pure_shorten(p, c), next);
                    if (options.corrupted_rule) {
                        emit(idx, "corrupted-shorten:" + std::to_string(c), rule_corrupted_shorten(p, c), next);
                    }
                }
            }
        }
        frontier = std::move(next);
        ++result.steps;
    }
    result.truncated = !frontier.empty();

    std::stable_sort(result.records.begin(), result.records.end(), [](const CodeRecord &a, const CodeRecord &b) {
        return std::make_tuple(a.params.key(), static_cast<int>(a.existence)) <
               std::make_tuple(b.params.key(), static_cast<int>(b.existence));
    });
    return result;
}

std::vector<CodeRecord> read_database(std::istream &in) {
    std::vector<CodeRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string n, k, d, c, q, pure, existence;
        if (!(fields >> n)) continue;
        if (!(fields >> k >> d >> c >> q >> pure >> existence)) {
            fail(Errc::ParseError, "database line " + std::to_string(lineno) + " has fewer than 7 fields");
        }
        CodeRecord rec;
        try {
            rec.params.n = static_cast<int>(std::stol(n));
            rec.params.k = bounds::parse_rational(k);
            rec.params.d = static_cast<int>(std::stol(d));
            rec.params.c = bounds::parse_rational(c);
            rec.params.q = static_cast<int>(std::stol(q));
        } catch (const std::logic_error &) {
            fail(Errc::ParseError, "database line " + std::to_string(lineno) + " has a non-numeric field");
        }
        if (pure == "true") {
            rec.params.pure = true;
        } else if (pure == "false") {
            rec.params.pure = false;
        } else if (pure != "unknown") {
            fail(Errc::ParseError, "database line " + std::to_string(lineno) + ": purity must be true|false|unknown");
        }
        static const std::pair<const char *, Existence> kinds[] = {{"constructed", Existence::Constructed},
                                                                  {"cited", Existence::Cited},
                                                                  {"derived", Existence::Derived},
                                                                  {"nonexistent", Existence::Nonexistent}};
        auto it = std::find_if(std::begin(kinds), std::end(kinds), [&](const auto &kv) { return existence == kv.first; });
        if (it == std::end(kinds)) {
            fail(Errc::ParseError, "database line " + std::to_string(lineno) + ": unknown existence '" + existence + "'");
        }
        rec.existence = it->second;
        std::getline(fields >> std::ws, rec.params.source);
        try {
            rec.params.validate();
        } catch (const Error &e) {
            fail(Errc::ParseError, "database line " + std::to_string(lineno) + ": " + e.what());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

void write_record(const CodeRecord &record, std::ostream &out) {
    const auto &p = record.params;
    out << p.n << " " << bounds::to_string(p.k) << " " << p.d << " " << bounds::to_string(p.c) << " " << p.q << " "
        << pure_token(p.pure) << " " << existence_name(record.existence) << " " << (p.source.empty() ? "-" : p.source);
}

const std::vector<CodeRecord> &nonexistence_facts() {
    static const std::vector<CodeRecord> facts = [] {
        std::vector<CodeRecord> f;
        f.push_back({{4, 0, 3, 0, 2, std::nullopt, "no absolutely maximally entangled state of 4 qubits"},
                     Existence::Nonexistent, {}});
        f.push_back({{12, 0, 7, 0, 3, std::nullopt, "no absolutely maximally entangled state of 12 qutrits"},
                     Existence::Nonexistent, {}});
        return f;
    }();
    return facts;
}

std::optional<CodeRecord> matching_nonexistence_fact(const CodeParams &p) {
    for (const auto &f : nonexistence_facts()) {
        if (f.params.same_parameters(p)) return f;
    }
    return std::nullopt;
}

Theorem5Witness theorem5_execute(const stabilizer::StabilizerCode &code, int d, int c) {
    const int n = static_cast<int>(code.n());
    if (c < 0) fail(Errc::InvalidArgument, "negative ebit count");
    if (c >= d) fail(Errc::CTooLarge, "construction needs c < d, got c=" + std::to_string(c) + ", d=" + std::to_string(d));
    if (n - c < 1) fail(Errc::CTooLarge, "construction leaves no transmitted qudits");

    qstate::TensorState state = stabilizer::purified_code_state(code);
    Theorem5Witness w{state, {}, {}, {}, 0, 0, {}, 0, false};
    for (int i = 1; i <= n - c; ++i) w.transmitted.push_back("X" + std::to_string(i));
    for (int i = 1; i <= c; ++i) {
        const std::string label = "Bin" + std::to_string(i);
        w.state = w.state.relabeled("X" + std::to_string(n - c + i), label);
        w.entangled.push_back(label);
    }
    w.params = {n - c, static_cast<std::int64_t>(code.k()), d, c, static_cast<int>(code.q()), std::nullopt,
                "pure-shorten of a stabilizer code"};

    if (c > 0) {
        const auto bin = qstate::partial_trace(w.state, w.entangled);
        w.bin_distance = qstate::trace_distance(bin, qstate::DensityMatrix::maximally_mixed(bin.systems()));
        if (w.bin_distance > kCertificationTolerance) {
            fail(Errc::NotMaximallyMixedOnBin,
                 "receiver's share is not maximally mixed (trace distance " + std::to_string(w.bin_distance) + ")");
        }
    }

    const std::size_t erasures = static_cast<std::size_t>(d - 1);
    if (erasures > w.transmitted.size()) {
        w.vacuous = true;
        return w;
    }
    const qstate::Labels reference{stabilizer::kReferenceLabel};
    for_each_subset(w.transmitted.size(), erasures, [&](const std::vector<std::size_t> &subset) {
        qstate::Labels block;
        for (auto i : subset) block.push_back(w.transmitted[i]);
        const double mi = block.empty() ? 0.0 : qstate::mutual_information(w.state, reference, block);
        ++w.partitions_checked;
        if (w.partitions_checked == 1 || mi > w.max_mutual_information) {
            w.max_mutual_information = mi;
            w.worst_subset = subset;
        }
    });
    if (w.max_mutual_information > kCertificationTolerance) {
        throw DecouplingFailed(w.worst_subset, w.max_mutual_information,
                               "reference is correlated with an erasure pattern (I = " +
                                   std::to_string(w.max_mutual_information) + " bits)");
    }
    return w;
}

}  // namespace singleton_lab::propagate
