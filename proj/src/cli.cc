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

#include "singleton_lab/cli.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "singleton_lab/bounds.h"
#include "singleton_lab/error.h"
#include "singleton_lab/gf.h"
#include "singleton_lab/propagate.h"
#include "singleton_lab/stabilizer.h"
#include "singleton_lab/verify.h"

namespace singleton_lab::cli {

namespace {

using bounds::CodeParams;
using bounds::Rational;
using nlohmann::json;

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(text);
    while (std::getline(in, field, sep)) out.push_back(field);
    return out;
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

int parse_int(const std::string &text, const std::string &what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(trim(text), &used);
        if (used == trim(text).size()) return v;
    } catch (const std::exception &) {
    }
    fail(Errc::ParseError, "expected an integer for " + what + ", got '" + text + "'");
}

std::optional<bool> parse_pure(const std::string &text) {
    const auto t = trim(text);
    if (t == "true" || t == "pure" || t == "1") return true;
    if (t == "false" || t == "impure" || t == "0") return false;
    if (t == "unknown" || t.empty() || t == "null") return std::nullopt;
    fail(Errc::ParseError, "expected true|false|unknown, got '" + text + "'");
}

// "n,k,d,c,q" with an optional sixth purity field.
CodeParams parse_params(const std::string &text) {
    const auto f = split(text, ',');
    if (f.size() != 5 && f.size() != 6) fail(Errc::ParseError, "expected n,k,d,c,q[,pure], got '" + text + "'");
    CodeParams p;
    p.n = parse_int(f[0], "n");
    p.k = bounds::parse_rational(trim(f[1]));
    p.d = parse_int(f[2], "d");
    p.c = bounds::parse_rational(trim(f[3]));
    p.q = parse_int(f[4], "q");
    if (f.size() == 6) p.pure = parse_pure(f[5]);
    return p;
}

json params_json(const CodeParams &p) {
    return {{"n", p.n},
            {"k", bounds::to_string(p.k)},
            {"d", p.d},
            {"c", bounds::to_string(p.c)},
            {"q", p.q},
            {"pure", p.pure ? json(*p.pure) : json(nullptr)}};
}

CodeParams params_from_json(const json &j) {
    const json &p = j.contains("params") ? j.at("params") : j;
    auto rational = [](const json &v) {
        return v.is_string() ? bounds::parse_rational(v.get<std::string>()) : Rational(v.get<std::int64_t>());
    };
    CodeParams out;
    out.n = p.at("n").get<int>();
    out.k = rational(p.at("k"));
    out.d = p.at("d").get<int>();
    out.c = rational(p.at("c"));
    out.q = p.at("q").get<int>();
    if (p.contains("pure") && !p.at("pure").is_null()) out.pure = p.at("pure").get<bool>();
    return out;
}

std::string join_names(const std::vector<bounds::BoundId> &ids, const char *sep) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? sep : "") + std::string(bounds::bound_name(ids[i]));
    return out;
}

std::vector<bounds::BoundId> tight_bounds(const bounds::BoundVerdict &v) {
    std::vector<bounds::BoundId> out;
    for (const auto &b : v.bounds) {
        if (b.applicable && b.tight) out.push_back(b.id);
    }
    return out;
}

json verdict_json(const CodeParams &p, const bounds::BoundVerdict &v) {
    json bounds_j = json::array();
    for (const auto &b : v.bounds) {
        json e{{"name", bounds::bound_name(b.id)}, {"applicable", b.applicable}};
        if (b.applicable) {
            e["lhs"] = bounds::to_string(b.lhs);
            e["rhs"] = bounds::to_string(b.rhs);
            e["satisfied"] = b.satisfied;
            e["tight"] = b.tight;
        }
        bounds_j.push_back(e);
    }
    json violating = json::array();
    for (auto id : v.violating) violating.push_back(bounds::bound_name(id));
    json out{{"params", params_json(p)},
             {"delta", bounds::to_string(p.delta())},
             {"admissible", v.admissible},
             {"eaqmds", v.eaqmds},
             {"violating", violating},
             {"bounds", bounds_j}};
    if (const auto fact = propagate::matching_nonexistence_fact(p)) out["known_nonexistent"] = fact->params.source;
    return out;
}

void write_verdict_human(const CodeParams &p, const bounds::BoundVerdict &v, std::ostream &out) {
    out << p.str() << (p.pure ? (*p.pure ? " pure" : " impure") : "") << " delta=" << bounds::to_string(p.delta())
        << " : " << (v.admissible ? "admissible" : "VIOLATION") << (v.eaqmds ? " eaqmds" : "") << "\n";
    for (const auto &b : v.bounds) {
        out << "  " << std::left << std::setw(15) << bounds::bound_name(b.id) << std::right;
        if (!b.applicable) {
            out << "not applicable\n";
            continue;
        }
        out << "k=" << bounds::to_string(b.lhs) << (b.satisfied ? " <= " : " > ") << bounds::to_string(b.rhs)
            << (b.tight ? "  tight" : "") << (b.satisfied ? "" : "  violated") << "\n";
    }
    if (const auto fact = propagate::matching_nonexistence_fact(p)) {
        out << "  note: admissible is necessary only; no such code exists (" << fact->params.source << ")\n";
    }
}

constexpr const char *kCsvHeader = "n,k,d,c,q,pure,delta,admissible,eaqmds,violating,tight";

void write_verdict_csv(const CodeParams &p, const bounds::BoundVerdict &v, std::ostream &out) {
    out << p.n << "," << bounds::to_string(p.k) << "," << p.d << "," << bounds::to_string(p.c) << "," << p.q << ","
        << (p.pure ? (*p.pure ? "true" : "false") : "unknown") << "," << bounds::to_string(p.delta()) << ","
        << (v.admissible ? "true" : "false") << "," << (v.eaqmds ? "true" : "false") << ","
        << join_names(v.violating, ";") << "," << join_names(tight_bounds(v), ";") << "\n";
}

// Batch lines are either `n,k,d,c,q[,pure]` tuples or JSON objects as
// written by `check --format json`.
std::vector<CodeParams> read_batch(std::istream &in) {
    std::vector<CodeParams> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t[0] == '#' || t.rfind("n,k,d", 0) == 0) continue;
        try {
            out.push_back(t[0] == '{' ? params_from_json(json::parse(t)) : parse_params(t));
        } catch (const json::exception &e) {
            fail(Errc::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

int cmd_check(const std::string &params_text, bool pure, const std::string &batch, const std::string &format,
              std::ostream &out) {
    std::vector<CodeParams> all;
    if (!params_text.empty()) {
        auto p = parse_params(params_text);
        if (pure) p.pure = true;
        all.push_back(p);
    }
    if (!batch.empty()) {
        std::ifstream in(batch);
        if (!in) fail(Errc::InvalidArgument, "cannot open batch file '" + batch + "'");
        for (auto &p : read_batch(in)) {
            if (pure && !p.pure) p.pure = true;
            all.push_back(p);
        }
    }
    if (all.empty()) fail(Errc::InvalidArgument, "check needs --params or --batch");

    if (format == "csv") out << kCsvHeader << "\n";
    int status = kExitOk;
    for (const auto &p : all) {
        const auto v = bounds::classify(p);
        if (!v.admissible) status = kExitViolation;
        if (format == "json") {
            out << verdict_json(p, v).dump() << "\n";
        } else if (format == "csv") {
            write_verdict_csv(p, v, out);
        } else {
            write_verdict_human(p, v, out);
        }
    }
    return status;
}

int cmd_region(const std::string &delta_text, const std::string &svg, std::ostream &out) {
    const auto region = bounds::rate_region(bounds::parse_rational(delta_text));
    bounds::write_region_csv(region, out);
    if (!svg.empty()) {
        std::ofstream file(svg);
        if (!file) fail(Errc::InvalidArgument, "cannot write '" + svg + "'");
        bounds::write_region_svg(region, file);
    }
    return kExitOk;
}

void write_record_line(const propagate::CodeRecord &r, const std::string &format, std::ostream &out) {
    if (format == "json") {
        json trail = json::array();
        for (const auto &s : r.trail) trail.push_back({{"rule", s.rule}, {"parent", params_json(s.parent)}});
        out << json{{"params", params_json(r.params)},
                    {"existence", propagate::existence_name(r.existence)},
                    {"source", r.params.source},
                    {"trail", trail}}
                   .dump()
            << "\n";
        return;
    }
    propagate::write_record(r, out);
    for (const auto &s : r.trail) out << " <= " << s.rule << " " << s.parent.str();
    out << "\n";
}

int cmd_propagate(const std::string &db, std::size_t max_steps, bool corrupt, const std::string &format,
                  std::ostream &out, std::ostream &err) {
    std::ifstream in(db);
    if (!in) fail(Errc::InvalidArgument, "cannot open database '" + db + "'");
    const auto records = propagate::read_database(in);
    try {
        const auto result = propagate::closure(records, {max_steps, corrupt});
        for (const auto &r : result.records) write_record_line(r, format, out);
        if (format != "json") {
            out << "# " << result.records.size() << " records, " << result.steps << " steps"
                << (result.truncated ? ", truncated at the step cap" : ", fixed point") << "\n";
        }
        return kExitOk;
    } catch (const propagate::SoundnessViolation &e) {
        err << "soundness violation: " << e.what() << "\n  record: ";
        write_record_line(e.record(), "human", err);
        return kExitViolation;
    }
}

int cmd_verify_code(const std::string &name, std::size_t d, std::optional<int> theorem5_c, bool list,
                    std::ostream &out, std::ostream &err) {
    if (list) {
        for (const auto &e : stabilizer::corpus()) {
            out << e.name << " [[" << e.code.n() << "," << e.code.k() << "," << e.distance << "]]_" << e.code.q()
                << (e.pure ? " pure" : " impure") << "\n";
        }
        return kExitOk;
    }
    if (name.empty()) fail(Errc::InvalidArgument, "verify-code needs --name or --list");
    if (d < 1) fail(Errc::InvalidArgument, "verify-code needs --d >= 1");
    const auto &entry = stabilizer::corpus_entry(name);
    const auto &code = entry.code;
    out << "code " << name << " [[" << code.n() << "," << code.k() << "]]_" << code.q() << " d=" << d << "\n";

    const auto kl = stabilizer::knill_laflamme_check(code, d);
    out << "knill-laflamme distance>=" << d << ": " << (kl.distance_at_least ? "yes" : "no")
        << " pure: " << (kl.pure ? "yes" : "no") << " words=" << kl.words_checked;
    if (kl.witness) out << " witness=" << kl.witness->str();
    out << "\n";

    const auto state = stabilizer::purified_code_state(code);
    const auto parties = stabilizer::physical_labels(code.n());
    int status = kExitOk;
    if (d <= code.n() + 1) {
        const auto dec = verify::check_decoupling(state, stabilizer::kReferenceLabel, parties, d);
        out << std::setprecision(10) << "decoupling: " << (dec.correctable ? "correctable" : "not correctable")
            << " partitions=" << dec.partitions.size() << " max I(R:X_J)=" << dec.max_mutual_information
            << " S(R)=" << dec.s_reference << " sigma_bar=" << dec.sigma_bar << " sigma_bar_bar=" << dec.sigma_bar_bar
            << "\n";
        if (dec.correctable != kl.distance_at_least) {
            err << "oracles disagree for " << name << " at d=" << d << "\n";
            status = kExitViolation;
        }
        if (dec.correctable) {
            const auto es = verify::check_entropic_singleton(state, stabilizer::kReferenceLabel, parties, d);
            out << "entropic singleton: S(R)=" << es.s_reference << " <= " << es.rhs << " slack=" << es.slack
                << (es.tight ? " tight" : "") << (es.holds ? "" : " VIOLATED") << "\n";
            if (!es.holds) status = kExitViolation;
        }
    }
    if (!kl.distance_at_least) status = kExitViolation;

    if (theorem5_c) {
        try {
            const auto w = propagate::theorem5_execute(code, static_cast<int>(d), *theorem5_c);
            const auto v = bounds::classify(w.params);
            out << "theorem5 witness " << w.params.str() << " bin_distance=" << w.bin_distance
                << " max I(R:X_J)=" << w.max_mutual_information << " partitions=" << w.partitions_checked
                << (w.vacuous ? " vacuous" : "") << " : " << (v.admissible ? "admissible" : "VIOLATION")
                << (v.eaqmds ? " eaqmds" : "") << "\n";
            if (!v.admissible) status = kExitViolation;
        } catch (const Error &e) {
            if (e.code() == Errc::InvalidArgument || e.code() == Errc::CTooLarge) throw;
            err << "theorem5 failed: " << errc_name(e.code()) << ": " << e.what() << "\n";
            status = kExitViolation;
        }
    }
    return status;
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv(kSeedEnv)) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            fail(Errc::ParseError, std::string(kSeedEnv) + " is not an unsigned integer");
        }
    }
    return 0;
}

int cmd_fuzz(const std::string &lemma, std::uint64_t trials, std::optional<std::uint64_t> seed,
             Eigen::Index budget, std::ostream &out) {
    verify::Lemma which = verify::Lemma::Monotone;
    if (lemma == "2") which = verify::Lemma::ConditionalMonotone;
    if (lemma == "ssa") which = verify::Lemma::StrongSubadditivity;
    verify::FuzzOptions options;
    options.trials = trials;
    options.dimension_budget = budget;
    options.master_seed = seed ? *seed : default_seed();
    const auto report = verify::fuzz(which, options);
    out << "seed=" << options.master_seed << "\n";
    verify::write_fuzz_report(report, out);
    return report.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_construct_rs(unsigned q, std::size_t n, std::size_t k, std::ostream &out) {
    const auto [p, m] = verify::prime_power(q);
    const auto field = gf::make_field(p, m);
    const auto code = gf::reed_solomon(field, n, k);
    out << "RS[" << n << "," << k << "] over GF(" << q << ") modulus";
    for (auto c : field->modulus()) out << " " << c;
    out << "\n";
    for (const auto &row : code.generator()) {
        out << "G";
        for (auto x : row) out << " " << x;
        out << "\n";
    }
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < k && words <= gf::kMinDistanceBudget; ++i) words *= q;
    if (words > gf::kMinDistanceBudget) {
        out << "min_distance skipped (q^k exceeds enumeration budget); designed " << n - k + 1 << "\n";
        return kExitOk;
    }
    const auto dist = gf::min_distance(code);
    out << "min_distance " << dist << " designed " << n - k + 1 << (dist == n - k + 1 ? " mds" : " NOT MDS") << "\n";
    return dist == n - k + 1 ? kExitOk : kExitViolation;
}

int cmd_simulate(const std::string &protocol, unsigned q, std::size_t n, std::size_t d, std::ostream &out) {
    const auto summary = protocol == "densecoding" ? verify::sweep_densecoding_mds(q, n, d)
                                                   : verify::simulate_mds_point(q, n, d);
    verify::write_summary(protocol, summary, out);
    verify::write_transcript(summary.sample, out);
    return summary.failures == 0 && summary.in_region ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Singleton-type bounds for entanglement-assisted quantum codes", "singleton-lab"};
    app.require_subcommand(1);

    std::string format = "human";
    const auto formats = CLI::IsMember({"human", "json", "csv"});

    auto *check = app.add_subcommand("check", "Classify code parameters against every bound");
    std::string params_text, batch;
    bool pure = false;
    check->add_option("--params", params_text, "n,k,d,c,q with k and c as integers or p/q");
    check->add_flag("--pure", pure, "Flag the code as pure");
    check->add_option("--batch", batch, "File of n,k,d,c,q[,pure] lines or JSON lines");
    check->add_option("--format", format)->check(formats);

    auto *region = app.add_subcommand("region", "Print the rate region for delta = (d-1)/n as CSV");
    std::string delta_text, svg;
    region->add_option("--delta", delta_text, "p/q")->required();
    region->add_option("--svg", svg, "Also write an SVG plot");

    auto *prop = app.add_subcommand("propagate", "Close a code database under the propagation rules");
    std::string db;
    std::size_t max_steps = 16;
    bool corrupt = false;
    prop->add_option("--db", db)->required();
    prop->add_option("--max-steps", max_steps);
    prop->add_flag("--corrupt", corrupt, "Enable the unsound shortening rule");
    prop->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    auto *vc = app.add_subcommand("verify-code", "Knill-Laflamme and decoupling checks on a corpus code");
    std::string name;
    std::size_t d = 0;
    std::optional<int> theorem5_c;
    bool list = false;
    vc->add_option("--name", name);
    vc->add_option("--d", d);
    vc->add_option("--theorem5", theorem5_c, "Hand the last c systems to the receiver and certify");
    vc->add_flag("--list", list);

    auto *fz = app.add_subcommand("fuzz", "Random-state campaign for the block-entropy inequalities");
    std::string lemma = "1";
    std::uint64_t trials = 1000;
    std::optional<std::uint64_t> seed;
    Eigen::Index budget = 512;
    fz->add_option("--lemma", lemma)->check(CLI::IsMember({"1", "2", "ssa"}));
    fz->add_option("--trials", trials);
    fz->add_option("--seed", seed);
    fz->add_option("--budget", budget, "Bound on the total dimension including the ancilla");

    auto *construct = app.add_subcommand("construct", "Build explicit codes");
    construct->require_subcommand(1);
    auto *rs = construct->add_subcommand("rs", "Reed-Solomon code");
    unsigned rs_q = 0;
    std::size_t rs_n = 0, rs_k = 0;
    rs->add_option("--q", rs_q)->required();
    rs->add_option("--n", rs_n)->required();
    rs->add_option("--k", rs_k)->required();

    auto *sim = app.add_subcommand("simulate", "Protocol bookkeeping simulations");
    std::string protocol;
    unsigned sim_q = 0;
    std::size_t sim_n = 0, sim_d = 0;
    sim->add_option("protocol", protocol)->required()->check(CLI::IsMember({"densecoding", "mdspoint"}));
    sim->add_option("--q", sim_q)->required();
    sim->add_option("--n", sim_n)->required();
    sim->add_option("--d", sim_d)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(params_text, pure, batch, format, out);
        if (region->parsed()) return cmd_region(delta_text, svg, out);
        if (prop->parsed()) return cmd_propagate(db, max_steps, corrupt, format, out, err);
        if (vc->parsed()) return cmd_verify_code(name, d, theorem5_c, list, out, err);
        if (fz->parsed()) return cmd_fuzz(lemma, trials, seed, budget, out);
        if (rs->parsed()) return cmd_construct_rs(rs_q, rs_n, rs_k, out);
        if (sim->parsed()) return cmd_simulate(protocol, sim_q, sim_n, sim_d, out);
    } catch (const Error &e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace singleton_lab::cli
