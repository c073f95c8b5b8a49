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

#include "singleton_lab/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "singleton_lab/error.h"
#include "singleton_lab/subsets.h"

namespace singleton_lab::verify {

namespace {

void check_block_sizes(std::size_t n, std::size_t m, std::size_t mu) {
    if (!(1 <= mu && mu < m && m <= n)) {
        fail(Errc::BadBlockSizes, "need 1 <= mu < m <= n, got m=" + std::to_string(m) + ", mu=" + std::to_string(mu) +
                                      ", n=" + std::to_string(n));
    }
}

template <typename State>
LemmaCheck lemma1_impl(const State &state, const Labels &parties, std::size_t m, std::size_t mu) {
    check_block_sizes(parties.size(), m, mu);
    auto s = [](const State &st, const Labels &block) { return qstate::block_entropy(st, block); };
    LemmaCheck out;
    out.lhs = qstate::subset_mean(state, parties, m, s);
    out.rhs = static_cast<double>(m) / static_cast<double>(mu) * qstate::subset_mean(state, parties, mu, s);
    out.margin = out.rhs - out.lhs;
    return out;
}

std::vector<Eigen::Index> dims_of(const qstate::Systems &systems) {
    std::vector<Eigen::Index> out;
    for (const auto &s : systems) out.push_back(s.dim);
    return out;
}

// Random local dimensions in {2, 3} whose product leaves room for an ancilla.
qstate::Systems random_parties(std::mt19937_64 &rng, std::size_t count, Eigen::Index budget,
                               const std::string &prefix) {
    std::uniform_int_distribution<int> pick(2, 3);
    qstate::Systems systems;
    Eigen::Index product = 1;
    for (std::size_t i = 0; i < count; ++i) {
        Eigen::Index dim = pick(rng);
        if (product * dim * 2 > budget) dim = 2;
        product *= dim;
        systems.push_back({prefix + std::to_string(i + 1), dim});
    }
    return systems;
}

Eigen::Index random_ancilla(std::mt19937_64 &rng, Eigen::Index product, Eigen::Index budget) {
    const Eigen::Index cap = std::max<Eigen::Index>(1, std::min<Eigen::Index>(16, budget / product));
    std::uniform_int_distribution<Eigen::Index> pick(1, cap);
    return pick(rng);
}

Eigen::Index product_of(const qstate::Systems &systems) {
    Eigen::Index p = 1;
    for (const auto &s : systems) p *= s.dim;
    return p;
}

std::string join_indices(const std::vector<std::size_t> &v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
    return out + "}";
}

}  // namespace

LemmaCheck check_lemma1(const DensityMatrix &dm, const Labels &parties, std::size_t m, std::size_t mu) {
    return lemma1_impl(dm, parties, m, mu);
}

LemmaCheck check_lemma1(const TensorState &state, const Labels &parties, std::size_t m, std::size_t mu) {
    return lemma1_impl(state, parties, m, mu);
}

LemmaCheck check_lemma2(const DensityMatrix &dm, const Labels &parties, const Labels &given, std::size_t m,
                        std::size_t mu) {
    check_block_sizes(parties.size(), m, mu);
    qstate::detail::check_disjoint(parties, given);
    auto s = [&given](const DensityMatrix &st, const Labels &block) {
        return qstate::conditional_entropy(st, block, given);
    };
    LemmaCheck out;
    out.lhs = qstate::subset_mean(dm, parties, m, s);
    out.rhs = static_cast<double>(m) / static_cast<double>(mu) * qstate::subset_mean(dm, parties, mu, s);
    out.margin = out.rhs - out.lhs;
    return out;
}

std::string_view lemma_name(Lemma lemma) {
    switch (lemma) {
        case Lemma::Monotone: return "1";
        case Lemma::ConditionalMonotone: return "2";
        case Lemma::StrongSubadditivity: return "ssa";
    }
    return "?";
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::uint32_t words[2];
    seq.generate(std::begin(words), std::end(words));
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

FuzzReport fuzz(Lemma lemma, const FuzzOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    FuzzReport report;
    report.lemma = lemma;
    report.worst_margin = std::numeric_limits<double>::infinity();
    const Eigen::Index budget = std::max<Eigen::Index>(options.dimension_budget, 8);

    for (std::uint64_t t = 0; t < options.trials; ++t) {
        const std::uint64_t seed = trial_seed(options.master_seed, t);
        std::mt19937_64 rng(seed);
        double margin = std::numeric_limits<double>::infinity();
        qstate::Systems systems;

        if (lemma == Lemma::Monotone) {
            std::uniform_int_distribution<std::size_t> count(2, 4);
            systems = random_parties(rng, count(rng), budget, "X");
            const auto anc = random_ancilla(rng, product_of(systems), budget);
            const auto dm = qstate::random_density(systems, anc, rng());
            const Labels parties = dm.labels();
            for (std::size_t m = 2; m <= parties.size(); ++m) {
                for (std::size_t mu = 1; mu < m; ++mu) {
                    margin = std::min(margin, check_lemma1(dm, parties, m, mu).margin);
                    ++report.checks;
                }
            }
            systems.push_back({qstate::kAncillaLabel, anc});
        } else if (lemma == Lemma::ConditionalMonotone) {
            std::uniform_int_distribution<std::size_t> count(2, 3);
            systems = random_parties(rng, count(rng), budget / 2, "X");
            Labels parties;
            for (const auto &s : systems) parties.push_back(s.label);
            std::uniform_int_distribution<Eigen::Index> ydim(1, 4);
            Eigen::Index y = ydim(rng);
            while (product_of(systems) * y > budget) --y;
            systems.push_back({"Y", y});
            const auto anc = random_ancilla(rng, product_of(systems), budget);
            const auto dm = qstate::random_density(systems, anc, rng());
            for (std::size_t m = 2; m <= parties.size(); ++m) {
                for (std::size_t mu = 1; mu < m; ++mu) {
                    margin = std::min(margin, check_lemma2(dm, parties, {"Y"}, m, mu).margin);
                    ++report.checks;
                }
            }
            systems.push_back({qstate::kAncillaLabel, anc});
        } else {
            systems = random_parties(rng, 3, budget, "X");
            const auto anc = random_ancilla(rng, product_of(systems), budget);
            const auto dm = qstate::random_density(systems, anc, rng());
            auto s = [&](const Labels &block) { return qstate::block_entropy(dm, block); };
            margin = s({"X1", "X2"}) + s({"X2", "X3"}) - s({"X1", "X2", "X3"}) - s({"X2"});
            ++report.checks;
            systems.push_back({qstate::kAncillaLabel, anc});
        }

        ++report.trials;
        report.worst_margin = std::min(report.worst_margin, margin);
        if (margin < -kFuzzTolerance) report.violations.push_back({seed, dims_of(systems), margin});
    }
    if (report.trials == 0) report.worst_margin = 0;
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void write_fuzz_report(const FuzzReport &report, std::ostream &out) {
    out << "fuzz lemma=" << lemma_name(report.lemma) << " trials=" << report.trials << " checks=" << report.checks
        << " worst_margin=" << std::scientific << std::setprecision(6) << report.worst_margin << std::defaultfloat
        << " violations=" << report.violations.size() << " elapsed_s=" << std::fixed << std::setprecision(3)
        << report.elapsed_seconds << std::defaultfloat << "\n";
    for (const auto &v : report.violations) {
        out << "violation seed=" << v.seed << " dims=";
        for (std::size_t i = 0; i < v.dims.size(); ++i) out << (i ? "x" : "") << v.dims[i];
        out << " margin=" << std::scientific << v.margin << std::defaultfloat << "\n";
    }
}

DecouplingReport check_decoupling(const TensorState &state, const std::string &reference, const Labels &parties,
                                  std::size_t d, const Labels &retained) {
    Labels listed{reference};
    listed.insert(listed.end(), parties.begin(), parties.end());
    listed.insert(listed.end(), retained.begin(), retained.end());
    qstate::detail::resolve(state.systems(), listed);
    for (const auto &s : state.systems()) {
        if (std::find(listed.begin(), listed.end(), s.label) == listed.end()) {
            fail(Errc::StateNotPure, "subsystem '" + s.label + "' is not listed; the listed systems are not pure");
        }
    }
    const std::size_t n = parties.size();
    if (d < 1 || d > n + 1) fail(Errc::InvalidArgument, "distance must satisfy 1 <= d <= n+1");
    if (binomial(n, d - 1) > qstate::kSubsetBudget) fail(Errc::BudgetExceeded, "too many erasure patterns");

    DecouplingReport report;
    const Labels ref{reference};
    report.s_reference = qstate::block_entropy(state, ref);
    for_each_subset(n, d - 1, [&](const std::vector<std::size_t> &erased) {
        Labels j;
        for (auto i : erased) j.push_back(parties[i]);
        Labels kept;
        for (auto i : complement(n, erased)) kept.push_back(parties[i]);
        PartitionRecord rec;
        rec.erased = erased;
        rec.s_erased = qstate::block_entropy(state, j);
        rec.s_kept = qstate::block_entropy(state, kept);
        rec.s_reference_erased = qstate::block_entropy(state, qstate::detail::join(ref, j));
        rec.mutual_information = report.s_reference + rec.s_erased - rec.s_reference_erased;
        if (report.partitions.empty() || rec.mutual_information > report.max_mutual_information) {
            report.max_mutual_information = rec.mutual_information;
            report.worst = erased;
        }
        report.partitions.push_back(std::move(rec));
    });
    report.correctable = report.max_mutual_information <= kEqualityTolerance;
    if (d >= 2) report.sigma_bar = qstate::avg_block_entropy(state, parties, d - 1);
    if (n + 1 > d) report.sigma_bar_bar = qstate::avg_block_entropy(state, parties, n - d + 1);
    return report;
}

DecouplingReport check_decoupling(const DensityMatrix &dm, const std::string &reference, const Labels &parties,
                                  std::size_t d, const Labels &retained) {
    if (std::abs(qstate::purity(dm) - 1.0) > kEqualityTolerance) {
        fail(Errc::StateNotPure, "decoupling needs a globally pure state; purify with an explicit ancilla");
    }
    Eigen::SelfAdjointEigenSolver<DensityMatrix::Matrix> solver(dm.matrix());
    const Eigen::VectorXcd top = solver.eigenvectors().col(dm.dimension() - 1);
    return check_decoupling(TensorState::normalized(dm.systems(), top), reference, parties, d, retained);
}

EntropicSingletonReport check_entropic_singleton(const TensorState &state, const std::string &reference,
                                                 const Labels &parties, std::size_t d) {
    const auto dec = check_decoupling(state, reference, parties, d);
    if (!dec.correctable) {
        fail(Errc::NotCorrectable, "erasure pattern " + join_indices(dec.worst) + " leaks " +
                                       std::to_string(dec.max_mutual_information) + " bits to the reference");
    }
    const double n = static_cast<double>(parties.size());
    const double dd = static_cast<double>(d);
    EntropicSingletonReport r;
    r.s_reference = dec.s_reference;
    // A (d-1)-block is empty at d = 1; single systems give S(R) <= sum_i S(X_i).
    r.sigma_bar = d >= 2 ? dec.sigma_bar : qstate::avg_block_entropy(state, parties, 1);
    r.rhs = std::max(0.0, n - 2 * dd + 2) * r.sigma_bar;
    r.slack = r.rhs - r.s_reference;
    r.holds = r.slack >= -kEqualityTolerance;
    r.tight = std::abs(r.slack) <= kEqualityTolerance;
    const auto positions = qstate::detail::resolve(state.systems(), parties);
    const double log_q = positions.empty() ? 0.0 : std::log2(static_cast<double>(state.systems()[positions[0]].dim));
    r.sigma_saturated = std::abs(r.sigma_bar - log_q) <= kEqualityTolerance;
    return r;
}

double max_marginal_deviation(const TensorState &state, const Labels &parties, std::size_t block) {
    double worst = 0;
    if (block == 0) return worst;
    if (binomial(parties.size(), block) > qstate::kSubsetBudget) fail(Errc::BudgetExceeded, "too many blocks");
    for_each_subset(parties.size(), block, [&](const std::vector<std::size_t> &idx) {
        Labels labels;
        for (auto i : idx) labels.push_back(parties[i]);
        const auto marginal = qstate::partial_trace(state, labels);
        worst = std::max(worst, qstate::trace_distance(marginal, DensityMatrix::maximally_mixed(marginal.systems())));
    });
    return worst;
}

std::pair<unsigned, unsigned> prime_power(unsigned q) {
    if (q < 2) fail(Errc::InvalidArgument, "alphabet size must be at least 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    unsigned rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) fail(Errc::InvalidArgument, "alphabet size " + std::to_string(q) + " is not a prime power");
    return {p, m};
}

namespace {

gf::Received erase(const std::vector<gf::Elem> &word, std::span<const std::size_t> erasures) {
    gf::Received received(word.begin(), word.end());
    for (auto j : erasures) {
        if (j >= word.size()) fail(Errc::InvalidArgument, "erasure position out of range");
        received[j].reset();
    }
    return received;
}

std::string positions(std::span<const std::size_t> v) {
    return join_indices(std::vector<std::size_t>(v.begin(), v.end()));
}

// Iterates all vectors of length k over {0..base-1}.
template <typename Fn>
void for_each_message(std::size_t k, std::uint64_t base, Fn &&fn) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= base;
        if (total > gf::kMinDistanceBudget) fail(Errc::EnumerationBudgetExceeded, "too many messages to enumerate");
    }
    std::vector<gf::Elem> msg(k, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        fn(static_cast<const std::vector<gf::Elem> &>(msg));
        for (std::size_t i = 0; i < k; ++i) {
            if (++msg[i] < base) break;
            msg[i] = 0;
        }
    }
}

ProtocolTranscript densecoding_run(const gf::LinearCode &code, unsigned q, std::span<const gf::Elem> message,
                                   std::span<const std::size_t> erasures) {
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    ProtocolTranscript t;
    t.message_in.assign(message.begin(), message.end());
    t.k = static_cast<std::int64_t>(k);
    t.steps.push_back("share " + std::to_string(n) + " ebit pairs for dense coding");
    const auto word = code.encode(message);
    std::ostringstream enc;
    enc << "encode RS[" << n << "," << k << "] over GF(" << q * q << "):";
    for (auto s : word) enc << " " << s;
    t.steps.push_back(enc.str());
    for (std::size_t i = 0; i < n; ++i) {
        t.steps.push_back("dense-code symbol " + std::to_string(word[i]) + " on system " + std::to_string(i + 1) +
                          " as X^" + std::to_string(word[i] / q) + " Z^" + std::to_string(word[i] % q));
    }
    t.steps.push_back("erase " + positions(erasures));
    // A Bell measurement on each surviving pair returns its symbol exactly.
    t.message_out = gf::erasure_decode(code, erase(word, erasures));
    t.steps.push_back("classical-decode " + std::to_string(k) + " symbols");
    t.ebits_consumed = static_cast<std::int64_t>(n);
    for (std::size_t i = 0; i < k; ++i) {
        const auto s = t.message_out[i];
        t.steps.push_back("teleport qudit " + std::to_string(i + 1) + " with correction X^" + std::to_string(s / q) +
                          " Z^" + std::to_string(s % q));
        t.ebits_consumed += 1;
    }
    t.fidelity = t.message_out == t.message_in ? 1.0 : 0.0;
    return t;
}

}  // namespace

ProtocolTranscript simulate_densecoding_mds(unsigned q, std::size_t n, std::size_t d,
                                            std::span<const gf::Elem> message,
                                            std::span<const std::size_t> erasures) {
    const auto [p, m] = prime_power(q);
    if (d < 1 || d > n) fail(Errc::InvalidArgument, "need 1 <= d <= n");
    const auto code = gf::reed_solomon(gf::make_field(p, 2 * m), n, n - d + 1);
    return densecoding_run(code, q, message, erasures);
}

ProtocolSummary sweep_densecoding_mds(unsigned q, std::size_t n, std::size_t d) {
    const auto [p, m] = prime_power(q);
    if (d < 1 || d > n) fail(Errc::InvalidArgument, "need 1 <= d <= n");
    const auto code = gf::reed_solomon(gf::make_field(p, 2 * m), n, n - d + 1);
    ProtocolSummary s;
    s.k = static_cast<std::int64_t>(code.k());
    s.c = static_cast<std::int64_t>(n + code.k());
    s.patterns = binomial(n, d - 1);
    for_each_message(code.k(), code.field().order(), [&](const std::vector<gf::Elem> &msg) {
        for_each_subset(n, d - 1, [&](const std::vector<std::size_t> &erased) {
            ++s.runs;
            try {
                auto t = densecoding_run(code, q, msg, erased);
                if (t.fidelity != 1.0 || t.ebits_consumed != s.c) ++s.failures;
                if (s.runs == 1) s.sample = std::move(t);
            } catch (const Error &) {
                ++s.failures;
            }
        });
    });
    const auto nn = static_cast<std::int64_t>(n);
    s.delta = bounds::Rational(static_cast<std::int64_t>(d - 1), nn);
    s.point = {s.c / nn, bounds::Rational(s.k, nn), "densecoding"};
    s.in_region = bounds::region_contains(bounds::rate_region(s.delta), s.point.x, s.point.y);
    return s;
}

ProtocolSummary simulate_mds_point(unsigned q, std::size_t n, std::size_t d) {
    const auto [p, m] = prime_power(q);
    if (d < 1 || d > n) fail(Errc::InvalidArgument, "need 1 <= d <= n");
    if (2 * (d - 1) < n) fail(Errc::DistanceBelowHalf, "the MDS point needs 2(d-1) >= n");
    const std::size_t payload = n - d + 1;
    if (payload % 2 != 0) {
        fail(Errc::ParityMismatch, "n-d+1 = " + std::to_string(payload) + " is odd; k = c would not be integral");
    }
    const auto code = gf::reed_solomon(gf::make_field(p, m), n, payload);
    const std::size_t k = payload / 2;

    ProtocolSummary s;
    s.k = static_cast<std::int64_t>(k);
    s.c = static_cast<std::int64_t>(k);
    s.patterns = binomial(n, d - 1);
    for_each_message(payload, q, [&](const std::vector<gf::Elem> &msg) {
        for_each_subset(n, d - 1, [&](const std::vector<std::size_t> &erased) {
            ++s.runs;
            ProtocolTranscript t;
            t.message_in = msg;
            t.k = s.k;
            try {
                const auto word = code.encode(msg);
                t.steps.push_back("encode RS[" + std::to_string(n) + "," + std::to_string(payload) + "] over GF(" +
                                  std::to_string(q) + ")");
                t.steps.push_back("erase " + positions(erased));
                t.message_out = gf::erasure_decode(code, erase(word, erased));
                t.steps.push_back("classical-decode " + std::to_string(payload) + " dits");
                t.ebits_consumed = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    t.steps.push_back("teleport qudit " + std::to_string(i + 1) + " with correction X^" +
                                      std::to_string(t.message_out[2 * i]) + " Z^" +
                                      std::to_string(t.message_out[2 * i + 1]));
                    t.ebits_consumed += 1;
                }
                t.fidelity = t.message_out == t.message_in ? 1.0 : 0.0;
                if (t.fidelity != 1.0 || t.ebits_consumed != s.c) ++s.failures;
            } catch (const Error &) {
                ++s.failures;
            }
            if (s.runs == 1) s.sample = std::move(t);
        });
    });
    const auto nn = static_cast<std::int64_t>(n);
    s.delta = bounds::Rational(static_cast<std::int64_t>(d - 1), nn);
    s.point = {s.c / nn, bounds::Rational(s.k, nn), "MDS"};
    s.in_region = bounds::region_contains(bounds::rate_region(s.delta), s.point.x, s.point.y);
    return s;
}

void write_transcript(const ProtocolTranscript &t, std::ostream &out) {
    for (const auto &step : t.steps) out << "step " << step << "\n";
    out << "ebits_consumed=" << bounds::to_string(t.ebits_consumed) << " k=" << t.k << " fidelity=" << t.fidelity
        << "\n";
}

void write_summary(const std::string &name, const ProtocolSummary &s, std::ostream &out) {
    out << "protocol " << name << " k=" << s.k << " c=" << bounds::to_string(s.c) << " delta=" << bounds::to_string(s.delta)
        << " point=(" << bounds::to_string(s.point.x) << "," << bounds::to_string(s.point.y) << ")"
        << " in_region=" << (s.in_region ? "true" : "false") << " runs=" << s.runs << " patterns=" << s.patterns
        << " failures=" << s.failures << "\n";
}

}  // namespace singleton_lab::verify
