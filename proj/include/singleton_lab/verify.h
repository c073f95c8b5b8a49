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

#ifndef SINGLETON_LAB_VERIFY_H
#define SINGLETON_LAB_VERIFY_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "singleton_lab/bounds.h"
#include "singleton_lab/gf.h"
#include "singleton_lab/qstate.h"

namespace singleton_lab::verify {

using qstate::DensityMatrix;
using qstate::Labels;
using qstate::TensorState;

inline constexpr double kEqualityTolerance = 1e-9;
inline constexpr double kFuzzTolerance = 1e-8;

struct LemmaCheck {
    double lhs = 0;
    double rhs = 0;
    double margin = 0;  // rhs - lhs
};

/// E_{|I|=m} S(X_I) <= (m/mu) E_{|J|=mu} S(X_J) over subsets of `parties`.
/// Throws BadBlockSizes unless 1 <= mu < m <= n.
LemmaCheck check_lemma1(const DensityMatrix &dm, const Labels &parties, std::size_t m, std::size_t mu);
LemmaCheck check_lemma1(const TensorState &state, const Labels &parties, std::size_t m, std::size_t mu);

/// Conditional form: E_{|I|=m} S(X_I|Y) <= (m/mu) E_{|J|=mu} S(X_J|Y).
LemmaCheck check_lemma2(const DensityMatrix &dm, const Labels &parties, const Labels &given, std::size_t m,
                        std::size_t mu);

enum class Lemma { Monotone, ConditionalMonotone, StrongSubadditivity };
std::string_view lemma_name(Lemma lemma);

struct FuzzViolation {
    std::uint64_t seed;
    std::vector<Eigen::Index> dims;
    double margin;
};

struct FuzzReport {
    Lemma lemma = Lemma::Monotone;
    std::uint64_t trials = 0;
    std::uint64_t checks = 0;
    double worst_margin = 0;
    std::vector<FuzzViolation> violations;
    double elapsed_seconds = 0;
};

struct FuzzOptions {
    std::uint64_t trials = 1000;
    /// Upper bound on the product of all dimensions including the purifying ancilla.
    Eigen::Index dimension_budget = 512;
    std::uint64_t master_seed = 0;
};

/// Random mixed states; every admissible (m, mu) pair is checked per trial.
/// Per-trial seeds derive from the master seed, so reports are reproducible.
FuzzReport fuzz(Lemma lemma, const FuzzOptions &options);
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);
void write_fuzz_report(const FuzzReport &report, std::ostream &out);

// --- decoupling and the entropic Singleton bound --------------------------

struct PartitionRecord {
    std::vector<std::size_t> erased;  // indices into the party list
    double mutual_information = 0;    // I(R : X_J)
    double s_kept = 0;                // S(X_I)
    double s_erased = 0;              // S(X_J)
    double s_reference_erased = 0;    // S(R X_J)
};

struct DecouplingReport {
    std::vector<PartitionRecord> partitions;
    bool correctable = false;
    double max_mutual_information = 0;
    std::vector<std::size_t> worst;
    double sigma_bar = 0;      // per-system entropy of (d-1)-blocks
    double sigma_bar_bar = 0;  // per-system entropy of (n-d+1)-blocks
    double s_reference = 0;
};

/// I(R : X_J) for every erasure pattern |J| = d-1 of the parties, in
/// lexicographic order. Every subsystem of the state must be the reference, a
/// party, or listed in `retained` (held by the receiver); otherwise the
/// listed systems are not in a pure state and StateNotPure is thrown.
DecouplingReport check_decoupling(const TensorState &state, const std::string &reference, const Labels &parties,
                                  std::size_t d, const Labels &retained = {});
/// Mixed input must already be pure (purity 1 within 1e-9).
DecouplingReport check_decoupling(const DensityMatrix &dm, const std::string &reference, const Labels &parties,
                                  std::size_t d, const Labels &retained = {});

struct EntropicSingletonReport {
    double s_reference = 0;
    double sigma_bar = 0;  // single-system average at d = 1
    double rhs = 0;  // max{0, n-2d+2} * sigma_bar
    double slack = 0;
    bool holds = false;
    bool tight = false;
    /// For tight nontrivial instances sigma_bar must equal log2 q.
    bool sigma_saturated = false;
};

/// Throws NotCorrectable if the decoupling check fails at distance d.
EntropicSingletonReport check_entropic_singleton(const TensorState &state, const std::string &reference,
                                                 const Labels &parties, std::size_t d);

/// Largest trace distance of a block marginal from the maximally mixed state.
double max_marginal_deviation(const TensorState &state, const Labels &parties, std::size_t block);

// --- protocol bookkeeping --------------------------------------------------

struct ProtocolTranscript {
    std::vector<std::string> steps;
    bounds::Rational ebits_consumed;  // in qudit pairs
    std::int64_t k = 0;               // qudits transmitted
    std::vector<gf::Elem> message_in;
    std::vector<gf::Elem> message_out;
    double fidelity = 0;
};

/// Dense coding over n channel uses turns each q-ary system into a q^2-ary
/// classical symbol; a Reed-Solomon [n, n-d+1] code over GF(q^2) survives the
/// erasures and its payload drives n-d+1 teleportations.
/// Throws decode errors from gf (TooManyErasures if |J| > d-1).
ProtocolTranscript simulate_densecoding_mds(unsigned q, std::size_t n, std::size_t d,
                                            std::span<const gf::Elem> message,
                                            std::span<const std::size_t> erasures);

struct ProtocolSummary {
    std::uint64_t runs = 0;
    std::uint64_t failures = 0;
    std::uint64_t patterns = 0;
    std::int64_t k = 0;
    bounds::Rational c;
    bounds::Rational delta;
    bounds::Point point;  // (c/n, k/n)
    bool in_region = false;
    ProtocolTranscript sample;
};

/// Every message and every erasure pattern of size d-1.
ProtocolSummary sweep_densecoding_mds(unsigned q, std::size_t n, std::size_t d);

/// Classical Reed-Solomon [n, n-d+1] code over GF(q) carrying the 2k dits
/// that teleport k = (n-d+1)/2 qudits with c = k ebit pairs.
/// Throws ParityMismatch when n-d+1 is odd and DistanceBelowHalf unless 2(d-1) >= n.
ProtocolSummary simulate_mds_point(unsigned q, std::size_t n, std::size_t d);

void write_transcript(const ProtocolTranscript &t, std::ostream &out);
void write_summary(const std::string &name, const ProtocolSummary &s, std::ostream &out);

/// q = p^m decomposition; throws InvalidArgument unless q is a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned q);

}  // namespace singleton_lab::verify

#endif
