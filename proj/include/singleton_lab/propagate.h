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

#ifndef SINGLETON_LAB_PROPAGATE_H
#define SINGLETON_LAB_PROPAGATE_H

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "singleton_lab/bounds.h"
#include "singleton_lab/error.h"
#include "singleton_lab/qstate.h"
#include "singleton_lab/stabilizer.h"

namespace singleton_lab::propagate {

using bounds::CodeParams;
using bounds::Rational;

enum class Existence { Constructed, Cited, Derived, Nonexistent };
std::string_view existence_name(Existence e);

struct TrailStep {
    std::string rule;
    CodeParams parent;
};

struct CodeRecord {
    CodeParams params;
    Existence existence = Existence::Cited;
    /// Rule applications from a seed to this record, oldest first.
    std::vector<TrailStep> trail;
};

/// [[n,k,d;c]] -> [[n,k-1,d;c-1]]; purity becomes unknown. Throws KTooSmall.
CodeParams rule_trade_k_for_c(const CodeParams &p);

/// Pure [[n,k,d]] -> [[n-c,k,d;c]] for 1 <= c < d, n-c >= 1.
/// Throws NotPure (also for assisted inputs) or CTooLarge.
CodeParams rule_pure_shorten(const CodeParams &p, int c);

/// Pure [[n,k,d]] -> pure [[n-1,k+1,d-1]]. Throws NotPure or DTooSmall.
CodeParams rule_rains_lengthen(const CodeParams &p);

/// Deliberately unsound variant [[n,k,d]] -> [[n-c,k+c,d;c]], used only to
/// exercise soundness checking.
CodeParams rule_corrupted_shorten(const CodeParams &p, int c);

/// Applies a named rule ("trade-k-for-c", "pure-shorten:c", "rains-lengthen",
/// "corrupted-shorten:c") to replay a trail.
CodeParams apply_rule(const std::string &rule, const CodeParams &p);

/// Raised by closure when a derived record fails classification.
class SoundnessViolation : public Error {
  public:
    SoundnessViolation(CodeRecord record, const std::string &what)
        : Error(Errc::SoundnessViolation, what), record_(std::move(record)) {}
    const CodeRecord &record() const { return record_; }

  private:
    CodeRecord record_;
};

struct ClosureOptions {
    std::size_t max_steps = 16;
    bool corrupted_rule = false;
};

struct ClosureResult {
    /// Seeds and derived records, sorted by parameters.
    std::vector<CodeRecord> records;
    /// True when the step cap stopped the search before a fixed point.
    bool truncated = false;
    std::size_t steps = 0;
};

/// Breadth-first fixed point under all rules. Nonexistent records are never
/// used as parents; derived duplicates are keyed on parameters and purity.
ClosureResult closure(const std::vector<CodeRecord> &db, const ClosureOptions &options = {});

/// Records `n k d c q pure existence source...`; pure is true|false|unknown.
std::vector<CodeRecord> read_database(std::istream &in);
void write_record(const CodeRecord &record, std::ostream &out);

/// Nonexistence facts consulted for reporting only.
const std::vector<CodeRecord> &nonexistence_facts();
std::optional<CodeRecord> matching_nonexistence_fact(const CodeParams &p);

// --- state-level execution of the pure-code construction ------------------

inline constexpr double kCertificationTolerance = 1e-9;

struct Theorem5Witness {
    /// Purified code state; the last c physical systems are relabeled Bin1..Binc.
    qstate::TensorState state;
    CodeParams params;
    qstate::Labels transmitted;
    qstate::Labels entangled;
    double bin_distance = 0;  // trace distance of the Bin marginal from maximally mixed
    double max_mutual_information = 0;
    std::vector<std::size_t> worst_subset;
    std::size_t partitions_checked = 0;
    /// No erasure pattern of size d-1 fits in n-c systems.
    bool vacuous = false;
};

class DecouplingFailed : public Error {
  public:
    DecouplingFailed(std::vector<std::size_t> subset, double mutual_information, const std::string &what)
        : Error(Errc::DecouplingFailed, what), subset_(std::move(subset)), mi_(mutual_information) {}
    const std::vector<std::size_t> &subset() const { return subset_; }
    double mutual_information() const { return mi_; }

  private:
    std::vector<std::size_t> subset_;
    double mi_;
};

/// Certifies the [[n-c,k,d;c]] entanglement-assisted code obtained from a
/// pure code of distance d by handing the last c systems to the receiver.
/// Throws CTooLarge, DimensionBudgetExceeded, NotMaximallyMixedOnBin or DecouplingFailed.
Theorem5Witness theorem5_execute(const stabilizer::StabilizerCode &code, int d, int c);

}  // namespace singleton_lab::propagate

#endif
