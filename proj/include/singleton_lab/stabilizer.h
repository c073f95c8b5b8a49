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

#ifndef SINGLETON_LAB_STABILIZER_H
#define SINGLETON_LAB_STABILIZER_H

#include <complex>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "singleton_lab/qstate.h"

namespace singleton_lab::stabilizer {

/// Generalized Pauli operator exp(i pi phase / q) * prod_i X^{x_i} Z^{z_i}
/// with X|j> = |j+1 mod q>, Z|j> = w^j |j>, w = exp(2 pi i / q).
struct PauliWord {
    unsigned q = 2;
    std::vector<unsigned> x;
    std::vector<unsigned> z;
    unsigned phase = 0;  // mod 2q

    std::size_t n() const { return x.size(); }
    std::size_t weight() const;
    bool is_identity() const { return weight() == 0; }

    /// Qubit letters (I, X, Y, Z; Y = iXZ) when q == 2, otherwise "x-digits|z-digits",
    /// e.g. "111|000". An optional leading '-' multiplies by -1.
    static PauliWord parse(std::string_view text, unsigned q);
    std::string str() const;

    bool operator==(const PauliWord &) const = default;
};

/// Symplectic form sum_i (z_i x'_i - x_i z'_i) mod q; zero iff the words commute.
unsigned symplectic_product(const PauliWord &a, const PauliWord &b);
inline bool commute(const PauliWord &a, const PauliWord &b) { return symplectic_product(a, b) == 0; }

/// Sparse monomial realization: P e_t = factor[t] e_{target[t]}.
struct Monomial {
    std::vector<Eigen::Index> target;
    Eigen::VectorXcd factor;

    static Monomial of(const PauliWord &word);
    Eigen::MatrixXcd apply(const Eigen::MatrixXcd &columns) const;
    Eigen::MatrixXcd dense() const;
};

class StabilizerCode {
  public:
    /// Throws InvalidArgument for non-prime q or malformed words,
    /// NonCommutingGenerators, DependentGenerators, InconsistentPhases.
    StabilizerCode(unsigned q, std::size_t n, std::vector<PauliWord> generators);

    unsigned q() const { return q_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return n_ - generators_.size(); }
    const std::vector<PauliWord> &generators() const { return generators_; }

    /// q^n and q^k, saturating at the qstate dimension cap plus one.
    std::uint64_t physical_dimension() const;
    std::uint64_t logical_dimension() const;

  private:
    unsigned q_;
    std::size_t n_;
    std::vector<PauliWord> generators_;
};

inline constexpr std::uint64_t kProjectorBudget = 1u << 12;

/// Pi = prod_g (1/q) sum_a g^a, which equals the normalized group sum.
Eigen::MatrixXcd build_projector(const StabilizerCode &code);

/// Orthonormal basis of the code space as columns (q^n x q^k), obtained by
/// Gram-Schmidt on projected computational basis vectors.
Eigen::MatrixXcd code_basis(const StabilizerCode &code);

/// (1/sqrt K) sum_i |i>_R |v_i>_{X1..Xn}; its X-marginal is Pi / K.
qstate::TensorState purified_code_state(const StabilizerCode &code);

inline const std::string kReferenceLabel = "R";
qstate::Labels physical_labels(std::size_t n);

struct KnillLaflammeVerdict {
    bool distance_at_least = false;
    bool pure = false;
    /// First word with Pi E Pi not proportional to Pi.
    std::optional<PauliWord> witness;
    /// First word with a nonzero proportionality constant.
    std::optional<PauliWord> impurity_witness;
    std::uint64_t words_checked = 0;
};

inline constexpr std::uint64_t kErrorEnumerationBudget = 1'000'000;
inline constexpr double kKnillLaflammeTolerance = 1e-9;

/// Brute force over all non-identity words of weight <= d-1, in order of
/// weight, then support, then per-site exponents.
KnillLaflammeVerdict knill_laflamme_check(const StabilizerCode &code, std::size_t d);

struct CorpusEntry {
    std::string name;
    StabilizerCode code;
    std::size_t distance;  // largest d passing Knill-Laflamme; n+1 for K=1
    bool pure;             // purity at that distance
};

/// Records: `name q n distance pure|impure generator...`, '#' comments.
std::vector<CorpusEntry> parse_corpus(std::istream &in);
const std::vector<CorpusEntry> &corpus();
/// Throws InvalidArgument for an unknown name.
const CorpusEntry &corpus_entry(std::string_view name);

}  // namespace singleton_lab::stabilizer

#endif
