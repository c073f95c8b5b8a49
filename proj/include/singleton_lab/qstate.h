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

#ifndef SINGLETON_LAB_QSTATE_H
#define SINGLETON_LAB_QSTATE_H

// Dense multipartite states over labeled subsystems. All entropies are in
// bits; callers wanting dits divide by log2(q) at the reporting boundary.
//
// Subsystems are ordered; the first listed subsystem is the most significant
// tensor factor of the amplitude index.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "singleton_lab/error.h"
#include "singleton_lab/subsets.h"

namespace singleton_lab::qstate {

struct Subsystem {
    std::string label;
    Eigen::Index dim = 2;

    bool operator==(const Subsystem &) const = default;
};

using Systems = std::vector<Subsystem>;
using Labels = std::vector<std::string>;

inline constexpr Eigen::Index kMaxDimension = Eigen::Index{1} << 14;
inline constexpr std::uint64_t kSubsetBudget = 1'000'000;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr double kTraceTolerance = 1e-10;

namespace detail {

/// The double-precision tolerances, widened to the rounding level of Real.
template <typename Real>
Real tolerance(double base) {
    return std::max(Real(base), Real(64) * std::numeric_limits<Real>::epsilon());
}

inline Eigen::Index total_dimension(const Systems &systems) {
    Eigen::Index d = 1;
    for (const auto &s : systems) {
        if (s.dim < 1) fail(Errc::InvalidArgument, "subsystem '" + s.label + "' has dimension < 1");
        d *= s.dim;
        if (d > kMaxDimension) fail(Errc::DimensionBudgetExceeded, "total dimension exceeds 2^14");
    }
    return d;
}

inline void check_unique(const Systems &systems) {
    std::set<std::string> seen;
    for (const auto &s : systems) {
        if (!seen.insert(s.label).second) fail(Errc::DuplicateLabel, "duplicate subsystem label '" + s.label + "'");
    }
}

/// Positions of the requested labels, in the subsystem order of `systems`.
inline std::vector<std::size_t> resolve(const Systems &systems, const Labels &labels) {
    std::vector<bool> wanted(systems.size(), false);
    for (const auto &label : labels) {
        auto it = std::find_if(systems.begin(), systems.end(), [&](const Subsystem &s) { return s.label == label; });
        if (it == systems.end()) fail(Errc::UnknownLabel, "unknown subsystem label '" + label + "'");
        wanted[static_cast<std::size_t>(it - systems.begin())] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        if (wanted[i]) out.push_back(i);
    }
    return out;
}

/// For every full basis index, its index within the kept factors and
/// within the traced factors.
struct Split {
    std::vector<Eigen::Index> keep_index;
    std::vector<Eigen::Index> rest_index;
    Eigen::Index keep_dim = 1;
    Eigen::Index rest_dim = 1;
    Systems kept;
};

inline Split split(const Systems &systems, const std::vector<std::size_t> &keep) {
    Split sp;
    std::vector<bool> is_kept(systems.size(), false);
    for (auto i : keep) is_kept[i] = true;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        if (is_kept[i]) {
            sp.keep_dim *= systems[i].dim;
            sp.kept.push_back(systems[i]);
        } else {
            sp.rest_dim *= systems[i].dim;
        }
    }
    const Eigen::Index total = sp.keep_dim * sp.rest_dim;
    sp.keep_index.assign(static_cast<std::size_t>(total), 0);
    sp.rest_index.assign(static_cast<std::size_t>(total), 0);
    for (Eigen::Index t = 0; t < total; ++t) {
        Eigen::Index rem = t;
        Eigen::Index kscale = 1;
        Eigen::Index rscale = 1;
        Eigen::Index kidx = 0;
        Eigen::Index ridx = 0;
        for (std::size_t i = systems.size(); i-- > 0;) {
            const Eigen::Index digit = rem % systems[i].dim;
            rem /= systems[i].dim;
            if (is_kept[i]) {
                kidx += digit * kscale;
                kscale *= systems[i].dim;
            } else {
                ridx += digit * rscale;
                rscale *= systems[i].dim;
            }
        }
        sp.keep_index[static_cast<std::size_t>(t)] = kidx;
        sp.rest_index[static_cast<std::size_t>(t)] = ridx;
    }
    return sp;
}

inline Labels labels_of(const Systems &systems, const std::vector<std::size_t> &positions) {
    Labels out;
    for (auto i : positions) out.push_back(systems[i].label);
    return out;
}

}  // namespace detail

/// Pure state vector over labeled subsystems. Unit norm within 1e-12.
template <typename Real>
class BasicTensorState {
  public:
    using Complex = std::complex<Real>;
    using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    BasicTensorState(Systems systems, Vector amplitudes)
        : systems_(std::move(systems)), amplitudes_(std::move(amplitudes)) {
        detail::check_unique(systems_);
        if (detail::total_dimension(systems_) != amplitudes_.size()) {
            fail(Errc::InvalidArgument, "amplitude count does not match the subsystem dimensions");
        }
        if (std::abs(amplitudes_.norm() - Real(1)) > detail::tolerance<Real>(kNormTolerance)) {
            fail(Errc::InvalidArgument, "state vector is not normalized");
        }
    }

    /// Normalizes `amplitudes` first; throws InvalidArgument for the zero vector.
    static BasicTensorState normalized(Systems systems, Vector amplitudes) {
        const Real norm = amplitudes.norm();
        if (!(norm > Real(0))) fail(Errc::InvalidArgument, "cannot normalize the zero vector");
        amplitudes /= norm;
        return BasicTensorState(std::move(systems), std::move(amplitudes));
    }

    const Systems &systems() const { return systems_; }
    const Vector &amplitudes() const { return amplitudes_; }
    Eigen::Index dimension() const { return amplitudes_.size(); }

    Labels labels() const {
        Labels out;
        for (const auto &s : systems_) out.push_back(s.label);
        return out;
    }

    BasicTensorState relabeled(const std::string &from, const std::string &to) const {
        Systems systems = systems_;
        auto pos = detail::resolve(systems, {from});
        systems[pos.front()].label = to;
        return BasicTensorState(std::move(systems), amplitudes_);
    }

  private:
    Systems systems_;
    Vector amplitudes_;
};

/// Hermitian, unit-trace matrix over labeled subsystems. Positivity is
/// checked lazily by the spectral routines.
template <typename Real>
class BasicDensityMatrix {
  public:
    using Complex = std::complex<Real>;
    using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

    BasicDensityMatrix(Systems systems, Matrix matrix) : systems_(std::move(systems)), matrix_(std::move(matrix)) {
        detail::check_unique(systems_);
        const Eigen::Index d = detail::total_dimension(systems_);
        if (matrix_.rows() != d || matrix_.cols() != d) {
            fail(Errc::InvalidArgument, "matrix size does not match the subsystem dimensions");
        }
        if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > detail::tolerance<Real>(kHermitianTolerance)) {
            fail(Errc::NonHermitianInput, "density matrix is not Hermitian");
        }
        if (std::abs(matrix_.trace() - Complex(1)) > detail::tolerance<Real>(kTraceTolerance)) {
            fail(Errc::InvalidArgument, "density matrix does not have unit trace");
        }
    }

    static BasicDensityMatrix from_pure(const BasicTensorState<Real> &state) {
        return BasicDensityMatrix(state.systems(), state.amplitudes() * state.amplitudes().adjoint());
    }

    static BasicDensityMatrix maximally_mixed(Systems systems) {
        const Eigen::Index d = detail::total_dimension(systems);
        return BasicDensityMatrix(std::move(systems), Matrix::Identity(d, d) / Real(d));
    }

    const Systems &systems() const { return systems_; }
    const Matrix &matrix() const { return matrix_; }
    Eigen::Index dimension() const { return matrix_.rows(); }

    Labels labels() const {
        Labels out;
        for (const auto &s : systems_) out.push_back(s.label);
        return out;
    }

  private:
    Systems systems_;
    Matrix matrix_;
};

using TensorState = BasicTensorState<double>;
using DensityMatrix = BasicDensityMatrix<double>;

template <typename Real>
BasicDensityMatrix<Real> partial_trace(const BasicTensorState<Real> &state, const Labels &keep) {
    using Matrix = typename BasicDensityMatrix<Real>::Matrix;
    const auto positions = detail::resolve(state.systems(), keep);
    const auto sp = detail::split(state.systems(), positions);
    Matrix m = Matrix::Zero(sp.keep_dim, sp.rest_dim);
    for (Eigen::Index t = 0; t < state.dimension(); ++t) {
        m(sp.keep_index[static_cast<std::size_t>(t)], sp.rest_index[static_cast<std::size_t>(t)]) =
            state.amplitudes()(t);
    }
    Matrix rho = m * m.adjoint();
    // Symmetrize away rounding so the Hermitian check is exact.
    rho = (rho + rho.adjoint()).eval() / Real(2);
    return BasicDensityMatrix<Real>(sp.kept, std::move(rho));
}

template <typename Real>
BasicDensityMatrix<Real> partial_trace(const BasicDensityMatrix<Real> &dm, const Labels &keep) {
    using Matrix = typename BasicDensityMatrix<Real>::Matrix;
    const auto positions = detail::resolve(dm.systems(), keep);
    const auto sp = detail::split(dm.systems(), positions);
    // full[k * rest_dim + r] is the full index with kept part k and traced part r.
    std::vector<Eigen::Index> full(static_cast<std::size_t>(dm.dimension()));
    for (Eigen::Index t = 0; t < dm.dimension(); ++t) {
        full[static_cast<std::size_t>(sp.keep_index[static_cast<std::size_t>(t)] * sp.rest_dim +
                                      sp.rest_index[static_cast<std::size_t>(t)])] = t;
    }
    Matrix rho = Matrix::Zero(sp.keep_dim, sp.keep_dim);
    for (Eigen::Index a = 0; a < sp.keep_dim; ++a) {
        for (Eigen::Index b = 0; b < sp.keep_dim; ++b) {
            typename BasicDensityMatrix<Real>::Complex acc(0);
            for (Eigen::Index r = 0; r < sp.rest_dim; ++r) {
                acc += dm.matrix()(full[static_cast<std::size_t>(a * sp.rest_dim + r)],
                                   full[static_cast<std::size_t>(b * sp.rest_dim + r)]);
            }
            rho(a, b) = acc;
        }
    }
    rho = (rho + rho.adjoint()).eval() / Real(2);
    return BasicDensityMatrix<Real>(sp.kept, std::move(rho));
}

/// Eigenvalues clamped to [0,1]; throws NegativeEigenvalue below -1e-10.
template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, 1> spectrum(const BasicDensityMatrix<Real> &dm) {
    Eigen::SelfAdjointEigenSolver<typename BasicDensityMatrix<Real>::Matrix> solver(dm.matrix(),
                                                                                   Eigen::EigenvaluesOnly);
    Eigen::Matrix<Real, Eigen::Dynamic, 1> ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -detail::tolerance<Real>(-kEigenvalueFloor)) fail(Errc::NegativeEigenvalue, "density matrix has a negative eigenvalue");
        ev(i) = std::clamp(ev(i), Real(0), Real(1));
    }
    return ev;
}

/// Shannon entropy in bits of a probability vector, 0 log 0 = 0.
template <typename Derived>
typename Derived::Scalar shannon_bits(const Eigen::MatrixBase<Derived> &p) {
    using Real = typename Derived::Scalar;
    Real s(0);
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) > Real(0)) s -= p(i) * std::log2(p(i));
    }
    return s;
}

template <typename Real>
Real entropy(const BasicDensityMatrix<Real> &dm) {
    return std::max(Real(0), shannon_bits(spectrum(dm)));
}

template <typename Real>
Real purity(const BasicDensityMatrix<Real> &dm) {
    return (dm.matrix() * dm.matrix()).trace().real();
}

/// Half the trace norm of the difference; both operands must share a shape.
template <typename Real>
Real trace_distance(const BasicDensityMatrix<Real> &a, const BasicDensityMatrix<Real> &b) {
    if (a.dimension() != b.dimension()) fail(Errc::InvalidArgument, "trace distance needs equal dimensions");
    typename BasicDensityMatrix<Real>::Matrix diff = a.matrix() - b.matrix();
    Eigen::SelfAdjointEigenSolver<decltype(diff)> solver(diff, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum() / Real(2);
}

/// Entropy of a block. For pure states the smaller side of the cut is
/// diagonalized.
template <typename Real>
Real block_entropy(const BasicTensorState<Real> &state, const Labels &block) {
    const auto positions = detail::resolve(state.systems(), block);
    if (positions.empty() || positions.size() == state.systems().size()) return Real(0);
    Eigen::Index keep_dim = 1;
    for (auto i : positions) keep_dim *= state.systems()[i].dim;
    const Eigen::Index rest_dim = state.dimension() / keep_dim;
    if (keep_dim <= rest_dim) return entropy(partial_trace(state, block));
    const auto rest = complement(state.systems().size(), positions);
    return entropy(partial_trace(state, detail::labels_of(state.systems(), rest)));
}

template <typename Real>
Real block_entropy(const BasicDensityMatrix<Real> &dm, const Labels &block) {
    const auto positions = detail::resolve(dm.systems(), block);
    if (positions.empty()) return Real(0);
    if (positions.size() == dm.systems().size()) return entropy(dm);
    return entropy(partial_trace(dm, block));
}

namespace detail {

inline void check_disjoint(const Labels &a, const Labels &b) {
    for (const auto &x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) {
            fail(Errc::OverlappingBlocks, "label '" + x + "' appears in both blocks");
        }
    }
}

inline Labels join(Labels a, const Labels &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace detail

/// S(block | given) = S(block given) - S(given).
template <typename State>
auto conditional_entropy(const State &state, const Labels &block, const Labels &given) {
    detail::check_disjoint(block, given);
    return block_entropy(state, detail::join(block, given)) - block_entropy(state, given);
}

/// I(a : b) = S(a) + S(b) - S(ab).
template <typename State>
auto mutual_information(const State &state, const Labels &a, const Labels &b) {
    detail::check_disjoint(a, b);
    return block_entropy(state, a) + block_entropy(state, b) - block_entropy(state, detail::join(a, b));
}

/// Mean of block_entropy over all subsets of `parties` of the given size,
/// averaged over every subset exactly.
template <typename State, typename Fn>
auto subset_mean(const State &state, const Labels &parties, std::size_t size, Fn &&value) {
    if (binomial(parties.size(), size) > kSubsetBudget) {
        fail(Errc::BudgetExceeded, "too many subsets to enumerate exactly");
    }
    using Real = decltype(value(state, Labels{}));
    Real sum(0);
    std::uint64_t count = 0;
    for_each_subset(parties.size(), size, [&](const std::vector<std::size_t> &idx) {
        Labels block;
        for (auto i : idx) block.push_back(parties[i]);
        sum += value(state, block);
        ++count;
    });
    return count == 0 ? Real(0) : sum / Real(count);
}

/// Average entropy per system of a random block of `block_size` parties.
template <typename State>
auto avg_block_entropy(const State &state, const Labels &parties, std::size_t block_size) {
    if (block_size < 1 || block_size > parties.size()) {
        fail(Errc::InvalidArgument, "block size must lie in [1, number of parties]");
    }
    detail::resolve(state.systems(), parties);
    using Real = decltype(block_entropy(state, parties));
    const Real mean = subset_mean(state, parties, block_size,
                                  [](const State &s, const Labels &block) { return block_entropy(s, block); });
    return mean / Real(block_size);
}

template <typename State>
auto avg_block_entropy(const State &state, std::size_t block_size) {
    return avg_block_entropy(state, state.labels(), block_size);
}

/// Haar-random pure state; complex Gaussian amplitudes, normalized.
/// Deterministic for a given seed and standard library.
template <typename Real = double>
BasicTensorState<Real> random_pure_state(Systems systems, std::uint64_t seed) {
    const Eigen::Index d = detail::total_dimension(systems);
    std::mt19937_64 rng(seed);
    std::normal_distribution<Real> gauss(Real(0), Real(1));
    typename BasicTensorState<Real>::Vector v(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const Real re = gauss(rng);
        const Real im = gauss(rng);
        v(i) = {re, im};
    }
    return BasicTensorState<Real>::normalized(std::move(systems), std::move(v));
}

inline Systems qudits(const std::vector<Eigen::Index> &dims, const std::string &prefix = "X") {
    Systems out;
    for (std::size_t i = 0; i < dims.size(); ++i) out.push_back({prefix + std::to_string(i + 1), dims[i]});
    return out;
}

inline const std::string kAncillaLabel = "#ancilla";

/// Marginal of a random pure state on `systems` plus an ancilla of the given dimension.
template <typename Real = double>
BasicDensityMatrix<Real> random_density(Systems systems, Eigen::Index ancilla_dim, std::uint64_t seed) {
    Systems all = systems;
    all.push_back({kAncillaLabel, ancilla_dim});
    const auto state = random_pure_state<Real>(all, seed);
    Labels keep;
    for (const auto &s : systems) keep.push_back(s.label);
    return partial_trace(state, keep);
}

template <typename Real>
BasicTensorState<Real> tensor(const BasicTensorState<Real> &a, const BasicTensorState<Real> &b) {
    Systems systems = a.systems();
    systems.insert(systems.end(), b.systems().begin(), b.systems().end());
    typename BasicTensorState<Real>::Vector v(a.dimension() * b.dimension());
    for (Eigen::Index i = 0; i < a.dimension(); ++i) v.segment(i * b.dimension(), b.dimension()) = a.amplitudes()(i) * b.amplitudes();
    return BasicTensorState<Real>(std::move(systems), std::move(v));
}

/// Computational basis state with the given digits.
template <typename Real = double>
BasicTensorState<Real> basis_state(Systems systems, const std::vector<Eigen::Index> &digits) {
    const Eigen::Index d = detail::total_dimension(systems);
    if (digits.size() != systems.size()) fail(Errc::InvalidArgument, "one digit per subsystem required");
    Eigen::Index idx = 0;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= systems[i].dim) fail(Errc::InvalidArgument, "digit out of range");
        idx = idx * systems[i].dim + digits[i];
    }
    typename BasicTensorState<Real>::Vector v = BasicTensorState<Real>::Vector::Zero(d);
    v(idx) = 1;
    return BasicTensorState<Real>(std::move(systems), std::move(v));
}

/// (1/sqrt q) sum_j |j>|j>.
template <typename Real = double>
BasicTensorState<Real> max_entangled(const std::string &a, const std::string &b, Eigen::Index q) {
    typename BasicTensorState<Real>::Vector v = BasicTensorState<Real>::Vector::Zero(q * q);
    for (Eigen::Index j = 0; j < q; ++j) v(j * q + j) = Real(1) / std::sqrt(Real(q));
    return BasicTensorState<Real>({{a, q}, {b, q}}, std::move(v));
}

}  // namespace singleton_lab::qstate

#endif
