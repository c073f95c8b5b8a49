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

#ifndef SINGLETON_LAB_GF_H
#define SINGLETON_LAB_GF_H

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace singleton_lab::gf {

/// Field elements are indices 0..q-1. Index v encodes the polynomial
/// sum_i c_i x^i over GF(p) with v = sum_i c_i p^i, so 0 and 1 are the
/// additive and multiplicative identities and the prime subfield occupies 0..p-1.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

bool is_prime(std::uint64_t n);

/// GF(p^m) with table-driven multiplication.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree m, comparing coefficient sequences from x^{m-1} down to x^0.
class GaloisField {
  public:
    /// Throws NonPrimeCharacteristic or FieldTooLarge.
    static std::shared_ptr<const GaloisField> make(unsigned p, unsigned m);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    Elem order() const { return q_; }
    /// Coefficients c_0..c_m of the modulus, c_m = 1.
    const std::vector<unsigned> &modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws InvalidArgument for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Coefficient digits c_0..c_{m-1} of an element.
    std::vector<unsigned> digits(Elem a) const;

  private:
    GaloisField(unsigned p, unsigned m, std::vector<unsigned> modulus);

    unsigned p_;
    unsigned m_;
    Elem q_;
    std::vector<unsigned> modulus_;
    std::vector<Elem> exp_;  // length 2(q-1)
    std::vector<Elem> log_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Convenience alias for make().
FieldPtr make_field(unsigned p, unsigned m);

/// Monic polynomials over GF(p), coefficient vectors low-to-high.
bool is_irreducible(const std::vector<unsigned> &poly, unsigned p);

/// Linear [n,k] code given by a k x n generator matrix of full row rank.
class LinearCode {
  public:
    /// Throws InvalidArgument if the generator rows are not independent or
    /// the matrix shape is inconsistent.
    LinearCode(FieldPtr field, std::vector<std::vector<Elem>> generator, bool mds = false);

    const GaloisField &field() const { return *field_; }
    const FieldPtr &field_ptr() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return generator_.size(); }
    bool is_mds() const { return mds_; }
    const std::vector<std::vector<Elem>> &generator() const { return generator_; }

    std::vector<Elem> encode(std::span<const Elem> message) const;

  private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<std::vector<Elem>> generator_;
    bool mds_;
};

/// Evaluation code of polynomials of degree < k on field elements 0..n-1.
/// Throws LengthExceedsField if n > q, InvalidArgument unless 1 <= k <= n.
LinearCode reed_solomon(const FieldPtr &field, std::size_t n, std::size_t k);

inline constexpr std::uint64_t kMinDistanceBudget = 1u << 20;

/// Minimum Hamming weight over all nonzero codewords, by enumeration.
/// Throws EnumerationBudgetExceeded when q^k exceeds `budget`.
std::size_t min_distance(const LinearCode &code, std::uint64_t budget = kMinDistanceBudget);

/// Received word: nullopt marks an erased coordinate.
using Received = std::vector<std::optional<Elem>>;

/// Recovers the message from the unerased coordinates.
/// Throws TooManyErasures if the surviving coordinates do not determine the
/// message and InconsistentReceived if no message matches them.
std::vector<Elem> erasure_decode(const LinearCode &code, const Received &received);

/// Rank over the field; rows are copied.
std::size_t rank(const GaloisField &field, std::vector<std::vector<Elem>> rows);

}  // namespace singleton_lab::gf

#endif
