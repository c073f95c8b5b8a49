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

#include "singleton_lab/gf.h"

#include <algorithm>
#include <string>

#include "singleton_lab/error.h"

namespace singleton_lab::gf {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_mod(Poly a, const Poly &b, unsigned p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + (p - (lead * b[i]) % p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly monic_from_index(std::uint64_t t, unsigned degree, unsigned p) {
    Poly poly(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        poly[i] = static_cast<unsigned>(t % p);
        t /= p;
    }
    poly[degree] = 1;
    return poly;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(const std::vector<unsigned> &poly, unsigned p) {
    Poly a = poly;
    trim(a);
    if (a.size() < 2) return false;
    const unsigned degree = static_cast<unsigned>(a.size() - 1);
    for (unsigned dd = 1; dd <= degree / 2; ++dd) {
        const std::uint64_t count = ipow(p, dd);
        for (std::uint64_t t = 0; t < count; ++t) {
            if (poly_mod(a, monic_from_index(t, dd, p), p).empty()) return false;
        }
    }
    return true;
}

GaloisField::GaloisField(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(static_cast<Elem>(ipow(p, m))), modulus_(std::move(modulus)) {
    // Multiply two elements by schoolbook polynomial product then reduction.
    auto slow_mul = [this](Elem a, Elem b) {
        const auto da = digits(a);
        const auto db = digits(b);
        Poly prod(2 * m_, 0);
        for (unsigned i = 0; i < m_; ++i) {
            for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        const Poly r = poly_mod(prod, modulus_, p_);
        Elem v = 0;
        for (std::size_t i = r.size(); i-- > 0;) v = v * p_ + r[i];
        return v;
    };

    const Elem group = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(2 * group, 0);
    for (Elem g = 1; g < q_; ++g) {
        Elem x = 1;
        Elem order = 0;
        do {
            exp_[order] = x;
            x = slow_mul(x, g);
            ++order;
        } while (x != 1 && order < group);
        if (x == 1 && order == group) break;
    }
    for (Elem i = 0; i < group; ++i) {
        log_[exp_[i]] = i;
        exp_[i + group] = exp_[i];
    }
}

std::shared_ptr<const GaloisField> GaloisField::make(unsigned p, unsigned m) {
    if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) fail(Errc::InvalidArgument, "field degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            fail(Errc::FieldTooLarge,
                 "field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
        }
    }
    const std::uint64_t candidates = ipow(p, m);
    for (std::uint64_t t = 0; t < candidates; ++t) {
        Poly poly = monic_from_index(t, m, p);
        if (is_irreducible(poly, p)) {
            return std::shared_ptr<const GaloisField>(new GaloisField(p, m, std::move(poly)));
        }
    }
    fail(Errc::InvalidArgument, "no irreducible polynomial found");
}

FieldPtr make_field(unsigned p, unsigned m) { return GaloisField::make(p, m); }

std::vector<unsigned> GaloisField::digits(Elem a) const {
    std::vector<unsigned> d(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem GaloisField::add(Elem a, Elem b) const {
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Elem r = 0;
    Elem scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem GaloisField::neg(Elem a) const {
    if (m_ == 1) return (p_ - a) % p_;
    Elem r = 0;
    Elem scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem GaloisField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Elem GaloisField::inv(Elem a) const {
    if (a == 0) fail(Errc::InvalidArgument, "zero has no multiplicative inverse");
    const Elem group = q_ - 1;
    return exp_[(group - log_[a]) % group];
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t group = q_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % group)) % group];
}

std::size_t rank(const GaloisField &field, std::vector<std::vector<Elem>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Elem inv = field.inv(rows[r][col]);
        for (auto &v : rows[r]) v = field.mul(v, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Elem f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[r][j]));
        }
        ++r;
    }
    return r;
}

LinearCode::LinearCode(FieldPtr field, std::vector<std::vector<Elem>> generator, bool mds)
    : field_(std::move(field)), n_(generator.empty() ? 0 : generator.front().size()),
      generator_(std::move(generator)), mds_(mds) {
    if (!field_) fail(Errc::InvalidArgument, "linear code needs a field");
    for (const auto &row : generator_) {
        if (row.size() != n_) fail(Errc::InvalidArgument, "generator rows have unequal length");
        for (Elem v : row) {
            if (v >= field_->order()) fail(Errc::InvalidArgument, "generator entry outside the field");
        }
    }
    if (rank(*field_, generator_) != generator_.size()) {
        fail(Errc::InvalidArgument, "generator matrix does not have full row rank");
    }
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
    if (message.size() != k()) fail(Errc::InvalidArgument, "message length differs from code dimension");
    std::vector<Elem> word(n_, 0);
    for (std::size_t i = 0; i < k(); ++i) {
        if (message[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) word[j] = field_->add(word[j], field_->mul(message[i], generator_[i][j]));
    }
    return word;
}

LinearCode reed_solomon(const FieldPtr &field, std::size_t n, std::size_t k) {
    if (n > field->order()) {
        fail(Errc::LengthExceedsField,
             "length " + std::to_string(n) + " exceeds field order " + std::to_string(field->order()));
    }
    if (k < 1 || k > n) fail(Errc::InvalidArgument, "Reed-Solomon dimension must satisfy 1 <= k <= n");
    std::vector<std::vector<Elem>> g(k, std::vector<Elem>(n));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) g[i][j] = field->pow(static_cast<Elem>(j), i);
    }
    return LinearCode(field, std::move(g), true);
}

std::size_t min_distance(const LinearCode &code, std::uint64_t budget) {
    const std::size_t k = code.k();
    if (k == 0) fail(Errc::InvalidArgument, "minimum distance of a zero-dimensional code is undefined");
    const auto &field = code.field();
    const std::uint64_t q = field.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > budget) {
            fail(Errc::EnumerationBudgetExceeded, "q^k exceeds the budget of " + std::to_string(budget) + " messages");
        }
    }
    // A base-q counter over messages; a digit moving from a to b adds (b - a) times its row.
    std::size_t best = code.n();
    std::vector<Elem> message(k, 0);
    std::vector<Elem> word(code.n(), 0);
    for (std::uint64_t t = 1; t < total; ++t) {
        for (std::size_t i = 0; i < k; ++i) {
            const Elem next = message[i] + 1 < q ? static_cast<Elem>(message[i] + 1) : 0;
            const Elem step = field.sub(next, message[i]);
            const auto &row = code.generator()[i];
            for (std::size_t j = 0; j < word.size(); ++j) word[j] = field.add(word[j], field.mul(step, row[j]));
            message[i] = next;
            if (next != 0) break;
        }
        const auto weight = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem v) { return v != 0; }));
        best = std::min(best, weight);
    }
    return best;
}

std::vector<Elem> erasure_decode(const LinearCode &code, const Received &received) {
    const auto &field = code.field();
    const std::size_t k = code.k();
    if (received.size() != code.n()) fail(Errc::InvalidArgument, "received word length differs from n");

    // Augmented system: one row per surviving coordinate j, sum_i m_i G[i][j] = r_j.
    std::vector<std::vector<Elem>> rows;
    for (std::size_t j = 0; j < code.n(); ++j) {
        if (!received[j]) continue;
        if (*received[j] >= field.order()) fail(Errc::InvalidArgument, "received symbol outside the field");
        std::vector<Elem> row(k + 1);
        for (std::size_t i = 0; i < k; ++i) row[i] = code.generator()[i][j];
        row[k] = *received[j];
        rows.push_back(std::move(row));
    }
    if (rows.size() < k) {
        fail(Errc::TooManyErasures, std::to_string(code.n() - rows.size()) + " erasures leave fewer than k=" +
                                        std::to_string(k) + " coordinates");
    }

    std::size_t r = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < k && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Elem inv = field.inv(rows[r][col]);
        for (auto &v : rows[r]) v = field.mul(v, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Elem f = rows[i][col];
            for (std::size_t j = 0; j <= k; ++j) rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[r][j]));
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][k] != 0) fail(Errc::InconsistentReceived, "no message matches the unerased coordinates");
    }
    if (r < k) fail(Errc::TooManyErasures, "surviving coordinates do not determine the message");

    std::vector<Elem> message(k);
    for (std::size_t i = 0; i < k; ++i) message[pivot_cols[i]] = rows[i][k];
    return message;
}

}  // namespace singleton_lab::gf
