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

#include "singleton_lab/stabilizer.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "singleton_lab/error.h"
#include "singleton_lab/gf.h"
#include "singleton_lab/subsets.h"

namespace singleton_lab::stabilizer {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

void check_word(const PauliWord &w, unsigned q, std::size_t n) {
    if (w.q != q || w.x.size() != n || w.z.size() != n) {
        fail(Errc::InvalidArgument, "Pauli word '" + w.str() + "' does not match the code shape");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (w.x[i] >= q || w.z[i] >= q) fail(Errc::InvalidArgument, "Pauli exponent out of range");
    }
}

// Applies the averaging map (1/q) sum_a g^a to the columns of m.
Eigen::MatrixXcd average_powers(const Monomial &g, unsigned q, const Eigen::MatrixXcd &m) {
    Eigen::MatrixXcd acc = m;
    Eigen::MatrixXcd power = m;
    for (unsigned a = 1; a < q; ++a) {
        power = g.apply(power);
        acc += power;
    }
    return acc / static_cast<double>(q);
}

}  // namespace

std::size_t PauliWord::weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x.size(); ++i) w += (x[i] != 0 || z[i] != 0) ? 1 : 0;
    return w;
}

PauliWord PauliWord::parse(std::string_view text, unsigned q) {
    PauliWord w;
    w.q = q;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        if (text.front() == '-') w.phase = q;
        text.remove_prefix(1);
    }
    const auto bar = text.find('|');
    if (bar == std::string_view::npos) {
        if (q != 2) fail(Errc::ParseError, "letter notation is only defined for qubits: '" + std::string(text) + "'");
        for (char ch : text) {
            switch (ch) {
                case 'I': w.x.push_back(0); w.z.push_back(0); break;
                case 'X': w.x.push_back(1); w.z.push_back(0); break;
                case 'Z': w.x.push_back(0); w.z.push_back(1); break;
                case 'Y':
                    w.x.push_back(1);
                    w.z.push_back(1);
                    w.phase = (w.phase + 1) % 4;
                    break;
                default: fail(Errc::ParseError, std::string("bad Pauli letter '") + ch + "'");
            }
        }
        return w;
    }
    const auto xs = text.substr(0, bar);
    const auto zs = text.substr(bar + 1);
    if (xs.size() != zs.size()) fail(Errc::ParseError, "x and z parts differ in length: '" + std::string(text) + "'");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < '0' || xs[i] > '9' || zs[i] < '0' || zs[i] > '9') {
            fail(Errc::ParseError, "bad exponent digit in '" + std::string(text) + "'");
        }
        const unsigned xv = static_cast<unsigned>(xs[i] - '0');
        const unsigned zv = static_cast<unsigned>(zs[i] - '0');
        if (xv >= q || zv >= q) fail(Errc::ParseError, "exponent exceeds q-1 in '" + std::string(text) + "'");
        w.x.push_back(xv);
        w.z.push_back(zv);
    }
    return w;
}

std::string PauliWord::str() const {
    if (q == 2) {
        // Y carries its own factor of i; print the residual phase only.
        unsigned residual = phase;
        std::string letters;
        for (std::size_t i = 0; i < n(); ++i) {
            if (x[i] && z[i]) {
                letters += 'Y';
                residual = (residual + 3) % 4;
            } else {
                letters += x[i] ? 'X' : (z[i] ? 'Z' : 'I');
            }
        }
        const std::string sign = (residual == 0) ? "" : (residual == 2 ? "-" : (residual == 1 ? "i" : "-i"));
        return sign + letters;
    }
    std::string out = (phase == 0) ? "" : (phase == q ? "-" : "(" + std::to_string(phase) + ")");
    for (auto v : x) out += static_cast<char>('0' + v);
    out += '|';
    for (auto v : z) out += static_cast<char>('0' + v);
    return out;
}

unsigned symplectic_product(const PauliWord &a, const PauliWord &b) {
    if (a.q != b.q || a.n() != b.n()) fail(Errc::InvalidArgument, "Pauli words of different shape");
    const unsigned q = a.q;
    unsigned s = 0;
    for (std::size_t i = 0; i < a.n(); ++i) {
        s = (s + a.z[i] * b.x[i] + (q - (a.x[i] * b.z[i]) % q)) % q;
    }
    return s;
}

Monomial Monomial::of(const PauliWord &word) {
    const unsigned q = word.q;
    const std::size_t n = word.n();
    Eigen::Index d = 1;
    for (std::size_t i = 0; i < n; ++i) d *= q;
    Monomial m;
    m.target.resize(static_cast<std::size_t>(d));
    m.factor.resize(d);
    std::vector<unsigned> digits(n, 0);
    for (Eigen::Index t = 0; t < d; ++t) {
        Eigen::Index rem = t;
        for (std::size_t i = n; i-- > 0;) {
            digits[i] = static_cast<unsigned>(rem % q);
            rem /= q;
        }
        Eigen::Index target = 0;
        unsigned e = 0;
        for (std::size_t i = 0; i < n; ++i) {
            target = target * q + (digits[i] + word.x[i]) % q;
            e = (e + word.z[i] * digits[i]) % q;
        }
        m.target[static_cast<std::size_t>(t)] = target;
        const double angle = std::numbers::pi * static_cast<double>(word.phase + 2 * e) / static_cast<double>(q);
        m.factor(t) = std::polar(1.0, angle);
    }
    return m;
}

Eigen::MatrixXcd Monomial::apply(const Eigen::MatrixXcd &columns) const {
    Eigen::MatrixXcd out(columns.rows(), columns.cols());
    for (Eigen::Index t = 0; t < columns.rows(); ++t) {
        out.row(target[static_cast<std::size_t>(t)]) = factor(t) * columns.row(t);
    }
    return out;
}

Eigen::MatrixXcd Monomial::dense() const {
    const auto d = factor.size();
    return apply(Eigen::MatrixXcd::Identity(d, d));
}

StabilizerCode::StabilizerCode(unsigned q, std::size_t n, std::vector<PauliWord> generators)
    : q_(q), n_(n), generators_(std::move(generators)) {
    if (!gf::is_prime(q)) fail(Errc::InvalidArgument, "stabilizer codes need a prime local dimension");
    if (n == 0) fail(Errc::InvalidArgument, "code length must be positive");
    if (generators_.size() > n) fail(Errc::DependentGenerators, "more generators than qudits");
    for (const auto &g : generators_) {
        check_word(g, q, n);
        // g^q must be the identity, else the averaging map is not a projector.
        unsigned parity = g.phase;
        if (q == 2) {
            for (std::size_t i = 0; i < n; ++i) parity += g.x[i] * g.z[i];
        }
        if (parity % 2 != 0) fail(Errc::InconsistentPhases, "generator " + g.str() + " does not have order q");
    }
    for (std::size_t a = 0; a < generators_.size(); ++a) {
        for (std::size_t b = a + 1; b < generators_.size(); ++b) {
            if (!commute(generators_[a], generators_[b])) {
                fail(Errc::NonCommutingGenerators,
                     "generators " + generators_[a].str() + " and " + generators_[b].str() + " do not commute");
            }
        }
    }
    if (!generators_.empty()) {
        const auto field = gf::make_field(q, 1);
        std::vector<std::vector<gf::Elem>> rows;
        for (const auto &g : generators_) {
            std::vector<gf::Elem> row(g.x.begin(), g.x.end());
            row.insert(row.end(), g.z.begin(), g.z.end());
            rows.push_back(std::move(row));
        }
        if (gf::rank(*field, rows) != generators_.size()) {
            fail(Errc::DependentGenerators, "generators are not independent");
        }
    }
}

std::uint64_t StabilizerCode::physical_dimension() const {
    return saturating_pow(q_, n_, static_cast<std::uint64_t>(qstate::kMaxDimension));
}

std::uint64_t StabilizerCode::logical_dimension() const {
    return saturating_pow(q_, k(), static_cast<std::uint64_t>(qstate::kMaxDimension));
}

Eigen::MatrixXcd build_projector(const StabilizerCode &code) {
    const std::uint64_t d = code.physical_dimension();
    if (d > kProjectorBudget) fail(Errc::DimensionBudgetExceeded, "q^n exceeds 2^12 for a dense projector");
    const auto dim = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd pi = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &g : code.generators()) pi = average_powers(Monomial::of(g), code.q(), pi);
    return pi;
}

Eigen::MatrixXcd code_basis(const StabilizerCode &code) {
    const std::uint64_t d = code.physical_dimension();
    if (d > static_cast<std::uint64_t>(qstate::kMaxDimension)) {
        fail(Errc::DimensionBudgetExceeded, "q^n exceeds the dense dimension cap");
    }
    const auto dim = static_cast<Eigen::Index>(d);
    const auto logical = static_cast<Eigen::Index>(code.logical_dimension());
    std::vector<Monomial> gens;
    for (const auto &g : code.generators()) gens.push_back(Monomial::of(g));

    Eigen::MatrixXcd basis(dim, logical);
    Eigen::Index found = 0;
    for (Eigen::Index t = 0; t < dim && found < logical; ++t) {
        Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dim, 1);
        v(t, 0) = 1.0;
        for (const auto &g : gens) v = average_powers(g, code.q(), v);
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index j = 0; j < found; ++j) v.col(0) -= basis.col(j) * basis.col(j).dot(v.col(0));
        }
        const double norm = v.col(0).norm();
        if (norm > 1e-6) basis.col(found++) = v.col(0) / norm;
    }
    if (found != logical) fail(Errc::InconsistentPhases, "code space is smaller than q^k");
    return basis;
}

qstate::Labels physical_labels(std::size_t n) {
    qstate::Labels out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("X" + std::to_string(i + 1));
    return out;
}

qstate::TensorState purified_code_state(const StabilizerCode &code) {
    const std::uint64_t total = code.physical_dimension() * code.logical_dimension();
    if (total > static_cast<std::uint64_t>(qstate::kMaxDimension)) {
        fail(Errc::DimensionBudgetExceeded, "q^(n+k) exceeds the dense dimension cap");
    }
    const Eigen::MatrixXcd basis = code_basis(code);
    const Eigen::Index dim = basis.rows();
    const Eigen::Index logical = basis.cols();
    qstate::Systems systems{{kReferenceLabel, logical}};
    for (const auto &label : physical_labels(code.n())) systems.push_back({label, static_cast<Eigen::Index>(code.q())});
    Eigen::VectorXcd amplitudes(dim * logical);
    for (Eigen::Index i = 0; i < logical; ++i) {
        amplitudes.segment(i * dim, dim) = basis.col(i) / std::sqrt(static_cast<double>(logical));
    }
    return qstate::TensorState::normalized(std::move(systems), std::move(amplitudes));
}

KnillLaflammeVerdict knill_laflamme_check(const StabilizerCode &code, std::size_t d) {
    const std::size_t n = code.n();
    const unsigned q = code.q();
    const std::size_t max_weight = d == 0 ? 0 : std::min(d - 1, n);
    const std::uint64_t per_site = static_cast<std::uint64_t>(q) * q - 1;

    std::uint64_t total = 0;
    for (std::size_t w = 1; w <= max_weight; ++w) {
        std::uint64_t count = binomial(n, w);
        for (std::size_t i = 0; i < w && count <= kErrorEnumerationBudget; ++i) count *= per_site;
        total += count;
        if (total > kErrorEnumerationBudget) {
            fail(Errc::EnumerationBudgetExceeded, "more than 10^6 error words of weight < d");
        }
    }

    const Eigen::MatrixXcd basis = code_basis(code);
    const double logical = static_cast<double>(basis.cols());

    KnillLaflammeVerdict verdict;
    verdict.distance_at_least = true;
    verdict.pure = true;

    PauliWord word{q, std::vector<unsigned>(n, 0), std::vector<unsigned>(n, 0), 0};
    for (std::size_t w = 1; w <= max_weight; ++w) {
        bool stop = false;
        for_each_subset(n, w, [&](const std::vector<std::size_t> &support) {
            if (stop) return;
            // Per-site exponent pair counters, each in 1..q^2-1.
            std::vector<std::uint64_t> value(w, 1);
            while (true) {
                std::fill(word.x.begin(), word.x.end(), 0u);
                std::fill(word.z.begin(), word.z.end(), 0u);
                for (std::size_t s = 0; s < w; ++s) {
                    word.x[support[s]] = static_cast<unsigned>(value[s] / q);
                    word.z[support[s]] = static_cast<unsigned>(value[s] % q);
                }
                const Eigen::MatrixXcd m = basis.adjoint() * Monomial::of(word).apply(basis);
                const std::complex<double> c = m.trace() / logical;
                const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
                const double deviation = (m - c * id).cwiseAbs().maxCoeff();
                ++verdict.words_checked;
                if (deviation > kKnillLaflammeTolerance) {
                    verdict.distance_at_least = false;
                    verdict.pure = false;
                    verdict.witness = word;
                    stop = true;
                    return;
                }
                if (std::abs(c) > kKnillLaflammeTolerance && verdict.pure) {
                    verdict.pure = false;
                    verdict.impurity_witness = word;
                }
                std::size_t s = 0;
                while (s < w && ++value[s] > per_site) {
                    value[s] = 1;
                    ++s;
                }
                if (s == w) break;
            }
        });
        if (stop) break;
    }
    return verdict;
}

std::vector<CorpusEntry> parse_corpus(std::istream &in) {
    std::vector<CorpusEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name)) continue;
        unsigned q = 0;
        std::size_t n = 0;
        std::size_t distance = 0;
        std::string purity;
        if (!(fields >> q >> n >> distance >> purity) || (purity != "pure" && purity != "impure")) {
            fail(Errc::ParseError, "corpus line " + std::to_string(lineno) + " is malformed");
        }
        std::vector<PauliWord> gens;
        std::string token;
        while (fields >> token) gens.push_back(PauliWord::parse(token, q));
        out.push_back({name, StabilizerCode(q, n, std::move(gens)), distance, purity == "pure"});
    }
    return out;
}

namespace {

constexpr const char *kBuiltinCorpus = R"(
# name          q n distance purity generators
five-qubit      2 5 3 pure   XZZXI IXZZX XIXZZ ZXIXZ
four-qubit      2 4 2 pure   XXXX ZZZZ
qutrit-three    3 3 2 pure   111|000 000|111
trivial-qubit   2 1 1 pure
trivial-z       2 1 2 impure Z
product-zz      2 2 3 impure ZI IZ
)";

}  // namespace

const std::vector<CorpusEntry> &corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::istringstream in(kBuiltinCorpus);
        return parse_corpus(in);
    }();
    return entries;
}

const CorpusEntry &corpus_entry(std::string_view name) {
    for (const auto &e : corpus()) {
        if (e.name == name) return e;
    }
    fail(Errc::InvalidArgument, "no corpus code named '" + std::string(name) + "'");
}

}  // namespace singleton_lab::stabilizer
