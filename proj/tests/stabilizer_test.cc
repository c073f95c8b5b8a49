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

#include <sstream>

#include "gtest/gtest.h"

#include "singleton_lab/verify.h"
#include "test_util.h"

using namespace singleton_lab;
using namespace singleton_lab::stabilizer;
using singleton_lab::testing::code_of;

namespace {

StabilizerCode five_qubit() { return corpus_entry("five-qubit").code; }

std::vector<PauliWord> words(std::initializer_list<const char *> texts, unsigned q = 2) {
    std::vector<PauliWord> out;
    for (auto t : texts) out.push_back(PauliWord::parse(t, q));
    return out;
}

bool is_projector(const Eigen::MatrixXcd &p, double trace) {
    return (p * p - p).norm() < 1e-9 && std::abs(p.trace().real() - trace) < 1e-9 &&
           (p - p.adjoint()).norm() < 1e-9;
}

}  // namespace

TEST(pauli, parse_and_print) {
    auto y = PauliWord::parse("Y", 2);
    EXPECT_EQ(y.x, (std::vector<unsigned>{1}));
    EXPECT_EQ(y.z, (std::vector<unsigned>{1}));
    EXPECT_EQ(y.phase, 1u);
    for (auto text : {"XZZXI", "-IYZ", "YYY", "I"}) EXPECT_EQ(PauliWord::parse(text, 2).str(), text);
    EXPECT_EQ(PauliWord::parse("12|01", 3).str(), "12|01");
    EXPECT_EQ(PauliWord::parse("XZZXI", 2).weight(), 4u);
    EXPECT_EQ(code_of([] { PauliWord::parse("XQ", 2); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { PauliWord::parse("13|00", 3); }), Errc::ParseError);
}

TEST(pauli, commutation_matches_dense) {
    const auto all = words({"XI", "ZI", "YI", "XX", "ZZ", "XZ", "YY", "IY", "ZX"});
    for (const auto &a : all) {
        for (const auto &b : all) {
            const auto ma = Monomial::of(a).dense();
            const auto mb = Monomial::of(b).dense();
            const bool dense_commute = (ma * mb - mb * ma).norm() < 1e-12;
            EXPECT_EQ(commute(a, b), dense_commute) << a.str() << " " << b.str();
        }
    }
}

TEST(pauli, dense_is_unitary) {
    for (const auto &w : words({"XYZ", "-YIY"})) {
        const auto m = Monomial::of(w).dense();
        EXPECT_LT((m * m.adjoint() - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-12);
    }
    const auto q3 = Monomial::of(PauliWord::parse("12|21", 3)).dense();
    EXPECT_LT((q3 * q3.adjoint() - Eigen::MatrixXcd::Identity(9, 9)).norm(), 1e-12);
}

TEST(stabilizer, identity_projector) {
    const StabilizerCode code(2, 1, {});
    EXPECT_TRUE(build_projector(code).isApprox(Eigen::MatrixXcd::Identity(2, 2)));
    const StabilizerCode qutrit(3, 1, {});
    EXPECT_NEAR(build_projector(qutrit).trace().real(), 3.0, 1e-12);
}

TEST(stabilizer, z_projector) {
    const StabilizerCode code(2, 1, words({"Z"}));
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(2, 2);
    expect(0, 0) = 1;
    EXPECT_LT((build_projector(code) - expect).norm(), 1e-12);
}

TEST(stabilizer, five_qubit_projector) {
    const auto code = five_qubit();
    EXPECT_EQ(code.k(), 1u);
    EXPECT_TRUE(is_projector(build_projector(code), 2.0));
    const StabilizerCode other_four(2, 5, words({"IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX"}));
    EXPECT_LT((build_projector(other_four) - build_projector(code)).norm(), 1e-9);
}

TEST(stabilizer, corpus_projectors) {
    for (const auto &e : corpus()) {
        EXPECT_TRUE(is_projector(build_projector(e.code), static_cast<double>(e.code.logical_dimension()))) << e.name;
    }
}

TEST(stabilizer, generator_validation) {
    EXPECT_EQ(code_of([] { StabilizerCode(2, 2, words({"XI", "ZI"})); }), Errc::NonCommutingGenerators);
    EXPECT_EQ(code_of([] { StabilizerCode(2, 1, words({"X", "Z"})); }), Errc::DependentGenerators);
    EXPECT_EQ(code_of([] { StabilizerCode(2, 2, words({"ZZ", "-ZZ"})); }), Errc::DependentGenerators);
    EXPECT_EQ(code_of([] { StabilizerCode(2, 2, words({"ZZ", "ZZ"})); }), Errc::DependentGenerators);
    EXPECT_EQ(StabilizerCode(2, 1, words({"Y"})).logical_dimension(), 1u);
    EXPECT_EQ(code_of([] { StabilizerCode(4, 1, {}); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([] { StabilizerCode(2, 2, words({"Z"})); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([] { build_projector(StabilizerCode(2, 13, {})); }), Errc::DimensionBudgetExceeded);
}

TEST(stabilizer, purified_trivial_is_bell) {
    const auto s = purified_code_state(StabilizerCode(2, 1, {}));
    ASSERT_EQ(s.labels(), (qstate::Labels{"R", "X1"}));
    const auto bell = qstate::max_entangled("R", "X1", 2);
    EXPECT_NEAR(std::abs(s.amplitudes().dot(bell.amplitudes())), 1.0, 1e-12);
}

TEST(stabilizer, purified_z_code_is_product) {
    const auto s = purified_code_state(StabilizerCode(2, 1, words({"Z"})));
    ASSERT_EQ(s.systems().front().dim, 1);
    EXPECT_NEAR(std::norm(s.amplitudes()(0)), 1.0, 1e-12);
}

TEST(stabilizer, five_qubit_purified_marginals) {
    const auto s = purified_code_state(five_qubit());
    const auto xs = physical_labels(5);
    const auto x_state = qstate::partial_trace(s, xs);
    EXPECT_LT((x_state.matrix() - build_projector(five_qubit()) / 2.0).norm(), 1e-9);
    EXPECT_LT(verify::max_marginal_deviation(s, xs, 1), 1e-9);
    EXPECT_LT(verify::max_marginal_deviation(s, xs, 2), 1e-9);
    EXPECT_NEAR(qstate::avg_block_entropy(x_state, xs, 2), 1.0, 1e-9);
}

TEST(knill_laflamme, five_qubit) {
    const auto v3 = knill_laflamme_check(five_qubit(), 3);
    EXPECT_TRUE(v3.distance_at_least);
    EXPECT_TRUE(v3.pure);
    EXPECT_FALSE(v3.witness.has_value());
    EXPECT_EQ(v3.words_checked, 105u);
    const auto v4 = knill_laflamme_check(five_qubit(), 4);
    EXPECT_FALSE(v4.distance_at_least);
    ASSERT_TRUE(v4.witness.has_value());
    EXPECT_EQ(v4.witness->weight(), 3u);
}

TEST(knill_laflamme, full_space_corrects_nothing) {
    const auto v = knill_laflamme_check(StabilizerCode(2, 1, {}), 2);
    EXPECT_FALSE(v.distance_at_least);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->weight(), 1u);
    EXPECT_TRUE(knill_laflamme_check(StabilizerCode(2, 1, {}), 1).distance_at_least);
}

TEST(knill_laflamme, impure_detected) {
    const auto v = knill_laflamme_check(corpus_entry("trivial-z").code, 2);
    EXPECT_TRUE(v.distance_at_least);
    EXPECT_FALSE(v.pure);
    ASSERT_TRUE(v.impurity_witness.has_value());
    EXPECT_EQ(v.impurity_witness->str(), "Z");
}

TEST(knill_laflamme, budget) {
    EXPECT_EQ(code_of([] { knill_laflamme_check(StabilizerCode(2, 12, {}), 12); }), Errc::EnumerationBudgetExceeded);
}

TEST(corpus, recorded_verdicts_rederived) {
    for (const auto &e : corpus()) {
        const auto at = knill_laflamme_check(e.code, e.distance);
        EXPECT_TRUE(at.distance_at_least) << e.name;
        EXPECT_EQ(at.pure, e.pure) << e.name;
        if (e.distance <= e.code.n()) {
            EXPECT_FALSE(knill_laflamme_check(e.code, e.distance + 1).distance_at_least) << e.name;
        }
    }
}

TEST(corpus, knill_laflamme_agrees_with_decoupling) {
    for (const auto &e : corpus()) {
        const auto state = purified_code_state(e.code);
        const auto xs = physical_labels(e.code.n());
        for (std::size_t d = 1; d <= e.code.n() + 1; ++d) {
            const auto kl = knill_laflamme_check(e.code, d);
            const auto dec = verify::check_decoupling(state, kReferenceLabel, xs, d);
            EXPECT_EQ(kl.distance_at_least, dec.correctable) << e.name << " d=" << d;
        }
    }
}

TEST(corpus, purity_matches_maximally_mixed_marginals) {
    for (const auto &e : corpus()) {
        const auto state = purified_code_state(e.code);
        const auto xs = physical_labels(e.code.n());
        for (std::size_t d = 2; d <= std::min(e.distance, e.code.n()); ++d) {
            const auto kl = knill_laflamme_check(e.code, d);
            const bool mixed = verify::max_marginal_deviation(state, xs, d - 1) < 1e-9;
            EXPECT_EQ(kl.pure, mixed) << e.name << " d=" << d;
        }
    }
}

TEST(corpus, qmds_codes_are_pure) {
    for (const auto &e : corpus()) {
        const auto n = static_cast<long>(e.code.n());
        const auto d = static_cast<long>(e.distance);
        if (d <= n && static_cast<long>(e.code.k()) == n - 2 * d + 2) EXPECT_TRUE(e.pure) << e.name;
    }
}

TEST(corpus, parse_records) {
    std::istringstream in("# comment\nbell 2 2 2 pure XX ZZ\n\nrep 2 3 1 impure ZZI IZZ\n");
    const auto entries = parse_corpus(in);
    ASSERT_EQ(entries.size(), 2u);
    EXPECT_EQ(entries[0].name, "bell");
    EXPECT_EQ(entries[0].code.k(), 0u);
    EXPECT_FALSE(entries[1].pure);
    std::istringstream bad("broken 2 2 x pure XX\n");
    EXPECT_EQ(code_of([&] { parse_corpus(bad); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { corpus_entry("nope"); }), Errc::InvalidArgument);
}

TEST(corpus, expected_entries) {
    EXPECT_EQ(corpus_entry("four-qubit").code.k(), 2u);
    EXPECT_EQ(corpus_entry("qutrit-three").code.k(), 1u);
    EXPECT_EQ(corpus_entry("qutrit-three").distance, 2u);
}
