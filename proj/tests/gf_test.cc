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

#include <random>

#include "gtest/gtest.h"

#include "singleton_lab/subsets.h"
#include "test_util.h"

using namespace singleton_lab;
using namespace singleton_lab::gf;
using singleton_lab::testing::code_of;

TEST(gf, prime_field_modulus) {
    auto f = make_field(2, 1);
    EXPECT_EQ(f->order(), 2u);
    EXPECT_EQ(f->modulus(), (std::vector<unsigned>{0, 1}));
}

TEST(gf, canonical_moduli) {
    EXPECT_EQ(make_field(2, 2)->modulus(), (std::vector<unsigned>{1, 1, 1}));
    EXPECT_EQ(make_field(2, 3)->modulus(), (std::vector<unsigned>{1, 1, 0, 1}));
    EXPECT_EQ(make_field(3, 2)->modulus(), (std::vector<unsigned>{1, 0, 1}));
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {2, 6}}) {
        EXPECT_TRUE(is_irreducible(make_field(p, m)->modulus(), p)) << p << "^" << m;
    }
}

TEST(gf, construction_errors) {
    EXPECT_EQ(code_of([] { make_field(4, 1); }), Errc::NonPrimeCharacteristic);
    EXPECT_EQ(code_of([] { make_field(1, 1); }), Errc::NonPrimeCharacteristic);
    EXPECT_EQ(code_of([] { make_field(2, 17); }), Errc::FieldTooLarge);
    EXPECT_EQ(make_field(2, 16)->order(), 65536u);
}

TEST(gf, field_axioms_exhaustive) {
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {2, 5}, {2, 6}, {3, 3}}) {
        auto f = make_field(p, m);
        const Elem q = f->order();
        ASSERT_LE(q, 64u);
        for (Elem a = 0; a < q; ++a) {
            EXPECT_EQ(f->add(a, 0), a);
            EXPECT_EQ(f->mul(a, 1), a);
            EXPECT_EQ(f->add(a, f->neg(a)), 0u);
            if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1u) << "q=" << q << " a=" << a;
            for (Elem b = 0; b < q; ++b) {
                EXPECT_EQ(f->add(a, b), f->add(b, a));
                EXPECT_EQ(f->mul(a, b), f->mul(b, a));
                EXPECT_EQ(f->sub(f->add(a, b), b), a);
                if (q <= 16) {
                    for (Elem c = 0; c < q; ++c) {
                        EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
                        EXPECT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
                        EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
                    }
                }
            }
        }
        EXPECT_EQ(code_of([&] { f->inv(0); }), Errc::InvalidArgument);
    }
}

TEST(gf, sampled_associativity_larger_fields) {
    std::mt19937 rng(7);
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 8}, {3, 4}, {7, 2}}) {
        auto f = make_field(p, m);
        std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
        for (int t = 0; t < 2000; ++t) {
            Elem a = pick(rng), b = pick(rng), c = pick(rng);
            ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        }
    }
}

TEST(gf, rs_5_4_2_distance) {
    auto code = reed_solomon(make_field(5, 1), 4, 2);
    EXPECT_TRUE(code.is_mds());
    EXPECT_EQ(min_distance(code), 3u);
}

TEST(gf, rs_full_space) {
    EXPECT_EQ(min_distance(reed_solomon(make_field(2, 1), 2, 2)), 1u);
}

TEST(gf, rs_errors) {
    EXPECT_EQ(code_of([] { reed_solomon(make_field(3, 1), 4, 2); }), Errc::LengthExceedsField);
    EXPECT_EQ(code_of([] { reed_solomon(make_field(5, 1), 3, 4); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([] { reed_solomon(make_field(5, 1), 3, 0); }), Errc::InvalidArgument);
}

TEST(gf, repetition_code) {
    LinearCode rep(make_field(2, 1), {{1, 1, 1}});
    EXPECT_EQ(min_distance(rep), 3u);
}

TEST(gf, zero_dimension_rejected) {
    EXPECT_EQ(code_of([] { min_distance(LinearCode(make_field(2, 1), {})); }), Errc::InvalidArgument);
}

TEST(gf, dependent_generator_rejected) {
    EXPECT_EQ(code_of([] { LinearCode(make_field(3, 1), {{1, 2, 0}, {2, 1, 0}}); }), Errc::InvalidArgument);
}

TEST(gf, min_distance_budget) {
    auto code = reed_solomon(make_field(2, 8), 8, 3);
    EXPECT_EQ(code_of([&] { min_distance(code); }), Errc::EnumerationBudgetExceeded);
}

TEST(gf, rs_min_distance_all_small) {
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}}) {
        auto f = make_field(p, m);
        for (std::size_t n = 1; n <= f->order(); ++n) {
            std::uint64_t messages = 1;
            for (std::size_t k = 1; k <= n; ++k) {
                messages *= f->order();
                if (messages > kMinDistanceBudget) break;
                EXPECT_EQ(min_distance(reed_solomon(f, n, k)), n - k + 1) << "q=" << f->order() << " n=" << n
                                                                          << " k=" << k;
            }
        }
    }
}

static std::vector<Elem> message_of(std::uint64_t index, std::size_t k, Elem q) {
    std::vector<Elem> m(k);
    for (auto &x : m) {
        x = static_cast<Elem>(index % q);
        index /= q;
    }
    return m;
}

TEST(gf, erasure_decode_rs_5_4_2_exhaustive) {
    auto code = reed_solomon(make_field(5, 1), 4, 2);
    std::size_t runs = 0;
    for (std::uint64_t i = 0; i < 25; ++i) {
        const auto msg = message_of(i, 2, 5);
        const auto word = code.encode(msg);
        for_each_subset(4, 2, [&](const std::vector<std::size_t> &erased) {
            Received r(word.begin(), word.end());
            for (auto j : erased) r[j].reset();
            EXPECT_EQ(erasure_decode(code, r), msg);
            ++runs;
        });
        EXPECT_EQ(erasure_decode(code, Received(word.begin(), word.end())), msg);
    }
    EXPECT_EQ(runs, 150u);
}

TEST(gf, erasure_decode_too_many) {
    auto code = reed_solomon(make_field(5, 1), 4, 2);
    auto word = code.encode(std::vector<Elem>{1, 2});
    Received r(word.begin(), word.end());
    r[0].reset();
    r[1].reset();
    r[2].reset();
    EXPECT_EQ(code_of([&] { erasure_decode(code, r); }), Errc::TooManyErasures);
}

TEST(gf, erasure_decode_inconsistent) {
    auto code = reed_solomon(make_field(5, 1), 4, 2);
    auto word = code.encode(std::vector<Elem>{1, 2});
    Received r(word.begin(), word.end());
    r[3] = (*r[3] + 1) % 5;
    EXPECT_EQ(code_of([&] { erasure_decode(code, r); }), Errc::InconsistentReceived);
}

TEST(gf, erasure_decode_roundtrip_all_small) {
    for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}}) {
        auto f = make_field(p, m);
        const Elem q = f->order();
        for (std::size_t n = 1; n <= q; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                std::uint64_t total = 1;
                for (std::size_t i = 0; i < k; ++i) total *= q;
                if (total > 625) continue;
                auto code = reed_solomon(f, n, k);
                for (std::uint64_t i = 0; i < total; ++i) {
                    const auto msg = message_of(i, k, q);
                    const auto word = code.encode(msg);
                    for (std::size_t e = 0; e <= n - k; ++e) {
                        for_each_subset(n, e, [&](const std::vector<std::size_t> &erased) {
                            Received r(word.begin(), word.end());
                            for (auto j : erased) r[j].reset();
                            ASSERT_EQ(erasure_decode(code, r), msg);
                        });
                    }
                }
            }
        }
    }
}

TEST(gf, rank_over_field) {
    auto f = make_field(3, 1);
    EXPECT_EQ(rank(*f, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}), 2u);
    EXPECT_EQ(rank(*f, {}), 0u);
}
