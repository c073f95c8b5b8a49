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

#ifndef SINGLETON_LAB_BOUNDS_H
#define SINGLETON_LAB_BOUNDS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

namespace singleton_lab::bounds {

using Rational = boost::rational<std::int64_t>;

/// "3/4", "-1/2", "2".
std::string to_string(const Rational &r);
/// Accepts "p/q" or an integer; throws ParseError.
Rational parse_rational(std::string_view text);

/// Parameters [[n,k,d;c]]_q. k = log_q K and c is the net number of
/// maximally entangled qudit pairs consumed (negative means generated).
struct CodeParams {
    int n = 1;
    Rational k = 0;
    int d = 1;
    Rational c = 0;
    int q = 2;
    std::optional<bool> pure;
    std::string source;

    /// Throws InvalidParams unless n >= 1, 1 <= d <= n+1, 0 <= k <= n, q >= 2.
    void validate() const;
    /// (d-1)/n
    Rational delta() const { return Rational(d - 1, n); }
    /// "[[4,1,3;1]]_2"
    std::string str() const;

    auto key() const { return std::make_tuple(q, n, k, d, c, pure.has_value() ? (*pure ? 2 : 1) : 0); }
    bool same_parameters(const CodeParams &o) const {
        return n == o.n && k == o.k && d == o.d && c == o.c && q == o.q;
    }
};

enum class BoundId {
    EaSingleton,    // k <= c + max{0, n-2d+2}
    Transmission,   // k <= n-d+1
    Piecewise,      // k <= (n-d+1)(c+2d-2-n)/(3d-3-n), only when 2(d-1) >= n
    PureSingleton,  // k <= n-2d+2+c, only for pure codes
};

std::string_view bound_name(BoundId id);
inline constexpr BoundId kAllBounds[] = {BoundId::EaSingleton, BoundId::Transmission, BoundId::Piecewise,
                                         BoundId::PureSingleton};

template <typename Number>
struct BoundRecord {
    BoundId id;
    bool applicable = false;
    Number lhs{};
    Number rhs{};
    bool satisfied = true;
    bool tight = false;
};

template <typename Number>
struct BasicBoundVerdict {
    std::vector<BoundRecord<Number>> bounds;
    bool admissible = true;
    /// Admissible and tight on the general upper boundary (the pure-code
    /// bound does not count). Admissible is a necessary condition only.
    bool eaqmds = false;
    std::vector<BoundId> violating;
    std::vector<BoundId> inapplicable;

    const BoundRecord<Number> &at(BoundId id) const {
        for (const auto &b : bounds) {
            if (b.id == id) return b;
        }
        return bounds.front();
    }
};

using BoundVerdict = BasicBoundVerdict<Rational>;
using EntropicVerdict = BasicBoundVerdict<double>;

inline constexpr double kEntropicTolerance = 1e-9;

/// Exact evaluation of every bound on integer-rational parameters.
BoundVerdict classify(const CodeParams &params);

/// Same bounds with the alphabet entropy log2 q replaced by the measured
/// average block entropies; all quantities in bits, compared at 1e-9.
/// sigma_bar averages (d-1)-blocks, sigma_bar_bar (n-d+1)-blocks.
/// Throws SigmaOutOfRange unless both lie in [0, log2 q].
EntropicVerdict entropic_classify(const CodeParams &params, double sigma_bar, double sigma_bar_bar);

/// Largest net entanglement generation, in bits, of a catalytic code:
/// max{0, (n-2d+2) sigma_bar}.
double catalytic_generation_limit(int n, int d, double sigma_bar);

// --- rate regions ---------------------------------------------------------

enum class Regime { BelowHalf, Half, AboveHalf };
std::string_view regime_name(Regime r);

struct Point {
    Rational x;
    Rational y;
    std::string name;
};

/// a x + b y <= beta.
struct HalfPlane {
    Rational a;
    Rational b;
    Rational beta;
    std::string name;
    /// False for annotation lines that do not bound the region.
    bool boundary = true;

    bool contains(const Rational &x, const Rational &y) const { return a * x + b * y <= beta; }
    bool on_line(const Rational &x, const Rational &y) const { return a * x + b * y == beta; }
};

enum class Attainability { Attained, Open };

/// Boundary piece from vertex `from` to vertex `to`; `to` == vertices.size()
/// denotes the horizontal ray to the right of the last vertex.
struct Segment {
    std::size_t from;
    std::size_t to;
    std::string bound;
    Attainability status;
};

/// Admissible (ebit rate x = c/n, qudit rate y = k/n) pairs for fixed delta.
struct RateRegion {
    Rational delta;
    Regime regime;
    std::vector<Point> vertices;
    std::vector<HalfPlane> half_planes;
    std::vector<Point> annotations;
    std::vector<Segment> segments;
};

/// Throws DeltaOutOfRange unless 0 <= delta <= 1.
RateRegion rate_region(const Rational &delta);

/// All boundary half-planes and y >= 0.
bool region_contains(const RateRegion &region, const Rational &x, const Rational &y);

/// Rows `kind,name,...` with `#` header comments.
void write_region_csv(const RateRegion &region, std::ostream &out);
/// Static plot on x in [-1, 1], y in [0, 1].
void write_region_svg(const RateRegion &region, std::ostream &out);

}  // namespace singleton_lab::bounds

#endif
