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

#include "singleton_lab/bounds.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "singleton_lab/error.h"

namespace singleton_lab::bounds {

namespace {

double to_double(const Rational &r) { return boost::rational_cast<double>(r); }

template <typename Number>
BoundRecord<Number> make_record(BoundId id, bool applicable, Number lhs, Number rhs) {
    BoundRecord<Number> rec{id, applicable, lhs, rhs};
    if (!applicable) return rec;
    if constexpr (std::is_same_v<Number, double>) {
        rec.satisfied = lhs <= rhs + kEntropicTolerance;
        rec.tight = std::abs(lhs - rhs) <= kEntropicTolerance;
    } else {
        rec.satisfied = lhs <= rhs;
        rec.tight = lhs == rhs;
    }
    return rec;
}

template <typename Number>
void summarize(BasicBoundVerdict<Number> &v) {
    v.admissible = true;
    bool on_boundary = false;
    for (const auto &b : v.bounds) {
        if (!b.applicable) {
            v.inapplicable.push_back(b.id);
            continue;
        }
        if (!b.satisfied) {
            v.admissible = false;
            v.violating.push_back(b.id);
        }
        if (b.tight && b.id != BoundId::PureSingleton) on_boundary = true;
    }
    v.eaqmds = v.admissible && on_boundary;
}

bool large_distance(const CodeParams &p) { return 2 * (p.d - 1) >= p.n; }

}  // namespace

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            fail(Errc::ParseError, "not a rational number: '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const auto num = parse_int(text.substr(0, slash));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

void CodeParams::validate() const {
    if (n < 1) fail(Errc::InvalidParams, "n must be positive in " + str());
    if (d < 1 || d > n + 1) fail(Errc::InvalidParams, "d must satisfy 1 <= d <= n+1 in " + str());
    if (k < 0 || k > n) fail(Errc::InvalidParams, "k must satisfy 0 <= k <= n in " + str());
    if (q < 2) fail(Errc::InvalidParams, "q must be at least 2 in " + str());
}

std::string CodeParams::str() const {
    std::ostringstream os;
    os << "[[" << n << "," << to_string(k) << "," << d << ";" << to_string(c) << "]]_" << q;
    return os.str();
}

std::string_view bound_name(BoundId id) {
    switch (id) {
        case BoundId::EaSingleton: return "ea-singleton";
        case BoundId::Transmission: return "transmission";
        case BoundId::Piecewise: return "piecewise";
        case BoundId::PureSingleton: return "pure-singleton";
    }
    return "?";
}

BoundVerdict classify(const CodeParams &p) {
    p.validate();
    const Rational n(p.n);
    const Rational d(p.d);
    BoundVerdict v;
    v.bounds.push_back(
        make_record(BoundId::EaSingleton, true, p.k, p.c + std::max(Rational(0), n - 2 * d + 2)));
    v.bounds.push_back(make_record(BoundId::Transmission, true, p.k, n - d + 1));
    if (large_distance(p)) {
        v.bounds.push_back(make_record(BoundId::Piecewise, true, p.k,
                                       (n - d + 1) * (p.c + 2 * d - 2 - n) / (3 * d - 3 - n)));
    } else {
        v.bounds.push_back(make_record(BoundId::Piecewise, false, p.k, Rational(0)));
    }
    const bool pure = p.pure.value_or(false);
    v.bounds.push_back(make_record(BoundId::PureSingleton, pure, p.k, pure ? n - 2 * d + 2 + p.c : Rational(0)));
    summarize(v);
    return v;
}

EntropicVerdict entropic_classify(const CodeParams &p, double sigma_bar, double sigma_bar_bar) {
    p.validate();
    const double log_q = std::log2(static_cast<double>(p.q));
    for (double s : {sigma_bar, sigma_bar_bar}) {
        if (!(s >= -kEntropicTolerance && s <= log_q + kEntropicTolerance)) {
            fail(Errc::SigmaOutOfRange, "average block entropy outside [0, log2 q]");
        }
    }
    const double n = p.n;
    const double d = p.d;
    const double log_k = to_double(p.k) * log_q;
    const double ell = to_double(p.c) * log_q;
    EntropicVerdict v;
    v.bounds.push_back(
        make_record(BoundId::EaSingleton, true, log_k, std::max(0.0, n - 2 * d + 2) * sigma_bar + ell));
    v.bounds.push_back(make_record(BoundId::Transmission, true, log_k, (n - d + 1) * sigma_bar_bar));
    if (large_distance(p)) {
        v.bounds.push_back(make_record(BoundId::Piecewise, true, log_k,
                                       (n - d + 1) / (3 * d - 3 - n) * (ell + (2 * d - 2 - n) * sigma_bar_bar)));
    } else {
        v.bounds.push_back(make_record(BoundId::Piecewise, false, log_k, 0.0));
    }
    const bool pure = p.pure.value_or(false);
    v.bounds.push_back(
        make_record(BoundId::PureSingleton, pure, log_k, pure ? (n - 2 * d + 2) * log_q + ell : 0.0));
    summarize(v);
    return v;
}

double catalytic_generation_limit(int n, int d, double sigma_bar) {
    return std::max(0.0, static_cast<double>(n - 2 * d + 2) * sigma_bar);
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::BelowHalf: return "delta<1/2";
        case Regime::Half: return "delta=1/2";
        case Regime::AboveHalf: return "delta>1/2";
    }
    return "?";
}

RateRegion rate_region(const Rational &delta) {
    if (delta < 0 || delta > 1) fail(Errc::DeltaOutOfRange, "delta must lie in [0, 1], got " + to_string(delta));
    const Rational half(1, 2);
    RateRegion r;
    r.delta = delta;
    r.regime = delta < half ? Regime::BelowHalf : (delta == half ? Regime::Half : Regime::AboveHalf);

    const Rational one(1);
    const Point eaq{delta, one - delta, "EAQ"};
    r.half_planes.push_back({-1, 1, std::max(Rational(0), one - 2 * delta), "ea-singleton"});
    r.half_planes.push_back({0, 1, one - delta, "transmission"});
    if (r.regime != Regime::BelowHalf) {
        r.half_planes.push_back({-(one - delta), 3 * delta - 1, (one - delta) * (2 * delta - 1), "piecewise"});
    }
    r.half_planes.push_back({0, -1, 0, "nonnegative-rate"});
    r.half_planes.push_back({-1, 1, one - 2 * delta, "line-A", false});

    if (r.regime == Regime::BelowHalf) {
        r.vertices = {{-(one - 2 * delta), 0, "generation"}, eaq};
        r.annotations.push_back({0, one - 2 * delta, "QMDS"});
        r.segments = {{0, 1, "ea-singleton", Attainability::Attained}, {1, 2, "transmission", Attainability::Attained}};
    } else if (r.regime == Regime::Half) {
        r.vertices = {{0, 0, "origin"}, eaq};
        r.segments = {{0, 1, "ea-singleton", Attainability::Attained}, {1, 2, "transmission", Attainability::Attained}};
    } else {
        const Rational m = (one - delta) / 2;
        r.vertices = {{0, 0, "origin"}};
        if (m != Rational(0)) r.vertices.push_back({m, m, "MDS"});
        r.vertices.push_back(eaq);
        const std::size_t last = r.vertices.size() - 1;
        if (last == 2) {
            r.segments = {{0, 1, "ea-singleton", Attainability::Attained},
                          {1, 2, "piecewise", Attainability::Open}};
        } else {
            r.segments = {{0, 1, "piecewise", Attainability::Open}};
        }
        r.segments.push_back({last, last + 1, "transmission", Attainability::Attained});
    }
    return r;
}

bool region_contains(const RateRegion &region, const Rational &x, const Rational &y) {
    if (y < 0) return false;
    return std::all_of(region.half_planes.begin(), region.half_planes.end(),
                       [&](const HalfPlane &h) { return !h.boundary || h.contains(x, y); });
}

void write_region_csv(const RateRegion &region, std::ostream &out) {
    out << "# region delta=" << to_string(region.delta) << " regime=" << regime_name(region.regime) << "\n";
    out << "# kind,name,x,y\n";
    for (const auto &v : region.vertices) out << "vertex," << v.name << "," << to_string(v.x) << "," << to_string(v.y) << "\n";
    for (const auto &a : region.annotations) {
        out << "annotation," << a.name << "," << to_string(a.x) << "," << to_string(a.y) << "\n";
    }
    out << "# kind,name,a,b,beta,role   (a*x + b*y <= beta)\n";
    for (const auto &h : region.half_planes) {
        out << "halfplane," << h.name << "," << to_string(h.a) << "," << to_string(h.b) << "," << to_string(h.beta) << ","
            << (h.boundary ? "boundary" : "annotation") << "\n";
    }
    out << "# kind,from,to,bound,status\n";
    for (const auto &s : region.segments) {
        out << "segment," << region.vertices[s.from].name << ","
            << (s.to < region.vertices.size() ? region.vertices[s.to].name : std::string("ray")) << "," << s.bound << ","
            << (s.status == Attainability::Attained ? "attained" : "open") << "\n";
    }
}

void write_region_svg(const RateRegion &region, std::ostream &out) {
    constexpr double width = 480;
    constexpr double height = 280;
    constexpr double margin = 40;
    auto px = [&](double x) { return margin + (x + 1.0) / 2.0 * (width - 2 * margin); };
    auto py = [&](double y) { return height - margin - y * (height - 2 * margin); };
    auto pt = [&](double x, double y) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << px(x) << "," << py(y);
        return os.str();
    };

    const double one_minus_delta = 1.0 - to_double(region.delta);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << px(-1) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(0)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(1)
        << "\" stroke=\"black\"/>\n";

    out << "<polygon fill=\"#cfe3f7\" stroke=\"#1f4e79\" stroke-width=\"1.5\" points=\"";
    for (const auto &v : region.vertices) out << pt(to_double(v.x), to_double(v.y)) << " ";
    out << pt(1, one_minus_delta) << " " << pt(1, 0) << "\"/>\n";

    // Line A: y = 1 - 2 delta + x, clipped to the plot window.
    const double a0 = 1.0 - 2.0 * to_double(region.delta);
    const double xa = std::max(-1.0, -a0);
    const double xb = std::min(1.0, 1.0 - a0);
    if (xa < xb) {
        out << "<line x1=\"" << px(xa) << "\" y1=\"" << py(xa + a0) << "\" x2=\"" << px(xb) << "\" y2=\"" << py(xb + a0)
            << "\" stroke=\"#b03030\" stroke-dasharray=\"5,4\"/>\n";
        out << "<text x=\"" << px(xb) - 14 << "\" y=\"" << py(xb + a0) + 14 << "\" font-size=\"11\" fill=\"#b03030\">A</text>\n";
    }
    auto label = [&](const Point &p) {
        out << "<circle cx=\"" << px(to_double(p.x)) << "\" cy=\"" << py(to_double(p.y)) << "\" r=\"3\"/>\n";
        out << "<text x=\"" << px(to_double(p.x)) + 5 << "\" y=\"" << py(to_double(p.y)) - 5 << "\" font-size=\"11\">"
            << p.name << "</text>\n";
    };
    for (const auto &v : region.vertices) {
        if (v.name == "EAQ" || v.name == "MDS") label(v);
    }
    for (const auto &a : region.annotations) label(a);
    out << "<text x=\"" << margin << "\" y=\"16\" font-size=\"12\">delta = " << to_string(region.delta)
        << "  (x = c/n, y = k/n)</text>\n";
    out << "</svg>\n";
}

}  // namespace singleton_lab::bounds
