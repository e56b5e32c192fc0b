#include "cvxtw/placement.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "cvxtw/error.h"

namespace cvxtw {

namespace {

// Last continued-fraction convergent of x with denominator <= budget.
std::pair<std::int64_t, std::int64_t> approximate(long double x, std::int64_t budget) {
    std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
    std::int64_t k_prev = 0, k = 1;
    long double rest = x - std::floor(x);
    for (int iter = 0; iter < 64 && rest > 1e-18L; ++iter) {
        long double inv = 1.0L / rest;
        auto a = static_cast<std::int64_t>(std::floor(inv));
        std::int64_t k_next = a * k + k_prev;
        if (a <= 0 || k_next > budget) break;
        std::int64_t h_next = a * h + h_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        rest = inv - std::floor(inv);
    }
    return {h, k};
}

CirclePoint point_from_tangent(std::int64_t a, std::int64_t b) {
    // t = a/b  ->  ((b^2 - a^2), 2ab) / (a^2 + b^2)
    BigInt A = a, B = b;
    return {B * B - A * A, 2 * A * B, A * A + B * B};
}

int half(const CirclePoint& p) {
    return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0;
}

}  // namespace

bool on_unit_circle(const CirclePoint& p) {
    return p.w > 0 && p.x * p.x + p.y * p.y == p.w * p.w;
}

bool angle_less(const CirclePoint& a, const CirclePoint& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a.x * b.y - a.y * b.x > 0;
}

bool is_valid_placement(const CirclePlacement& placement) {
    const auto& pts = placement.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!on_unit_circle(pts[i])) return false;
        if (i + 1 < pts.size() && !angle_less(pts[i], pts[i + 1])) return false;
    }
    return true;
}

CirclePlacement place_on_circle(int n, int attempt) {
    if (n < 3) throw PreconditionError("placement needs at least 3 points");
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    std::mt19937_64 rng(0x5bd1e995ULL + static_cast<std::uint64_t>(attempt));
    std::vector<long double> target(n);
    for (int p = 0; p < n; ++p) {
        long double jitter = 0;
        long double u = static_cast<long double>(rng() >> 11) * 0x1.0p-53L;
        // Position 0 stays at angle 0 so no target wraps past 2*pi.
        if (attempt > 0 && p > 0) jitter = (u - 0.5L) * 0.2L;
        target[p] = two_pi * (static_cast<long double>(p) + jitter) / n;
    }

    for (std::int64_t budget = (64LL * n) << attempt;; budget *= 2) {
        CirclePlacement out;
        out.attempt = attempt;
        for (int p = 0; p < n; ++p) {
            if (attempt == 0 && 2 * p == n) {
                out.points.push_back({-1, 0, 1});
                continue;
            }
            long double theta = target[p];
            if (theta > std::numbers::pi_v<long double>) theta -= two_pi;
            auto [a, b] = approximate(std::tan(theta / 2), budget);
            out.points.push_back(point_from_tangent(a, b));
        }
        if (is_valid_placement(out)) return out;
        if (budget > (std::int64_t{1} << 40))
            throw InternalBoundViolation("could not place points on the circle");
    }
}

Fraction intersection_parameter(const CirclePoint& a, const CirclePoint& b,
                                const CirclePoint& c, const CirclePoint& d) {
    // Line through c, d as homogeneous cross product; h(P) = L.P / w_P is an
    // affine function vanishing on the line, so s = h(a) / (h(a) - h(b)).
    BigInt l0 = c.y * d.w - c.w * d.y;
    BigInt l1 = c.w * d.x - c.x * d.w;
    BigInt l2 = c.x * d.y - c.y * d.x;
    BigInt ha = l0 * a.x + l1 * a.y + l2 * a.w;
    BigInt hb = l0 * b.x + l1 * b.y + l2 * b.w;
    Fraction f{ha * b.w, ha * b.w - hb * a.w};
    if (f.den < 0) {
        f.num = -f.num;
        f.den = -f.den;
    }
    return f;
}

int compare(const Fraction& lhs, const Fraction& rhs) {
    BigInt l = lhs.num * rhs.den, r = rhs.num * lhs.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}

}  // namespace cvxtw
