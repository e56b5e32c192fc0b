#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cvxtw {

using BigInt = boost::multiprecision::cpp_int;

// Point (x/w, y/w) with integer homogeneous coordinates and w > 0.
struct CirclePoint {
    BigInt x, y, w;
};

struct CirclePlacement {
    std::vector<CirclePoint> points;  // one per cyclic position
    int attempt = 0;
};

// Exact rational points on the unit circle, one per position, in strictly
// increasing angle. Attempt 0 targets the angles 2*pi*p/n; later attempts
// jitter every target except position 0 by at most a tenth of the spacing and
// double the denominator budget. Deterministic in (n, attempt). Requires n >= 3.
CirclePlacement place_on_circle(int n, int attempt = 0);

bool on_unit_circle(const CirclePoint& p);

// Exact angular comparison on [0, 2*pi) measured from the positive x axis.
bool angle_less(const CirclePoint& a, const CirclePoint& b);

bool is_valid_placement(const CirclePlacement& placement);

// Parameter s in (0, 1) of the intersection of chord a->b with the line cd,
// returned as a fraction with positive denominator.
struct Fraction {
    BigInt num, den;
};
Fraction intersection_parameter(const CirclePoint& a, const CirclePoint& b,
                                const CirclePoint& c, const CirclePoint& d);
int compare(const Fraction& lhs, const Fraction& rhs);

}  // namespace cvxtw
