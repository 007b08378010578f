#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

// Hyperboloid model of the hyperbolic plane.
//
// Points live on the upper sheet {<x,x> = -1, x3 > 0} of the quadric defined
// by the Minkowski form <p,q> = p1 q1 + p2 q2 - p3 q3.  Geodesics are cut out
// by spacelike unit vectors ("poles"): the geodesic of n is {p : <p,n> = 0}.
// Isometries are 3x3 matrices preserving the form and the upper sheet;
// orientation-reversing maps (reflections) are ordinary matrices here, no
// special casing.

namespace hypsurf {

struct Vec3 {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x1, s * a.x2, s * a.x3}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x1, -a.x2, -a.x3}; }

// Minkowski form <p,q> = p1 q1 + p2 q2 - p3 q3.
inline double mink(const Vec3& p, const Vec3& q) {
    return p.x1 * q.x1 + p.x2 * q.x2 - p.x3 * q.x3;
}

// Euclidean cross product; J*cross(p,q) is Minkowski-orthogonal to p and q.
Vec3 cross(const Vec3& p, const Vec3& q);

// A point of the hyperbolic plane: <v,v> = -1 (within 1e-9), v.x3 > 0.
struct Point {
    Vec3 v;
};

// A co-oriented geodesic: spacelike unit pole, <v,v> = +1 (within 1e-9).
struct GeodesicPole {
    Vec3 v;
};

// Validating constructors; throw std::invalid_argument on bad input.
Point make_point(const Vec3& v);
GeodesicPole make_pole(const Vec3& v);

// Renormalizes a nearly-unit timelike/spacelike vector onto its quadric.
Point normalize_point(const Vec3& v);
GeodesicPole normalize_pole(const Vec3& v);

inline const Point& origin() {
    static const Point o{{0.0, 0.0, 1.0}};
    return o;
}

struct Mat3 {
    // row-major
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity();
    Mat3 operator*(const Mat3& o) const;
    Vec3 apply(const Vec3& v) const;
    Mat3 transposed() const;
    double det() const;
};

// Deviation of m^T J m from J (max absolute entry difference).
double lorentz_defect(const Mat3& m);

struct Isometry {
    Mat3 m = Mat3::identity();
    int det_sign = 1;

    Isometry operator*(const Isometry& o) const;
    Point operator*(const Point& p) const;
    GeodesicPole operator*(const GeodesicPole& n) const;
    Vec3 apply(const Vec3& v) const { return m.apply(v); }
    Isometry inverse() const;  // J m^T J
};

// Validates m^T J m = J within 1e-8 and m33 > 0; fills det_sign from det(m).
Isometry make_isometry(const Mat3& m);

// Distance arccosh(-<p,q>).  Arguments in [1 - 1e-6, 1] clamp to 1; below
// that the inputs are not valid points and we throw.
double dist(const Point& p, const Point& q);

// Translation by t along the geodesic {x2 = 0} through the origin.
Isometry translate_x(double t);

// Rotation by theta about the origin.
Isometry rotate_o(double theta);

// Reflection across the geodesic of n: p -> p - 2 <p,n> n.
Isometry reflection(const GeodesicPole& n);

// arcsinh(|<p,n>|), the distance from p to the geodesic of n.
double dist_to_geodesic(const Point& p, const GeodesicPole& n);

// Pole of the geodesic through two distinct points.  Sign convention: the
// returned n satisfies mink(ref, n) < 0 whenever ref is off the geodesic.
GeodesicPole geodesic_through(const Point& p, const Point& q, const Point& ref = origin());

// Distance from p to the geodesic segment [seg_a, seg_b] (both on the
// geodesic of n).  Equals the line distance when the foot of the
// perpendicular lands inside the segment.
double dist_to_segment(const Point& p, const Point& seg_a, const Point& seg_b, const GeodesicPole& n);

// Gram-Schmidt with respect to J; restores m^T J m = J to ~1e-12.
// Throws std::runtime_error if the defect exceeds 1e-3 (unrecoverable drift).
Isometry renormalize(const Isometry& g);

constexpr double kDefaultKeyGrid = 1e-6;

// Grid-quantized fingerprint of an isometry; equal for isometries that agree
// entrywise well within `grid`, distinct once entries differ by >> grid.
struct IsometryKey {
    std::array<std::int64_t, 9> q{};
    int det_sign = 1;

    bool operator==(const IsometryKey& o) const { return det_sign == o.det_sign && q == o.q; }
};

IsometryKey key(const Isometry& g, double grid = kDefaultKeyGrid);

struct IsometryKeyHash {
    std::size_t operator()(const IsometryKey& k) const;
};

// Debug-mode invariant checks (no-ops in NDEBUG builds).
void debug_check_point(const Point& p);
void debug_check_pole(const GeodesicPole& n);
void debug_check_isometry(const Isometry& g);

}  // namespace hypsurf
