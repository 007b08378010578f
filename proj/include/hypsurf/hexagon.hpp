#pragma once

#include <array>

#include "hypsurf/hyp.hpp"

namespace hypsurf {

// The symmetric right-angled hexagon H_a: alternating side lengths a and b,
// with b the unique length making all six angles right.  The three length-a
// sides ("gluing sides") carry the reflection generators; the incenter of
// those three sides is the midpoint lift and sits exactly at the origin in
// the stored, recentred coordinates.
struct Hexagon {
    double a = 0.0;
    double b = 0.0;
    std::array<Point, 6> vertices;         // traversal order; side i runs vertices[i] -> vertices[(i+1)%6]
    std::array<GeodesicPole, 3> a_poles;   // sides 0, 2, 4 (length a), pointing away from the interior
    std::array<GeodesicPole, 3> b_poles;   // sides 1, 3, 5 (length b)
    Point center = origin();               // incenter w.r.t. the a-sides (== origin after recentring)
    double inradius_a = 0.0;               // rho_a = dist(center, a-side geodesic)

    std::array<Isometry, 3> reflections;   // r_i = reflection(a_poles[i])
    std::array<Isometry, 3> sigma_pow;     // sigma^0, sigma^1, sigma^2; sigma maps a-side i -> i+1 (mod 3)

    // construction residuals, reported by the CLI
    double closure_residual = 0.0;
    double angle_residual = 0.0;
    double equidist_residual = 0.0;

    static Hexagon build(double a);
};

// b(a) = arccosh(cosh a / (cosh a - 1)); throws for a <= 0.
double alternate_side(double a);

struct PantsConstants {
    double adjacent_midpoint_distance = 0.0;  // 2 rho_a, distance between mirrored incenters
    double eccentricity_bound = 0.0;          // e_a: any point of the pants is within e_a of its midpoint
};

PantsConstants pants_constants(const Hexagon& hex);
PantsConstants pants_constants(double a);

}  // namespace hypsurf
