#include "hypsurf/hexagon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypsurf {

namespace {

// The turtle walk multiplies twelve matrices whose entries reach cosh(a);
// long double keeps the closure residual comfortably under the 1e-9 gate.
using LMat = std::array<std::array<long double, 3>, 3>;

LMat lidentity() {
    LMat r{};
    r[0][0] = r[1][1] = r[2][2] = 1.0L;
    return r;
}

LMat lmul(const LMat& a, const LMat& b) {
    LMat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

LMat ltranslate_x(long double t) {
    LMat r = lidentity();
    const long double ch = coshl(t), sh = sinhl(t);
    r[0][0] = ch; r[0][2] = sh;
    r[2][0] = sh; r[2][2] = ch;
    return r;
}

LMat lrotate_quarter() {  // rotation by pi/2 about the origin
    LMat r{};
    r[0][1] = -1.0L;
    r[1][0] = 1.0L;
    r[2][2] = 1.0L;
    return r;
}

bool poles_match_up_to_sign(const GeodesicPole& u, const GeodesicPole& w) {
    double dplus = 0.0, dminus = 0.0;
    const double a[3] = {u.v.x1, u.v.x2, u.v.x3};
    const double b[3] = {w.v.x1, w.v.x2, w.v.x3};
    for (int i = 0; i < 3; ++i) {
        dplus = std::max(dplus, std::abs(a[i] - b[i]));
        dminus = std::max(dminus, std::abs(a[i] + b[i]));
    }
    return std::min(dplus, dminus) < 1e-6;
}

}  // namespace

double alternate_side(double a) {
    if (!(a > 0.0))
        throw std::invalid_argument("alternate_side: a must be positive");
    const double ca = std::cosh(a);
    return std::acosh(ca / (ca - 1.0));
}

Hexagon Hexagon::build(double a) {
    if (!(a > 0.0))
        throw std::invalid_argument("Hexagon::build: a must be positive");

    Hexagon hex;
    hex.a = a;
    hex.b = alternate_side(a);

    // Turtle walk: advance along side i, then turn by a right angle.
    const long double sides[6] = {static_cast<long double>(a), static_cast<long double>(hex.b),
                                  static_cast<long double>(a), static_cast<long double>(hex.b),
                                  static_cast<long double>(a), static_cast<long double>(hex.b)};
    LMat frame = lidentity();
    const LMat quarter = lrotate_quarter();
    std::array<Vec3, 6> raw_verts;
    for (int i = 0; i < 6; ++i) {
        raw_verts[i] = Vec3{static_cast<double>(frame[0][2]),
                            static_cast<double>(frame[1][2]),
                            static_cast<double>(frame[2][2])};  // frame * (0,0,1)
        frame = lmul(lmul(frame, ltranslate_x(sides[i])), quarter);
    }
    long double closure = 0.0L;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            closure = std::max(closure, fabsl(frame[i][j] - (i == j ? 1.0L : 0.0L)));
    hex.closure_residual = static_cast<double>(closure);
    if (hex.closure_residual > 1e-9)
        throw std::runtime_error("Hexagon::build: turtle walk failed to close (residual " +
                                 std::to_string(hex.closure_residual) + ")");

    std::array<Point, 6> verts;
    for (int i = 0; i < 6; ++i) verts[i] = normalize_point(raw_verts[i]);

    // Crude interior reference: normalized vertex sum (timelike).
    Vec3 acc{};
    for (const Point& p : verts) acc = acc + p.v;
    const Point rough_center = normalize_point(acc);

    std::array<GeodesicPole, 6> poles;
    for (int i = 0; i < 6; ++i)
        poles[i] = geodesic_through(verts[i], verts[(i + 1) % 6], rough_center);

    // Incenter of the three a-sides: <c, n0> = <c, n2> = <c, n4>, timelike.
    const Vec3 d1{poles[0].v.x1 - poles[2].v.x1, poles[0].v.x2 - poles[2].v.x2, -(poles[0].v.x3 - poles[2].v.x3)};
    const Vec3 d2{poles[2].v.x1 - poles[4].v.x1, poles[2].v.x2 - poles[4].v.x2, -(poles[2].v.x3 - poles[4].v.x3)};
    const Vec3 craw = cross(d1, d2);  // d_i already carry the J factor
    if (!(mink(craw, craw) < 0.0))
        throw std::runtime_error("Hexagon::build: incenter solve produced a non-timelike direction");
    const Point c = normalize_point(craw);
    for (int i = 0; i < 6; ++i)
        if (!(mink(c.v, poles[i].v) < 0.0))
            throw std::runtime_error("Hexagon::build: incenter fell outside the hexagon");

    // Recentre so the incenter is exactly the origin lift.
    const double phi = std::atan2(c.v.x2, c.v.x1);
    const double d = std::acosh(std::max(1.0, c.v.x3));
    const Isometry to_center = translate_x(-d) * rotate_o(-phi);
    for (int i = 0; i < 6; ++i) verts[i] = normalize_point(to_center.apply(verts[i].v));
    hex.vertices = verts;
    hex.center = origin();

    for (int i = 0; i < 6; ++i)
        poles[i] = geodesic_through(verts[i], verts[(i + 1) % 6], hex.center);
    hex.a_poles = {poles[0], poles[2], poles[4]};
    hex.b_poles = {poles[1], poles[3], poles[5]};

    // Invariants: right angles, equidistant incenter, side identity.
    double angle = 0.0;
    for (int i = 0; i < 6; ++i)
        angle = std::max(angle, std::abs(mink(poles[i].v, poles[(i + 1) % 6].v)));
    hex.angle_residual = angle;
    if (angle > 1e-8)
        throw std::runtime_error("Hexagon::build: interior angles are not right");

    const double s0 = mink(hex.center.v, hex.a_poles[0].v);
    double equid = 0.0;
    double rho_sum = 0.0;
    for (const GeodesicPole& n : hex.a_poles) {
        equid = std::max(equid, std::abs(mink(hex.center.v, n.v) - s0));
        rho_sum += std::asinh(std::abs(mink(hex.center.v, n.v)));
    }
    hex.equidist_residual = equid;
    if (equid > 1e-9)
        throw std::runtime_error("Hexagon::build: incenter verification failed");
    hex.inradius_a = rho_sum / 3.0;

    if (std::abs(std::cosh(hex.b) * (std::cosh(a) - 1.0) - std::cosh(a)) > 1e-10)
        throw std::runtime_error("Hexagon::build: side-length identity violated");

    for (int i = 0; i < 3; ++i) hex.reflections[i] = reflection(hex.a_poles[i]);

    // The order-3 symmetry about the incenter; pick the rotation direction
    // that shifts a-side i to a-side i+1.
    const double third = 2.0 * std::numbers::pi / 3.0;
    for (double sgn : {+1.0, -1.0}) {
        const Isometry s = rotate_o(sgn * third);
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            ok = poles_match_up_to_sign(s * hex.a_poles[i], hex.a_poles[(i + 1) % 3]);
        if (ok) {
            hex.sigma_pow[0] = Isometry{};
            hex.sigma_pow[1] = s;
            hex.sigma_pow[2] = s * s;
            return hex;
        }
    }
    throw std::runtime_error("Hexagon::build: no 2pi/3 rotation permutes the a-sides");
}

PantsConstants pants_constants(const Hexagon& hex) {
    PantsConstants pc;
    pc.adjacent_midpoint_distance = dist(hex.center, hex.reflections[0] * hex.center);

    double max_center_vertex = 0.0;
    double max_pair = 0.0;
    for (int i = 0; i < 6; ++i) {
        max_center_vertex = std::max(max_center_vertex, dist(hex.center, hex.vertices[i]));
        for (int j = i + 1; j < 6; ++j)
            max_pair = std::max(max_pair, dist(hex.vertices[i], hex.vertices[j]));
    }
    pc.eccentricity_bound = max_center_vertex + max_pair;
    return pc;
}

PantsConstants pants_constants(double a) {
    return pants_constants(Hexagon::build(a));
}

}  // namespace hypsurf
