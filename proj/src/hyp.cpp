#include "hypsurf/hyp.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace hypsurf {

namespace {

constexpr double kPointTol = 1e-9;
constexpr double kIsometryTol = 1e-8;
constexpr double kDriftLimit = 1e-3;

// J = diag(1,1,-1)
inline Vec3 jmul(const Vec3& v) { return {v.x1, v.x2, -v.x3}; }

}  // namespace

Vec3 cross(const Vec3& p, const Vec3& q) {
    return {p.x2 * q.x3 - p.x3 * q.x2,
            p.x3 * q.x1 - p.x1 * q.x3,
            p.x1 * q.x2 - p.x2 * q.x1};
}

Point make_point(const Vec3& v) {
    if (std::abs(mink(v, v) + 1.0) > kPointTol)
        throw std::invalid_argument("make_point: <v,v> != -1");
    if (!(v.x3 > 0.0))
        throw std::invalid_argument("make_point: not on the upper sheet (x3 <= 0)");
    return Point{v};
}

GeodesicPole make_pole(const Vec3& v) {
    if (std::abs(mink(v, v) - 1.0) > kPointTol)
        throw std::invalid_argument("make_pole: <v,v> != +1");
    return GeodesicPole{v};
}

Point normalize_point(const Vec3& v) {
    const double q = mink(v, v);
    if (!(q < 0.0))
        throw std::invalid_argument("normalize_point: vector is not timelike");
    const double s = 1.0 / std::sqrt(-q);
    Vec3 w = s * v;
    if (w.x3 < 0.0) w = -w;
    return Point{w};
}

GeodesicPole normalize_pole(const Vec3& v) {
    const double q = mink(v, v);
    if (!(q > 0.0))
        throw std::invalid_argument("normalize_pole: vector is not spacelike");
    return GeodesicPole{(1.0 / std::sqrt(q)) * v};
}

Mat3 Mat3::identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
    return r;
}

Vec3 Mat3::apply(const Vec3& v) const {
    return {m[0][0] * v.x1 + m[0][1] * v.x2 + m[0][2] * v.x3,
            m[1][0] * v.x1 + m[1][1] * v.x2 + m[1][2] * v.x3,
            m[2][0] * v.x1 + m[2][1] * v.x2 + m[2][2] * v.x3};
}

Mat3 Mat3::transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.m[i][j] = m[j][i];
    return r;
}

double Mat3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double lorentz_defect(const Mat3& g) {
    // columns c_i; (m^T J m)_{ij} = <c_i, c_j>
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Vec3 ci{g.m[0][i], g.m[1][i], g.m[2][i]};
        for (int j = 0; j < 3; ++j) {
            const Vec3 cj{g.m[0][j], g.m[1][j], g.m[2][j]};
            const double want = (i == j) ? (i == 2 ? -1.0 : 1.0) : 0.0;
            worst = std::max(worst, std::abs(mink(ci, cj) - want));
        }
    }
    return worst;
}

Isometry Isometry::operator*(const Isometry& o) const {
    Isometry r;
    r.m = m * o.m;
    r.det_sign = det_sign * o.det_sign;
    debug_check_isometry(r);
    return r;
}

Point Isometry::operator*(const Point& p) const {
    Point q{m.apply(p.v)};
    debug_check_point(q);
    return q;
}

GeodesicPole Isometry::operator*(const GeodesicPole& n) const {
    GeodesicPole r{m.apply(n.v)};
    debug_check_pole(r);
    return r;
}

Isometry Isometry::inverse() const {
    // g^-1 = J g^T J
    Mat3 t = m.transposed();
    for (int i = 0; i < 3; ++i) {
        t.m[2][i] = -t.m[2][i];
        t.m[i][2] = -t.m[i][2];
    }
    return Isometry{t, det_sign};
}

Isometry make_isometry(const Mat3& m) {
    if (lorentz_defect(m) > kIsometryTol)
        throw std::invalid_argument("make_isometry: m^T J m != J");
    if (!(m.m[2][2] > 0.0))
        throw std::invalid_argument("make_isometry: does not preserve the upper sheet");
    return Isometry{m, m.det() > 0.0 ? 1 : -1};
}

double dist(const Point& p, const Point& q) {
    double c = -mink(p.v, q.v);
    if (c < 1.0 - 1e-6)
        throw std::invalid_argument("dist: inputs are not valid hyperboloid points");
    if (c < 1.0) c = 1.0;  // coincident points under roundoff
    return std::acosh(c);
}

Isometry translate_x(double t) {
    const double ch = std::cosh(t), sh = std::sinh(t);
    Mat3 m = Mat3::identity();
    m.m[0][0] = ch;
    m.m[0][2] = sh;
    m.m[2][0] = sh;
    m.m[2][2] = ch;
    return Isometry{m, 1};
}

Isometry rotate_o(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    Mat3 m = Mat3::identity();
    m.m[0][0] = c;
    m.m[0][1] = -s;
    m.m[1][0] = s;
    m.m[1][1] = c;
    return Isometry{m, 1};
}

Isometry reflection(const GeodesicPole& n) {
    // p -> p - 2 <p,n> n, i.e. I - 2 n (J n)^T
    const Vec3 jn = jmul(n.v);
    const double nc[3] = {n.v.x1, n.v.x2, n.v.x3};
    const double jc[3] = {jn.x1, jn.x2, jn.x3};
    Mat3 m = Mat3::identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m.m[i][j] -= 2.0 * nc[i] * jc[j];
    return Isometry{m, -1};
}

double dist_to_geodesic(const Point& p, const GeodesicPole& n) {
    return std::asinh(std::abs(mink(p.v, n.v)));
}

GeodesicPole geodesic_through(const Point& p, const Point& q, const Point& ref) {
    const Vec3 n = jmul(cross(p.v, q.v));
    const double nn = mink(n, n);
    if (!(nn > 1e-18))
        throw std::invalid_argument("geodesic_through: points coincide");
    Vec3 u = (1.0 / std::sqrt(nn)) * n;
    if (mink(ref.v, u) > 0.0) u = -u;
    return GeodesicPole{u};
}

double dist_to_segment(const Point& p, const Point& seg_a, const Point& seg_b, const GeodesicPole& n) {
    // foot of the perpendicular from p onto the geodesic of n
    const double s = mink(p.v, n.v);
    const Vec3 f = p.v - s * n.v;  // timelike, <f,f> = -(1+s^2)
    const Point foot = normalize_point(f);
    const double ab = dist(seg_a, seg_b);
    const double af = dist(seg_a, foot);
    const double fb = dist(foot, seg_b);
    if (af + fb <= ab + 1e-9)  // foot inside the segment
        return dist(p, foot);
    return std::min(dist(p, seg_a), dist(p, seg_b));
}

Isometry renormalize(const Isometry& g) {
    if (lorentz_defect(g.m) > kDriftLimit)
        throw std::runtime_error("renormalize: unrecoverable drift (defect > 1e-3)");
    // J-orthonormalize the columns, timelike column first.
    Vec3 c0{g.m.m[0][0], g.m.m[1][0], g.m.m[2][0]};
    Vec3 c1{g.m.m[0][1], g.m.m[1][1], g.m.m[2][1]};
    Vec3 c2{g.m.m[0][2], g.m.m[1][2], g.m.m[2][2]};
    c2 = (1.0 / std::sqrt(-mink(c2, c2))) * c2;
    c0 = c0 + mink(c0, c2) * c2;  // <c2,c2> = -1
    c0 = (1.0 / std::sqrt(mink(c0, c0))) * c0;
    c1 = c1 + mink(c1, c2) * c2 - mink(c1, c0) * c0;
    c1 = (1.0 / std::sqrt(mink(c1, c1))) * c1;
    Mat3 m;
    m.m[0][0] = c0.x1; m.m[1][0] = c0.x2; m.m[2][0] = c0.x3;
    m.m[0][1] = c1.x1; m.m[1][1] = c1.x2; m.m[2][1] = c1.x3;
    m.m[0][2] = c2.x1; m.m[1][2] = c2.x2; m.m[2][2] = c2.x3;
    return Isometry{m, g.det_sign};
}

IsometryKey key(const Isometry& g, double grid) {
    IsometryKey k;
    k.det_sign = g.det_sign;
    int idx = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double x = g.m.m[i][j] / grid;
            if (!(std::abs(x) < 9.0e18))
                throw std::runtime_error("key: entry magnitude overflows the quantization grid");
            k.q[idx++] = std::llround(x);
        }
    }
    return k;
}

std::size_t IsometryKeyHash::operator()(const IsometryKey& k) const {
    // splitmix-style mixing of the quantized entries
    std::uint64_t h = static_cast<std::uint64_t>(k.det_sign + 2);
    for (std::int64_t v : k.q) {
        std::uint64_t z = h + 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(v);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        h = z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

void debug_check_point(const Point& p) {
#ifndef NDEBUG
    assert(std::abs(mink(p.v, p.v) + 1.0) < 1e-6);
    assert(p.v.x3 > 0.0);
#else
    (void)p;
#endif
}

void debug_check_pole(const GeodesicPole& n) {
#ifndef NDEBUG
    assert(std::abs(mink(n.v, n.v) - 1.0) < 1e-6);
#else
    (void)n;
#endif
}

void debug_check_isometry(const Isometry& g) {
#ifndef NDEBUG
    assert(lorentz_defect(g.m) < 1e-5);
    assert(g.m.m[2][2] > 0.0);
    assert((g.m.det() > 0.0) == (g.det_sign > 0));
#else
    (void)g;
#endif
}

}  // namespace hypsurf
