#include "hylab/measures.hpp"
#include "hylab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hylab {

// ---------------------------------------------------------------------------
// Polyline

Polyline Polyline::of(std::vector<Complex> vs) {
    if (vs.size() < 2) throw CurveError("polyline needs at least two vertices");
    Polyline p;
    p.vertices = std::move(vs);
    p.cum.resize(p.vertices.size());
    p.cum[0] = 0.0;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        const double seg = std::abs(p.vertices[i] - p.vertices[i - 1]);
        if (!(seg > 0.0)) throw CurveError("polyline has a zero-length edge");
        p.cum[i] = p.cum[i - 1] + seg;
    }
    return p;
}

Complex Polyline::point_at(double s) const {
    if (s <= 0.0) return vertices.front();
    if (s >= length()) return vertices.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - cum.begin());
    const double t = (s - cum[i - 1]) / (cum[i] - cum[i - 1]);
    return vertices[i - 1] + t * (vertices[i] - vertices[i - 1]);
}

std::vector<std::pair<Complex, Complex>> Polyline::segments_between(double s0, double s1) const {
    s0 = std::clamp(s0, 0.0, length());
    s1 = std::clamp(s1, 0.0, length());
    std::vector<std::pair<Complex, Complex>> out;
    if (!(s1 > s0)) return out;
    Complex prev = point_at(s0);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (cum[i] <= s0) continue;
        if (cum[i] >= s1) break;
        out.emplace_back(prev, vertices[i]);
        prev = vertices[i];
    }
    out.emplace_back(prev, point_at(s1));
    return out;
}

double CompoundCurve::total_length() const {
    double L = 0.0;
    for (const auto& p : pieces) L += p.length();
    return L;
}

double CompoundCurve::halfplane_violation() const {
    double worst = 0.0;
    for (const auto& p : pieces)
        for (const auto& v : p.vertices) worst = std::max(worst, -v.real());
    return worst;
}

// ---------------------------------------------------------------------------
// projections

double union_length(std::vector<Interval> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end(), [](const Interval& u, const Interval& v) { return u.a < v.a; });
    double total = 0.0, lo = xs[0].a, hi = xs[0].b;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i].a > hi) {
            total += hi - lo;
            lo = xs[i].a;
            hi = xs[i].b;
        } else {
            hi = std::max(hi, xs[i].b);
        }
    }
    return total + (hi - lo);
}

namespace {

inline double rot_xi(Complex z, double ca, double sa) { return z.real() * ca + z.imag() * sa; }
inline double rot_eta(Complex z, double ca, double sa) { return -z.real() * sa + z.imag() * ca; }

} // namespace

ProjPair projection_lengths(const CompoundCurve& curve, const std::vector<SubArc>& arcs,
                            double alpha) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    std::vector<Interval> xs, ys;
    for (const SubArc& a : arcs) {
        if (a.piece < 0 || a.piece >= static_cast<int>(curve.pieces.size()))
            throw CurveError("sub-arc references a missing piece");
        for (const auto& [p, q] : curve.pieces[a.piece].segments_between(a.s0, a.s1)) {
            const double x0 = rot_xi(p, ca, sa), x1 = rot_xi(q, ca, sa);
            const double y0 = rot_eta(p, ca, sa), y1 = rot_eta(q, ca, sa);
            xs.push_back({std::min(x0, x1), std::max(x0, x1)});
            ys.push_back({std::min(y0, y1), std::max(y0, y1)});
        }
    }
    return {union_length(std::move(xs)), union_length(std::move(ys))};
}

ProjPair projection_lengths(const std::vector<Rect>& rects, double alpha) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    std::vector<Interval> xs, ys;
    for (const Rect& r : rects) {
        const Complex corners[4] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x0, r.y1}, {r.x1, r.y1}};
        double xlo = kInf, xhi = -kInf, ylo = kInf, yhi = -kInf;
        for (const Complex& c : corners) {
            xlo = std::min(xlo, rot_xi(c, ca, sa));
            xhi = std::max(xhi, rot_xi(c, ca, sa));
            ylo = std::min(ylo, rot_eta(c, ca, sa));
            yhi = std::max(yhi, rot_eta(c, ca, sa));
        }
        xs.push_back({xlo, xhi});
        ys.push_back({ylo, yhi});
    }
    return {union_length(std::move(xs)), union_length(std::move(ys))};
}

// ---------------------------------------------------------------------------
// rationals

namespace {
long long gcd_ll(long long a, long long b) {
    while (b) {
        const long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}
} // namespace

Rational Rational::of(long long n, long long d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = gcd_ll(n < 0 ? -n : n, d);
    return {g ? n / g : 0, g ? d / g : 1};
}

Rational Rational::operator+(const Rational& o) const {
    __int128 nn = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
    __int128 dd = static_cast<__int128>(den) * o.den;
    __int128 a = nn < 0 ? -nn : nn, b = dd;
    while (b) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    nn /= a;
    dd /= a;
    return {static_cast<long long>(nn), static_cast<long long>(dd)};
}

Rational Rational::operator*(const Rational& o) const {
    __int128 nn = static_cast<__int128>(num) * o.num;
    __int128 dd = static_cast<__int128>(den) * o.den;
    __int128 a = nn < 0 ? -nn : nn, b = dd;
    while (b) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    return {static_cast<long long>(nn / a), static_cast<long long>(dd / a)};
}

bool Rational::operator<=(const Rational& o) const {
    return static_cast<__int128>(num) * o.den <= static_cast<__int128>(o.num) * den;
}

// ---------------------------------------------------------------------------
// Cantor-square measure

namespace {

// Corner squares of the unit square at scale 1/3, in the order
// Q1 = lower-left, Q2 = upper-left, Q3 = upper-right, Q4 = lower-right.
// Diagonal squares (Q1, Q3) carry weight 1/3, anti-diagonal (Q2, Q4) 1/6.
struct CantorBlock {
    long long ox, oy; // offsets in thirds
    Rational w;
};
const CantorBlock kBlocks[4] = {
    {0, 0, {1, 3}},
    {0, 2, {1, 6}},
    {2, 2, {1, 3}},
    {2, 0, {1, 6}},
};

// Recursive exact mass of rect (triadic corners scaled so the unit square is
// [0, 3^m]^2 in integer coordinates) under mu_level.
Rational cantor_mass_rec(int level, long long x0, long long y0, long long x1, long long y1,
                         long long side) {
    x0 = std::max<long long>(x0, 0);
    y0 = std::max<long long>(y0, 0);
    x1 = std::min(x1, side);
    y1 = std::min(y1, side);
    if (x0 >= x1 || y0 >= y1) return {0, 1};
    if (level == 0) {
        // Lebesgue on the square of area side^2, total mass 1
        return Rational::of((x1 - x0) * (y1 - y0), side * side);
    }
    if (x0 == 0 && y0 == 0 && x1 == side && y1 == side) return {1, 1};
    const long long third = side / 3;
    if (third * 3 != side)
        throw NonTriadicRectangleError("rectangle resolution finer than requested level grid");
    Rational total{0, 1};
    for (const auto& b : kBlocks) {
        // map rect into the child square's own coordinates (expand by 3)
        const long long cx0 = x0 - b.ox * third, cy0 = y0 - b.oy * third;
        const long long cx1 = x1 - b.ox * third, cy1 = y1 - b.oy * third;
        if (cx1 <= 0 || cy1 <= 0 || cx0 >= third || cy0 >= third) continue;
        total = total + b.w * cantor_mass_rec(level - 1, cx0, cy0, cx1, cy1, third);
    }
    return total;
}

} // namespace

Rational cantor_measure(int level, const TriadicRect& rect) {
    if (level < 0) throw Error("cantor_measure: level >= 0 required");
    if (rect.m < 0) throw NonTriadicRectangleError("triadic exponent must be nonnegative");
    // Bring the rectangle onto the grid 3^-max(m, level): the recursion divides
    // the side by 3 `level` times, so integer corners need m' >= level.
    int m = rect.m;
    long long sc = 1;
    while (m < level) {
        ++m;
        sc *= 3;
    }
    long long side = 1;
    for (int i = 0; i < m; ++i) side *= 3;
    return cantor_mass_rec(level, rect.ix0 * sc, rect.iy0 * sc, rect.ix1 * sc, rect.iy1 * sc,
                           side);
}

CantorTable::CantorTable(int level, int res) : level_(level), res_(res) {
    if (res < 1 || res > 8) throw Error("CantorTable: resolution out of range");
    n_ = 1;
    for (int i = 0; i < res; ++i) n_ *= 3;

    // cell numerators over den_: masses of mu_level restricted to res-grid cells.
    // For level <= res every level cell splits uniformly into 9^(res-level)
    // subcells; for level > res the level-grid masses are summed into res cells.
    // Either way the common denominator 6^level * 9^max(res-level,0) works.
    den_ = 1;
    for (int i = 0; i < level; ++i) den_ *= 6;
    for (int i = 0; i < std::max(res - level, 0); ++i) den_ *= 9;

    // masses on the finer of the two grids, by the push-forward recursion
    const int fine = std::max(level, res);
    long fn = 1;
    for (int i = 0; i < fine; ++i) fn *= 3;
    std::vector<long long> cells(static_cast<std::size_t>(fn) * fn, 0);
    // numerators over 6^level * 9^(fine-level): start with the whole square
    // and push down `level` times; below `level` the mass is uniform.
    // Work recursively over blocks.
    struct Frame {
        long ox, oy, size;
        int lev;
        long long num; // numerator over 6^level * 9^(fine-level) at this block
    };
    std::vector<Frame> stack{{0, 0, fn, level, 1}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.lev == 0) {
            // uniform below the construction depth: a level-0 block has side
            // exactly 3^(fine-level), so spreading f.num over its s^2 cells
            // costs the factor 9^(fine-level) already present in den_
            for (long dy = 0; dy < f.size; ++dy)
                for (long dx = 0; dx < f.size; ++dx)
                    cells[static_cast<std::size_t>(f.oy + dy) * fn + (f.ox + dx)] += f.num;
            continue;
        }
        const long third = f.size / 3;
        // weights 1/3 = 2/6 and 1/6 over the common factor 6
        const long long wnum[4] = {2, 1, 2, 1};
        for (int bi = 0; bi < 4; ++bi) {
            stack.push_back({f.ox + kBlocks[bi].ox * third, f.oy + kBlocks[bi].oy * third, third,
                             f.lev - 1, f.num * wnum[bi]});
        }
    }

    // aggregate fine grid to res grid if level > res
    std::vector<long long> resc;
    if (fine == res_) {
        resc = std::move(cells);
    } else {
        const long ratio = fn / n_;
        resc.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (long y = 0; y < fn; ++y)
            for (long x = 0; x < fn; ++x)
                resc[static_cast<std::size_t>(y / ratio) * n_ + (x / ratio)] +=
                    cells[static_cast<std::size_t>(y) * fn + x];
    }

    prefix_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);
    for (long y = 0; y < n_; ++y)
        for (long x = 0; x < n_; ++x)
            prefix_[(y + 1) * (n_ + 1) + (x + 1)] = resc[static_cast<std::size_t>(y) * n_ + x] +
                                                    prefix_[y * (n_ + 1) + (x + 1)] +
                                                    prefix_[(y + 1) * (n_ + 1) + x] -
                                                    prefix_[y * (n_ + 1) + x];
}

long long CantorTable::mass_num(long ix0, long iy0, long ix1, long iy1) const {
    ix0 = std::clamp<long>(ix0, 0, n_);
    ix1 = std::clamp<long>(ix1, 0, n_);
    iy0 = std::clamp<long>(iy0, 0, n_);
    iy1 = std::clamp<long>(iy1, 0, n_);
    if (ix0 >= ix1 || iy0 >= iy1) return 0;
    return prefix_[iy1 * (n_ + 1) + ix1] - prefix_[iy0 * (n_ + 1) + ix1] -
           prefix_[iy1 * (n_ + 1) + ix0] + prefix_[iy0 * (n_ + 1) + ix0];
}

Rational CantorTable::mass(long ix0, long iy0, long ix1, long iy1) const {
    return Rational::of(mass_num(ix0, iy0, ix1, iy1), den_);
}

// ---------------------------------------------------------------------------
// MeasureSpec

MeasureSpec::MeasureSpec(CantorSquare c) : v_(c) {
    if (c.level < 0) throw Error("CantorSquare level must be >= 0");
}

double MeasureSpec::mass(const SubsetSpec& A) const {
    if (is_arclength()) {
        const auto* arcs = std::get_if<std::vector<SubArc>>(&A);
        if (!arcs) throw Error("arclength measure expects sub-arc subsets");
        // within one piece the subset is a set: overlapping parameter
        // intervals merge; across pieces the measures add
        std::vector<std::vector<Interval>> per_piece(curve().pieces.size());
        for (const SubArc& a : *arcs) {
            const auto& piece = curve().pieces.at(static_cast<std::size_t>(a.piece));
            const double s0 = std::clamp(a.s0, 0.0, piece.length());
            const double s1 = std::clamp(a.s1, 0.0, piece.length());
            if (s1 > s0) per_piece[a.piece].push_back({s0, s1});
        }
        double m = 0.0;
        for (auto& iv : per_piece)
            if (!iv.empty()) m += union_length(std::move(iv));
        return m;
    }
    const auto* rects = std::get_if<std::vector<Rect>>(&A);
    if (!rects) throw Error("planar measure expects rectangle subsets");
    if (is_lebesgue()) {
        // rects assumed pairwise disjoint; intersect with the region
        double m = 0.0;
        for (const Rect& a : *rects)
            for (const Rect& g : region()) {
                const double w = std::min(a.x1, g.x1) - std::max(a.x0, g.x0);
                const double h = std::min(a.y1, g.y1) - std::max(a.y0, g.y0);
                if (w > 0 && h > 0) m += w * h;
            }
        return m;
    }
    // Cantor square: corners must be triadic; use a generous fixed grid scan
    double m = 0.0;
    for (const Rect& a : *rects) {
        const int mres = 8;
        long long sc = 1;
        for (int i = 0; i < mres; ++i) sc *= 3;
        auto snap = [&](double v) {
            const double s = v * static_cast<double>(sc);
            const long long r = std::llround(s);
            if (std::abs(s - r) > 1e-9)
                throw NonTriadicRectangleError("rectangle corner is not of the form k/3^m");
            return r;
        };
        m += cantor_measure(cantor_level(),
                            TriadicRect{snap(a.x0), snap(a.y0), snap(a.x1), snap(a.y1), mres})
                 .to_double();
    }
    return m;
}

// ---------------------------------------------------------------------------
// certificates

WpCheckResult wp_check(const MeasureSpec& mu, const SubsetSpec& A,
                       const ProjectionCertificate& cert, double tol) {
    WpCheckResult out;
    out.mass = mu.mass(A);
    ProjPair pr;
    if (const auto* arcs = std::get_if<std::vector<SubArc>>(&A)) {
        if (arcs->empty()) return {true, 0.0, 0.0, 0.0};
        pr = projection_lengths(mu.curve(), *arcs, cert.alpha);
    } else {
        const auto& rects = std::get<std::vector<Rect>>(A);
        if (rects.empty()) return {true, 0.0, 0.0, 0.0};
        pr = projection_lengths(rects, cert.alpha);
    }
    out.denom = cert.k_xi * pr.xi + cert.k_eta * pr.eta;
    if (out.denom <= 0.0) {
        if (out.mass > 0.0)
            throw CertificateError("certificate violated outright: positive mass, zero bound");
        return {true, 0.0, out.mass, 0.0};
    }
    out.ratio = out.mass / out.denom;
    out.holds = out.ratio <= 1.0 + tol;
    return out;
}

double lipschitz_k(double lambda) { return std::sqrt(1.0 + lambda * lambda); }
double radial_multiplicity_bound(double phi, int nu, double c) {
    return std::log(1.0 / std::cos(phi)) / std::log(c) + nu + 2.0;
}
double radial_k(double phi, int nu, double c) {
    return radial_multiplicity_bound(phi, nu, c) / std::cos(phi);
}
double comb_multiplicity_bound(double alpha, int nu, double c) {
    return std::tan(alpha) / c + nu + 1.0;
}
double boxed_multiplicity_bound(double alpha, int nu, double c) {
    return std::tan(alpha) / c + nu + 2.0;
}
double comb_k1(double alpha, int nu, double c) {
    return 1.0 / (c * std::cos(alpha)) + (nu + 1.0) / std::sin(alpha);
}
double comb_k2(double alpha, int nu, double c) {
    return 1.0 / (c * std::sin(alpha)) + (nu + 1.0) / std::cos(alpha);
}
double boxed_k1(double alpha, int nu, double c) {
    return 4.0 * (1.0 / (c * std::cos(alpha)) + (nu + 2.0) / std::sin(alpha));
}
double boxed_k2(double alpha, int nu, double c) {
    return 4.0 * (1.0 / (c * std::sin(alpha)) + (nu + 2.0) / std::cos(alpha));
}

namespace {

bool is_monotone_seq(const std::vector<double>& v) {
    bool inc = true, dec = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1] - 1e-12) inc = false;
        if (v[i] > v[i - 1] + 1e-12) dec = false;
    }
    return inc || dec;
}

void require_monotone_piece(const Polyline& p, int idx) {
    std::vector<double> xs, ys;
    for (const auto& v : p.vertices) {
        xs.push_back(v.real());
        ys.push_back(v.imag());
    }
    if (!is_monotone_seq(xs) || !is_monotone_seq(ys))
        throw ClassPreconditionError("piece " + std::to_string(idx) +
                                     " is not coordinate-monotone");
}

// Max multiplicity of a family of intervals (endpoint sweep).
int interval_multiplicity(std::vector<Interval> js) {
    std::vector<std::pair<double, int>> ev;
    for (const auto& j : js) {
        ev.emplace_back(j.a, +1);
        ev.emplace_back(j.b, -1);
    }
    std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second; // opens before closes at a shared endpoint
    });
    int cur = 0, best = 0;
    for (const auto& [x, d] : ev) {
        cur += d;
        best = std::max(best, cur);
    }
    return best;
}

std::vector<Interval> piece_projections(const CompoundCurve& curve, double alpha, bool xi) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    std::vector<Interval> out;
    for (const auto& p : curve.pieces) {
        double lo = kInf, hi = -kInf;
        for (const auto& v : p.vertices) {
            const double t = xi ? rot_xi(v, ca, sa) : rot_eta(v, ca, sa);
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        out.push_back({lo, hi});
    }
    return out;
}

void require_convex_piece(const Polyline& p, int idx) {
    // cross-product sign consistency of consecutive edges, with the closing
    // edge appended (an open convex arc closes to a convex loop)
    std::vector<Complex> v = p.vertices;
    if (std::abs(v.front() - v.back()) > 1e-12) v.push_back(v.front());
    double sign = 0.0;
    const std::size_t n = v.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex e1 = v[(i + 1) % n] - v[i];
        const Complex e2 = v[(i + 2) % n] - v[(i + 1) % n];
        const double cr = e1.real() * e2.imag() - e1.imag() * e2.real();
        if (std::abs(cr) < 1e-14) continue;
        if (sign == 0.0)
            sign = cr > 0 ? 1.0 : -1.0;
        else if (cr * sign < 0.0)
            throw ClassPreconditionError("piece " + std::to_string(idx) +
                                         " is not convex (turning sign flips)");
    }
}

struct CombData {
    std::vector<double> a, b;
};

CombData comb_teeth(const CompoundCurve& curve) {
    CombData cd;
    for (std::size_t i = 0; i < curve.pieces.size(); ++i) {
        const auto& v = curve.pieces[i].vertices;
        if (v.size() != 2 || std::abs(v[0].real() - v[1].real()) > 1e-12 ||
            v[0].imag() > 1e-12 || v[1].imag() <= 0.0)
            throw ClassPreconditionError("piece " + std::to_string(i) +
                                         " is not a vertical tooth based on the x axis");
        cd.a.push_back(v[0].real());
        cd.b.push_back(v[1].imag());
    }
    for (std::size_t i = 1; i < cd.a.size(); ++i)
        if (!(cd.a[i] > cd.a[i - 1]))
            throw ClassPreconditionError("tooth abscissae must increase (index " +
                                         std::to_string(i) + ")");
    return cd;
}

void require_comb_conditions(const std::vector<double>& a, const std::vector<double>& b, int nu,
                             double c) {
    for (std::size_t i = 1; i < b.size(); ++i)
        if (b[i] < b[i - 1] - 1e-12)
            throw ClassPreconditionError("tooth heights must be nondecreasing (index " +
                                         std::to_string(i) + ")");
    for (std::size_t n = 0; n + nu < a.size(); ++n)
        if ((a[n + nu] - a[n]) / nu < c * b[n] - 1e-12)
            throw ClassPreconditionError("aspect condition fails at index " + std::to_string(n) +
                                         ": (a[n+nu]-a[n])/nu < c b[n]");
}

} // namespace

ProjectionCertificate class_certificate(const CompoundCurve& curve, double alpha) {
    ProjectionCertificate cert;
    cert.provenance = ProjectionCertificate::Provenance::ClassFormula;
    const auto& cls = curve.cls;
    switch (cls.kind) {
    case CurveClassKind::Monotone: {
        for (std::size_t i = 0; i < curve.pieces.size(); ++i)
            require_monotone_piece(curve.pieces[i], static_cast<int>(i));
        // distinct pieces must not overlap in either projection for (1,1)
        if (interval_multiplicity(piece_projections(curve, 0.0, true)) > 1 ||
            interval_multiplicity(piece_projections(curve, 0.0, false)) > 1)
            throw ClassPreconditionError("monotone pieces overlap in projection");
        cert.alpha = 0.0;
        cert.k_xi = 1.0;
        cert.k_eta = 1.0;
        cert.class_name = "monotone";
        return cert;
    }
    case CurveClassKind::Lipschitz: {
        for (std::size_t i = 0; i < curve.pieces.size(); ++i) {
            const auto& v = curve.pieces[i].vertices;
            for (std::size_t j = 1; j < v.size(); ++j) {
                const double dx = v[j].real() - v[j - 1].real();
                const double dy = v[j].imag() - v[j - 1].imag();
                if (!(dx > 0.0) || std::abs(dy) > cls.lambda * dx * (1.0 + 1e-12))
                    throw ClassPreconditionError("piece " + std::to_string(i) +
                                                 " violates the Lipschitz graph bound");
            }
        }
        if (interval_multiplicity(piece_projections(curve, 0.0, true)) > 1)
            throw ClassPreconditionError("graph pieces overlap in x projection");
        cert.alpha = 0.0;
        cert.k_xi = lipschitz_k(cls.lambda);
        cert.k_eta = 0.0;
        cert.class_name = "lipschitz";
        return cert;
    }
    case CurveClassKind::Convex: {
        for (std::size_t i = 0; i < curve.pieces.size(); ++i)
            require_convex_piece(curve.pieces[i], static_cast<int>(i));
        if (interval_multiplicity(piece_projections(curve, 0.0, true)) > 1 ||
            interval_multiplicity(piece_projections(curve, 0.0, false)) > 1)
            throw ClassPreconditionError("convex pieces overlap in projection");
        cert.alpha = 0.0;
        cert.k_xi = 4.0;
        cert.k_eta = 4.0;
        cert.class_name = "convex";
        return cert;
    }
    case CurveClassKind::Radial: {
        // pieces are radial segments inside the sector 0 < arg z < phi with
        // radii satisfying r_{n+nu} >= c^nu r_n
        std::vector<double> r0s, r1s;
        for (std::size_t i = 0; i < curve.pieces.size(); ++i) {
            const auto& v = curve.pieces[i].vertices;
            if (v.size() != 2)
                throw ClassPreconditionError("radial piece " + std::to_string(i) +
                                             " must be a single segment");
            const double th0 = std::arg(v[0]), th1 = std::arg(v[1]);
            if (std::abs(th0 - th1) > 1e-10 || th0 < -1e-12 || th0 > cls.phi + 1e-12)
                throw ClassPreconditionError("piece " + std::to_string(i) +
                                             " is not radial inside the sector");
            r0s.push_back(std::abs(v[0]));
            r1s.push_back(std::abs(v[1]));
        }
        for (std::size_t n = 0; n + cls.nu < r0s.size(); ++n) {
            const double need = std::pow(cls.c, cls.nu) * r0s[n];
            if (r0s[n + cls.nu] < need * (1.0 - 1e-12))
                throw ClassPreconditionError("radial run condition fails at index " +
                                             std::to_string(n) +
                                             ": r[n+nu] < c^nu r[n]");
        }
        // measured x-projection multiplicity against the analytic bound
        const int p1 = interval_multiplicity(piece_projections(curve, 0.0, true));
        const double bound = radial_multiplicity_bound(cls.phi, cls.nu, cls.c);
        if (p1 > bound)
            throw ClassPreconditionError("measured radial multiplicity exceeds its bound");
        cert.alpha = 0.0;
        cert.k_xi = radial_k(cls.phi, cls.nu, cls.c);
        cert.k_eta = 0.0;
        cert.class_name = "radial";
        return cert;
    }
    case CurveClassKind::Comb: {
        const CombData cd = comb_teeth(curve);
        require_comb_conditions(cd.a, cd.b, cls.nu, cls.c);
        if (!(alpha > 0.0 && alpha < M_PI / 2))
            throw ClassPreconditionError("comb certificate needs alpha in (0, pi/2)");
        const int p1 = interval_multiplicity(piece_projections(curve, alpha, true));
        if (p1 > comb_multiplicity_bound(alpha, cls.nu, cls.c))
            throw ClassPreconditionError("measured comb multiplicity exceeds its bound");
        cert.alpha = alpha;
        cert.k_xi = comb_k1(alpha, cls.nu, cls.c);
        cert.k_eta = 0.0;
        cert.class_name = "comb";
        return cert;
    }
    case CurveClassKind::Boxed: {
        const auto& A = cls.box_a;
        const auto& B = cls.box_b;
        if (A.size() != curve.pieces.size() + 1 || B.size() != curve.pieces.size())
            throw ClassPreconditionError("boxed curve needs box data per piece");
        require_comb_conditions(A, B, cls.nu, cls.c);
        for (std::size_t i = 0; i < curve.pieces.size(); ++i) {
            require_convex_piece(curve.pieces[i], static_cast<int>(i));
            for (const auto& v : curve.pieces[i].vertices)
                if (v.real() < A[i] - 1e-9 || v.real() > A[i + 1] + 1e-9 || v.imag() < -1e-9 ||
                    v.imag() > B[i] + 1e-9)
                    throw ClassPreconditionError("piece " + std::to_string(i) +
                                                 " leaves its box");
        }
        if (!(alpha > 0.0 && alpha < M_PI / 2))
            throw ClassPreconditionError("boxed certificate needs alpha in (0, pi/2)");
        // box projection multiplicity on the xi axis
        const double ca = std::cos(alpha), sa = std::sin(alpha);
        std::vector<Interval> js;
        for (std::size_t i = 0; i < B.size(); ++i)
            js.push_back({A[i] * ca, A[i + 1] * ca + B[i] * sa});
        if (interval_multiplicity(js) > boxed_multiplicity_bound(alpha, cls.nu, cls.c))
            throw ClassPreconditionError("measured box multiplicity exceeds its bound");
        cert.alpha = alpha;
        cert.k_xi = boxed_k1(alpha, cls.nu, cls.c);
        cert.k_eta = boxed_k2(alpha, cls.nu, cls.c);
        cert.class_name = "boxed";
        return cert;
    }
    case CurveClassKind::Generic:
        break;
    }
    throw ClassPreconditionError("no closed-form certificate for a generic curve");
}

namespace {

// adversarial search over triadic rectangles for the planar measures
ProjectionCertificate empirical_planar(const MeasureSpec& mu, double alpha,
                                       const SearchBudget& budget, std::uint64_t seed,
                                       double eta_weight) {
    Rng rng(seed);
    const double t = 1.0 - eta_weight;
    double worst = 0.0;
    auto score = [&](const std::vector<Rect>& rects) {
        const double mass = mu.mass(SubsetSpec(rects));
        const ProjPair pr = projection_lengths(rects, alpha);
        const double den = t * pr.xi + (1.0 - t) * pr.eta;
        if (den > 0.0) return mass / den;
        return mass > 0.0 ? kInf : 0.0;
    };
    for (long it = 0; it < budget.candidates; ++it) {
        const int m = 1 + static_cast<int>(rng.uniform_int(4));
        long cells = 1;
        for (int i = 0; i < m; ++i) cells *= 3;
        auto pick = [&](long n) { return static_cast<long>(rng.uniform_int(n)); };
        long i0 = pick(cells), j0 = pick(cells);
        long i1 = i0 + 1 + pick(cells - i0), j1 = j0 + 1 + pick(cells - j0);
        std::vector<Rect> cand{{static_cast<double>(i0) / cells, static_cast<double>(j0) / cells,
                                static_cast<double>(i1) / cells,
                                static_cast<double>(j1) / cells}};
        double sc = score(cand);
        for (int g = 0; g < budget.greedy_steps; ++g) {
            // jitter one corner by a grid step
            long ni0 = i0, nj0 = j0, ni1 = i1, nj1 = j1;
            long* corner = (rng.uniform() < 0.5) ? (rng.uniform() < 0.5 ? &ni0 : &ni1)
                                                 : (rng.uniform() < 0.5 ? &nj0 : &nj1);
            *corner += rng.uniform() < 0.5 ? 1 : -1;
            if (ni0 < 0 || nj0 < 0 || ni1 > cells || nj1 > cells || ni0 >= ni1 || nj0 >= nj1)
                continue;
            const std::vector<Rect> next{
                {static_cast<double>(ni0) / cells, static_cast<double>(nj0) / cells,
                 static_cast<double>(ni1) / cells, static_cast<double>(nj1) / cells}};
            const double sc2 = score(next);
            if (sc2 > sc) {
                sc = sc2;
                i0 = ni0;
                j0 = nj0;
                i1 = ni1;
                j1 = nj1;
            }
        }
        worst = std::max(worst, sc);
    }
    ProjectionCertificate cert;
    cert.provenance = ProjectionCertificate::Provenance::Empirical;
    cert.alpha = alpha;
    cert.k_xi = worst * t;
    cert.k_eta = worst * eta_weight;
    cert.budget = budget.candidates;
    cert.worst_ratio = worst;
    return cert;
}

} // namespace

ProjectionCertificate empirical_certificate(const MeasureSpec& mu, double alpha,
                                            const SearchBudget& budget, std::uint64_t seed,
                                            double eta_weight) {
    if (!mu.is_arclength()) return empirical_planar(mu, alpha, budget, seed, eta_weight);
    const CompoundCurve& curve = mu.curve();
    Rng rng(seed);
    const double t = 1.0 - eta_weight;

    double worst = 0.0;
    std::vector<SubArc> witness;
    auto score = [&](const std::vector<SubArc>& arcs) {
        const double mass = mu.mass(SubsetSpec(arcs));
        const ProjPair pr = projection_lengths(curve, arcs, alpha);
        const double den = t * pr.xi + (1.0 - t) * pr.eta;
        if (den > 0.0) return mass / den;
        return mass > 0.0 ? kInf : 0.0; // outright non-certifiable direction
    };

    long tried = 0;
    for (long it = 0; it < budget.candidates; ++it) {
        // random union of sub-arcs, then greedy growth of the best one
        std::vector<SubArc> arcs;
        const int k = 1 + static_cast<int>(rng.uniform_int(budget.max_arcs));
        for (int j = 0; j < k; ++j) {
            const int piece = static_cast<int>(rng.uniform_int(curve.pieces.size()));
            const double L = curve.pieces[piece].length();
            double a = rng.uniform(0.0, L), b = rng.uniform(0.0, L);
            if (a > b) std::swap(a, b);
            if (b - a < 1e-9 * L) b = std::min(L, a + 0.01 * L);
            arcs.push_back({piece, a, b});
        }
        double sc = score(arcs);
        for (int g = 0; g < budget.greedy_steps; ++g) {
            // try extending or shrinking a random arc end
            std::vector<SubArc> cand = arcs;
            SubArc& a = cand[rng.uniform_int(cand.size())];
            const double L = curve.pieces[a.piece].length();
            const double step = L * std::pow(2.0, -static_cast<double>(1 + rng.uniform_int(8)));
            if (rng.uniform() < 0.5)
                a.s0 = std::clamp(a.s0 + (rng.uniform() < 0.5 ? step : -step), 0.0, a.s1);
            else
                a.s1 = std::clamp(a.s1 + (rng.uniform() < 0.5 ? step : -step), a.s0, L);
            const double sc2 = score(cand);
            ++tried;
            if (sc2 > sc) {
                sc = sc2;
                arcs = std::move(cand);
            }
        }
        if (sc > worst) {
            worst = sc;
            witness = arcs;
        }
    }

    ProjectionCertificate cert;
    cert.provenance = ProjectionCertificate::Provenance::Empirical;
    cert.alpha = alpha;
    cert.k_xi = t > 0.0 ? worst * t : 0.0;
    cert.k_eta = eta_weight > 0.0 ? worst * eta_weight : 0.0;
    // report as constants k such that mass <= k_xi |A_xi| + k_eta |A_eta| held
    // with equality on the worst witness
    cert.budget = budget.candidates;
    cert.worst_ratio = worst;
    cert.worst_witness = std::move(witness);
    cert.budget_exhausted = tried >= budget.candidates * budget.greedy_steps;
    return cert;
}

// ---------------------------------------------------------------------------
// the folded line

namespace {
// arclength density of x(t) = t - 2 sin t projected on the x axis: the map is
// 2-to-1 exactly on the intervals J_n = [pi/3 - sqrt(3) + 2 pi n, sqrt(3) - pi/3 + 2 pi n]
const double kFoldHalf = std::sqrt(3.0) - M_PI / 3.0;
} // namespace

double FoldCurveReport::density_at(double x) const {
    double r = std::fmod(x, 2.0 * M_PI);
    if (r > M_PI) r -= 2.0 * M_PI;
    if (r < -M_PI) r += 2.0 * M_PI;
    return (r >= -kFoldHalf && r <= kFoldHalf) ? 2.0 : 1.0;
}

FoldCurveReport fold_curve_measure() {
    FoldCurveReport rep;
    rep.j_lo = -kFoldHalf;
    rep.j_hi = kFoldHalf;
    // verify mu(A) <= 2 |A_x| on random interval unions: mu has density
    // 1 + chi_J <= 2, so the ratio never exceeds 1; measure by quadrature
    Rng rng(20240404u);
    double worst = 0.0;
    auto j_overlap = [](double a, double b) {
        // |[a,b] cap J| with J the 2pi-periodic union of [-kFoldHalf, kFoldHalf]
        double total = 0.0;
        const long n0 = std::lround(std::floor((a - kFoldHalf) / (2.0 * M_PI)));
        const long n1 = std::lround(std::ceil((b + kFoldHalf) / (2.0 * M_PI)));
        for (long n = n0; n <= n1; ++n) {
            const double lo = 2.0 * M_PI * n - kFoldHalf;
            const double hi = 2.0 * M_PI * n + kFoldHalf;
            total += std::max(0.0, std::min(b, hi) - std::max(a, lo));
        }
        return total;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(rng.uniform_int(4));
        std::vector<Interval> iv;
        for (int j = 0; j < k; ++j) {
            double a = rng.uniform(-10.0, 10.0);
            double b = a + rng.uniform(0.0, 5.0);
            iv.push_back({a, b});
        }
        // merge, then integrate the density 1 + chi_J exactly per component
        std::sort(iv.begin(), iv.end(), [](const Interval& u, const Interval& v) { return u.a < v.a; });
        std::vector<Interval> merged;
        for (const auto& i : iv) {
            if (!merged.empty() && i.a <= merged.back().b)
                merged.back().b = std::max(merged.back().b, i.b);
            else
                merged.push_back(i);
        }
        double mass = 0.0, ax = 0.0;
        for (const auto& i : merged) {
            mass += (i.b - i.a) + j_overlap(i.a, i.b);
            ax += i.b - i.a;
        }
        if (ax > 0.0) worst = std::max(worst, mass / (2.0 * ax));
    }
    rep.worst_ratio = worst;
    rep.certificate_holds = worst <= 1.0 + 1e-6;
    return rep;
}

} // namespace hylab
