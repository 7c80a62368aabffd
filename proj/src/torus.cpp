#include "torus.hpp"

#include <cmath>
#include <stdexcept>

namespace tritorus {

namespace {

constexpr double kDomainTol = 1e-12;

}  // namespace

TauParam TauParam::make(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || b <= 0.0)
        throw std::invalid_argument("TauParam: need finite tau with b > 0");
    if (!is_in_domain(a, b))
        throw std::invalid_argument("TauParam: tau outside the fundamental domain");
    return TauParam(a, b);
}

bool TauParam::is_in_domain(double a, double b, double tol) {
    if (!(b > 0.0) || a <= -0.5 || a > 0.5) return false;
    const double r2 = a * a + b * b;
    if (r2 > 1.0 + tol) return true;
    return r2 >= 1.0 - tol && a >= 0.0;
}

double TauParam::domain_floor(double a) {
    return std::sqrt(std::max(0.0, 1.0 - a * a));
}

TauParam TauParam::mirrored() const { return TauParam(-a_, b_); }

TorusPoint TorusPoint::wrap(double u, double v) {
    u -= std::floor(u);
    v -= std::floor(v);
    if (u >= 1.0) u = 0.0;
    if (v >= 1.0) v = 0.0;
    return {u, v};
}

std::pair<double, double> ModularWord::apply(double a, double b) const {
    const double p = static_cast<double>(matrix[0][0]);
    const double q = static_cast<double>(matrix[0][1]);
    const double r = static_cast<double>(matrix[1][0]);
    const double s = static_cast<double>(matrix[1][1]);
    // (p z + q) / (r z + s) for z = a + ib
    const double dre = r * a + s;
    const double dim = r * b;
    const double den = dre * dre + dim * dim;
    const double nre = p * a + q;
    const double nim = p * b;
    return {(nre * dre + nim * dim) / den, (nim * dre - nre * dim) / den};
}

std::string ModularWord::str() const {
    if (moves.empty()) return "I";
    std::string out;
    for (const Move& mv : moves) {
        if (!out.empty()) out += ' ';
        if (mv.gen == 'S') {
            out += 'S';
        } else {
            out += "T^" + std::to_string(mv.power);
        }
    }
    return out;
}

namespace {

void left_multiply(std::array<std::array<long long, 2>, 2>& m, long long p,
                   long long q, long long r, long long s) {
    const long long a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    m[0][0] = p * a + q * c;
    m[0][1] = p * b + q * d;
    m[1][0] = r * a + s * c;
    m[1][1] = r * b + s * d;
}

void push_translate(ModularWord& w, long long k) {
    if (k == 0) return;
    if (!w.moves.empty() && w.moves.back().gen == 'T')
        w.moves.back().power += static_cast<int>(k);
    else
        w.moves.push_back({'T', static_cast<int>(k)});
    left_multiply(w.matrix, 1, k, 0, 1);
}

void push_invert(ModularWord& w) {
    w.moves.push_back({'S', 1});
    left_multiply(w.matrix, 0, -1, 1, 0);
}

}  // namespace

ReducedTau reduce_to_fundamental(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || b <= 0.0)
        throw std::invalid_argument("reduce_to_fundamental: need finite tau with b > 0");

    ModularWord word;
    for (int iter = 0; iter < 64; ++iter) {
        const double k = std::ceil(a - 0.5);
        if (k != 0.0) {
            a -= k;
            push_translate(word, -static_cast<long long>(k));
        }
        if (a <= -0.5) {  // exact boundary landing maps to +1/2
            a += 1.0;
            push_translate(word, 1);
        }
        const double r2 = a * a + b * b;
        if (r2 < 1.0 - kDomainTol || (r2 <= 1.0 + kDomainTol && a < 0.0)) {
            const double na = -a / r2;
            b = b / r2;
            a = na;
            push_invert(word);
            continue;
        }
        return {TauParam::make(a, b), std::move(word)};
    }
    throw std::runtime_error("reduce_to_fundamental: no convergence in 64 steps");
}

std::vector<HalfPlane> dirichlet_halfplanes(const TauParam& tau) {
    const double sign = tau.a() < 0.0 ? -1.0 : 1.0;
    const double aa = std::fabs(tau.a());
    const double b = tau.b();
    const Vec2 gens[3] = {{sign * 1.0, 0.0}, {sign * aa, b}, {sign * (aa - 1.0), b}};
    std::vector<HalfPlane> planes;
    planes.reserve(6);
    for (const Vec2& g : gens) {
        const double half = 0.5 * norm2(g);
        planes.push_back({g, half});
        planes.push_back({-g, half});
    }
    return planes;
}

DirichletDomain dirichlet_domain(const TauParam& tau) {
    const double sign = tau.a() < 0.0 ? -1.0 : 1.0;
    const double aa = std::fabs(tau.a());
    const double b = tau.b();
    const double alpha = (b * b + aa * aa - aa) / (2.0 * b);
    const double beta = (b * b - aa * aa + aa) / (2.0 * b);

    const Vec2 A{0.5, alpha}, B{aa - 0.5, beta}, C{-0.5, alpha};
    std::vector<Vec2> verts{A, B, C, -A, -B, -C};
    if (sign < 0.0)
        for (Vec2& v : verts) v.x = -v.x;

    return {tau, ConvexPolygon::from_vertices(std::move(verts)), alpha, beta};
}

AffineMap normalizing_map(const TauParam& tau) {
    const double aa = std::fabs(tau.a());
    const double r2 = tau.a() * tau.a() + tau.b() * tau.b();
    AffineMap g = AffineMap::linear(1.0, 0.0, aa / r2, tau.b() / r2);
    if (tau.a() < 0.0) g = g * AffineMap::linear(-1.0, 0.0, 0.0, 1.0);
    return g;
}

HexParams hex_params(const TauParam& tau) {
    const double aa = std::fabs(tau.a());
    return {aa, aa / (tau.a() * tau.a() + tau.b() * tau.b())};
}

namespace {

Vec2 lattice_offset(Vec2 v, double m, double n, const TauParam& tau) {
    return {v.x - m - n * tau.a(), v.y - n * tau.b()};
}

}  // namespace

Vec2 shortest_representative(Vec2 v, const TauParam& tau) {
    const double n0 = std::round(v.y / tau.b());
    const double m0 = std::round(v.x - n0 * tau.a());
    Vec2 best = lattice_offset(v, m0, n0, tau);
    double best_n2 = norm2(best);
    for (int dm = -1; dm <= 1; ++dm) {
        for (int dn = -1; dn <= 1; ++dn) {
            if (dm == 0 && dn == 0) continue;
            const Vec2 cand = lattice_offset(v, m0 + dm, n0 + dn, tau);
            const double n2 = norm2(cand);
            if (n2 < best_n2 ||
                (n2 == best_n2 &&
                 (cand.x < best.x || (cand.x == best.x && cand.y < best.y)))) {
                best = cand;
                best_n2 = n2;
            }
        }
    }
    return best;
}

HomotopyClass lattice_coordinates(Vec2 w, const TauParam& tau) {
    const long long n = std::llround(w.y / tau.b());
    const long long m = std::llround(w.x - static_cast<double>(n) * tau.a());
    return {m, n};
}

HomotopyClass classify_triangle(const TorusPoint& x1, const TorusPoint& x2,
                                const TorusPoint& x3, const TauParam& tau) {
    const Vec2 p1 = x1.to_plane(tau), p2 = x2.to_plane(tau), p3 = x3.to_plane(tau);
    const Vec2 w12 = shortest_representative(p2 - p1, tau);
    const Vec2 w23 = shortest_representative(p3 - p2, tau);
    const Vec2 w31 = shortest_representative(p1 - p3, tau);
    return lattice_coordinates(w12 + w23 + w31, tau);
}

bool triangle_trivial_by_containment(const TorusPoint& x1, const TorusPoint& x2,
                                     const TorusPoint& x3, const TauParam& tau) {
    const Vec2 p1 = x1.to_plane(tau), p2 = x2.to_plane(tau), p3 = x3.to_plane(tau);
    const Vec2 w12 = shortest_representative(p2 - p1, tau);
    const Vec2 lift3 = shortest_representative(p3 - p1, tau);
    const DirichletDomain dom = dirichlet_domain(tau);
    return contains_point(dom.hexagon, lift3 - w12, 1e-9);
}

TorusPoint sample_torus_point(Rng& rng, const TauParam& tau) {
    (void)tau;  // the chart is tau-independent; the plane image is not
    const double u = rng.next_unit();
    const double v = rng.next_unit();
    return {u, v};
}

}  // namespace tritorus
