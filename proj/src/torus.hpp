#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "geom2d.hpp"
#include "rng.hpp"

// Flat torus shapes tau = a + ib, their Dirichlet domains, the normalizing
// map onto the notched square family, shortest lattice representatives and
// homotopy classification of geodesic triangles.

namespace tritorus {

// Shape parameter of a flat torus, constrained to the fundamental domain
//   a in (-1/2, 1/2],  b > sqrt(1 - a^2),
// with the boundary arc b = sqrt(1 - a^2) kept for a in [0, 1/2].
class TauParam {
  public:
    static TauParam make(double a, double b);  // throws if outside the domain
    static bool is_in_domain(double a, double b, double tol = 1e-12);
    // Lowest admissible b for a given a in (-1/2, 1/2].
    static double domain_floor(double a);

    double a() const { return a_; }
    double b() const { return b_; }
    TauParam mirrored() const;  // reflection a -> -a (stays in the domain closure)

  private:
    TauParam(double a, double b) : a_(a), b_(b) {}
    double a_;
    double b_;
};

// Legs (s, t) of the notched square affinely equivalent to the Dirichlet
// domain; both lie in [0, 1/2] and s*t < 1.
struct HexParams {
    double s = 0.0;
    double t = 0.0;
};

// Point on the torus in lattice coordinates: the plane point is
// u*(1,0) + v*(a,b), with u, v in [0,1).
struct TorusPoint {
    double u = 0.0;
    double v = 0.0;

    static TorusPoint wrap(double u, double v);
    Vec2 to_plane(const TauParam& tau) const {
        return {u + v * tau.a(), v * tau.b()};
    }
};

// Lattice coordinates of the summed lifted edge vectors; (0,0) means the
// triangle is homotopically trivial.
struct HomotopyClass {
    long long m = 0;
    long long n = 0;
    bool trivial() const { return m == 0 && n == 0; }
};

struct DirichletDomain {
    TauParam tau;
    ConvexPolygon hexagon;  // centrally symmetric; 4 vertices when a = 0
    double alpha = 0.0;
    double beta = 0.0;
};

// Word of modular-group generators, recorded as applied: 'T' with power k is
// tau -> tau + k, 'S' is tau -> -1/tau. `matrix` is the composed integer
// Moebius matrix [[p, q], [r, s]].
struct ModularWord {
    struct Move {
        char gen;
        int power;
    };
    std::vector<Move> moves;
    std::array<std::array<long long, 2>, 2> matrix{{{1, 0}, {0, 1}}};

    bool is_identity() const { return moves.empty(); }
    // Moebius action of `matrix` on a + ib, b > 0.
    std::pair<double, double> apply(double a, double b) const;
    std::string str() const;
};

struct ReducedTau {
    TauParam tau;
    ModularWord word;
};

// Modular reduction of an arbitrary a + ib (b > 0) into the fundamental
// domain. Throws std::invalid_argument for b <= 0 and std::runtime_error
// if 64 iterations do not suffice.
ReducedTau reduce_to_fundamental(double a, double b);

// The six half-planes |x| <= |x - g| for g = +-(1,0), +-(a,b), +-(a-1,b)
// (mirrored for a < 0) that carve out the Dirichlet domain.
std::vector<HalfPlane> dirichlet_halfplanes(const TauParam& tau);

// Dirichlet domain of the origin: hexagon with vertices (1/2, alpha),
// (a - 1/2, beta), (-1/2, alpha) and their negatives, where
// alpha = (b^2 + a^2 - a) / (2b) and beta = (b^2 - a^2 + a) / (2b);
// mirrored across the vertical axis for a < 0.
DirichletDomain dirichlet_domain(const TauParam& tau);

// Linear map carrying the Dirichlet domain onto the notched square with
// legs hex_params(tau); includes the vertical-axis mirror when a < 0.
AffineMap normalizing_map(const TauParam& tau);

// s = |a|, t = |a| / (a^2 + b^2).
HexParams hex_params(const TauParam& tau);

// Lattice translate of v with minimal Euclidean norm; ties are broken by
// lexicographic (x, then y) order of the representative.
Vec2 shortest_representative(Vec2 v, const TauParam& tau);

// Exact-integer lattice coordinates (m, n) with w ~= m*(1,0) + n*(a,b);
// intended for w known to be a lattice vector.
HomotopyClass lattice_coordinates(Vec2 w, const TauParam& tau);

// Sum of the three shortest lifted edge vectors, as a lattice class.
HomotopyClass classify_triangle(const TorusPoint& x1, const TorusPoint& x2,
                                const TorusPoint& x3, const TauParam& tau);

// Independent criterion: trivial iff the lift of x3 through the shortest
// x1-x3 geodesic lands in the Dirichlet domain centered at the lift of x2.
bool triangle_trivial_by_containment(const TorusPoint& x1, const TorusPoint& x2,
                                     const TorusPoint& x3, const TauParam& tau);

// Uniform point on the torus; (u, v) uniform on [0,1)^2 pushes forward to
// the uniform measure on the fundamental parallelogram.
TorusPoint sample_torus_point(Rng& rng, const TauParam& tau);

}  // namespace tritorus
