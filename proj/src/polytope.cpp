#include "sympmat/polytope.hpp"

#include <algorithm>

#include "sympmat/error.hpp"
#include "sympmat/linalg.hpp"

namespace sympmat {

LatticePolytope::LatticePolytope(int dim, std::vector<LatticePoint> pts) : dim_ambient(dim), points(std::move(pts)) {
    for (const auto& x : points)
        if (static_cast<int>(x.size()) != dim) throw Error(ErrorKind::InvalidInput, "point of wrong dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

LatticePolytope symmetric_polytope(const BasisSet& b, int n) {
    std::vector<LatticePoint> pts;
    for (const Pair& p : b) {
        LatticePoint x(2 * n, 0);
        x[p.lo - 1] += 1;
        x[p.hi - 1] += 1;
        pts.push_back(std::move(x));
    }
    return LatticePolytope(2 * n, std::move(pts));
}

LatticePolytope symmetric_polytope(const SymmetricMatroid& m) { return symmetric_polytope(m.bases(), m.n()); }

namespace {

void add_epsilon(LatticePoint& x, Position p, const GroundSet& e) {
    if (e.is_starred(p))
        x[e.star(p) - 1] -= 1;
    else
        x[p - 1] += 1;
}

}  // namespace

LatticePolytope symplectic_polytope(const BasisSet& b, int n) {
    GroundSet e{n};
    std::vector<LatticePoint> pts;
    for (const Pair& p : b) {
        LatticePoint x(n, 0);
        add_epsilon(x, p.lo, e);
        add_epsilon(x, p.hi, e);
        pts.push_back(std::move(x));
    }
    return LatticePolytope(n, std::move(pts));
}

LatticePolytope symplectic_polytope(const SymplecticMatroid& m) { return symplectic_polytope(m.bases(), m.n()); }

LatticePolytope project_pi(const LatticePolytope& p) {
    if (p.dim_ambient % 2 != 0) throw Error(ErrorKind::InvalidInput, "projection needs an even ambient dimension");
    const int n = p.dim_ambient / 2;
    GroundSet e{n};
    std::vector<LatticePoint> out;
    for (const auto& x : p.points) {
        LatticePoint y(n, 0);
        for (Position q = 1; q <= e.size(); ++q) {
            if (e.is_starred(q))
                y[e.star(q) - 1] -= x[q - 1];
            else
                y[q - 1] += x[q - 1];
        }
        out.push_back(std::move(y));
    }
    return LatticePolytope(n, std::move(out));
}

int affine_dim(const LatticePolytope& p) {
    if (p.points.empty()) throw Error(ErrorKind::InvalidInput, "affine dimension of an empty polytope");
    RationalMatrix m(p.points.size() - 1, p.dim_ambient);
    for (std::size_t k = 1; k < p.points.size(); ++k)
        for (int c = 0; c < p.dim_ambient; ++c) m(k - 1, c) = p.points[k][c] - p.points[0][c];
    return static_cast<int>(rank(std::move(m)));
}

bool hull_contains(const LatticePolytope& p, const LatticePoint& x) {
    if (static_cast<int>(x.size()) != p.dim_ambient) throw Error(ErrorKind::InvalidInput, "point of wrong dimension");
    if (p.points.empty()) return false;
    // Unknowns: convex weights; rows: coordinates plus the sum-to-one row.
    RationalMatrix a(p.dim_ambient + 1, p.points.size());
    std::vector<Rational> rhs(p.dim_ambient + 1);
    for (std::size_t k = 0; k < p.points.size(); ++k) {
        for (int c = 0; c < p.dim_ambient; ++c) a(c, k) = p.points[k][c];
        a(p.dim_ambient, k) = 1;
    }
    for (int c = 0; c < p.dim_ambient; ++c) rhs[c] = x[c];
    rhs[p.dim_ambient] = 1;
    return nonnegative_solution(a, rhs).has_value();
}

bool hull_equal(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.dim_ambient != q.dim_ambient) throw Error(ErrorKind::InvalidInput, "polytopes live in different dimensions");
    if (p.points.empty() || q.points.empty()) return p.points.empty() && q.points.empty();
    for (const auto& x : p.points)
        if (!hull_contains(q, x)) return false;
    for (const auto& x : q.points)
        if (!hull_contains(p, x)) return false;
    return true;
}

BasisSet integral_bases(const LatticePolytope& p) {
    if (p.dim_ambient % 2 != 0) throw Error(ErrorKind::InvalidInput, "expected a polytope in Z^{2n}");
    BasisSet out;
    for (Position a = 1; a <= p.dim_ambient; ++a)
        for (Position b = a + 1; b <= p.dim_ambient; ++b) {
            LatticePoint x(p.dim_ambient, 0);
            x[a - 1] = x[b - 1] = 1;
            if (hull_contains(p, x)) out.push_back({a, b});
        }
    return out;
}

}  // namespace sympmat
