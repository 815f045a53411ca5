#pragma once

// Moment polytopes kept as finite sets of generating lattice points. Hull
// questions are answered exactly with rational phase-one simplex.

#include <vector>

#include "sympmat/core.hpp"
#include "sympmat/matroid.hpp"

namespace sympmat {

using LatticePoint = std::vector<int>;

struct LatticePolytope {
    int dim_ambient = 0;
    std::vector<LatticePoint> points;  // sorted, duplicate-free

    LatticePolytope() = default;
    /// Throws InvalidInput if a point has the wrong dimension.
    LatticePolytope(int dim, std::vector<LatticePoint> pts);

    bool operator==(const LatticePolytope&) const = default;
};

/// Points e_i + e_j in Z^{2n} for {i, j} in B(M).
LatticePolytope symmetric_polytope(const SymmetricMatroid& m);
LatticePolytope symmetric_polytope(const BasisSet& b, int n);

/// Points eps_i + eps_j in Z^n, where eps_i = phi_i and eps_{i*} = -phi_i.
LatticePolytope symplectic_polytope(const SymplecticMatroid& m);
LatticePolytope symplectic_polytope(const BasisSet& b, int n);

/// Image under the linear map e_i -> eps_i. Ambient dimension must be even.
LatticePolytope project_pi(const LatticePolytope& p);

/// Rank over Q of {p - p_0}. Throws InvalidInput on an empty polytope.
int affine_dim(const LatticePolytope& p);

bool hull_contains(const LatticePolytope& p, const LatticePoint& x);

/// conv(P) == conv(Q): every generator of each side is a convex combination
/// of the other side's generators.
bool hull_equal(const LatticePolytope& p, const LatticePolytope& q);

/// Pairs {i, j} whose vector e_i + e_j lies in conv(P); P in Z^{2n}.
BasisSet integral_bases(const LatticePolytope& p);

}  // namespace sympmat
