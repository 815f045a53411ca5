#pragma once

// Bookkeeping for the torus-invariant geometry of SpG(2, 2n): stabilizers of
// thin Schubert cells, their dimensions, Schubert varieties, Betti numbers and
// the n = 2 classification of T-invariant subvarieties.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "sympmat/matroid.hpp"

namespace sympmat {

enum class Torus {
    Full,        // T', diagonal (C*)^{2n} acting on G(2, 2n)
    Symplectic,  // T, diag(mu_1..mu_n, mu_n^-1..mu_1^-1)
};

/// Stabilizer of any point of the thin cell of M. Solving
/// u_i + u_j = lambda over the bases (with u_{i*} = -u_i on T) gives `dim`;
/// lambda is an unknown of the system and is never free once B is nonempty,
/// so scalars count toward the dimension and a fixed point gets the whole
/// torus. `components` is the order of the finite part, i.e. the torsion of
/// the character group Z^k / L.
struct StabilizerReport {
    Torus torus = Torus::Full;
    int dim = 0;
    long long components = 1;
};

StabilizerReport stabilizer(const BasisSet& b, int n, Torus torus);
inline StabilizerReport stabilizer(const SymmetricMatroid& m, Torus torus) {
    return stabilizer(m.bases(), m.n(), torus);
}

enum class DimensionCase { LengthTwo, DegreeZero, DegreeAtLeastTwo };

/// The closed formula as stated for the max lifting, split as fiber + base.
struct FormulaDimension {
    DimensionCase kase = DimensionCase::LengthTwo;
    int first = 0;
    int second = 0;
    int total() const { return first + second; }
};

struct CellDimensions {
    SymmetricMatroid max_lifting;
    int total = 0;     // w + l - 4, minus 1 when deg >= 2
    int fiber = 0;     // affine dimension of the symplectic polytope
    int quotient = 0;  // total - fiber
    FormulaDimension formula;
    bool agrees = false;   // formula.total() == total
    bool flagged = false;  // length(max lifting) == 2: the formula's first case
};

/// Throws NotRepresentable.
CellDimensions cell_dims(const SymplecticMatroid& m);

struct SchubertVariety {
    Pair pair;
    BasisSet vanishing;  // admissible pairs not Gale-below `pair` in the standard order
    int dim = 0;
};

/// Throws InvalidInput for a non-admissible pair.
SchubertVariety sp_schubert(const Pair& p, int n);

/// Complex-degree Betti numbers of SpG(2, 2n) from those of G(2, 2n) and the
/// hyperplane-section shift.
std::vector<long long> betti_via_grassmannian(int n);
/// Same, counting admissible pairs by Schubert dimension.
std::vector<long long> betti_via_schubert(int n);
/// Both computations, checked equal. n >= 2.
std::vector<long long> betti_numbers(int n);

/// The 2n(n-1) torus-fixed points, one per admissible pair.
std::vector<Pair> fixed_points(int n);

enum class HomologyClass { Point, Line, TwoLines, Hyperplane, TwoHyperplanes, Fundamental };

std::string_view to_string(HomologyClass c);
/// Coefficients in the basis ([*], [P1], [H], [SpG(2,4)]).
std::array<int, 4> coefficients(HomologyClass c);
/// Class of the closure of the stratum of an n = 2 symplectic matroid.
HomologyClass stratum_class_n2(const BasisSet& b);

struct StratumReport {
    SymplecticMatroid matroid;
    bool representable = true;
    Trichotomy trichotomy = Trichotomy::None;
    int degree = 0;
    int weight = 0;
    int length = 0;
    CellDimensions dims;
    StabilizerReport stabilizer_full;
    StabilizerReport stabilizer_symplectic;
    std::optional<HomologyClass> homology;  // n = 2 only
    BasisSet orbit_representative;          // BC_n canonical form
    int orbit_index = 0;
};

/// One T-invariant subvariety type for n = 2: the closure of a stratum, or an
/// orbit of a closed point of the generic stratum's quotient curve.
struct InvariantType {
    BasisSet stratum;
    bool closed_point_orbit = false;
    int dim = 0;
    HomologyClass homology = HomologyClass::Point;
};

struct Classification {
    int n = 0;
    std::vector<StratumReport> strata;
    std::vector<InvariantType> types;  // n = 2 only
};

/// All representable strata, n <= 3. Throws TooLarge otherwise.
Classification classify(int n);

}  // namespace sympmat
