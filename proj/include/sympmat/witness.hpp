#pragma once

// Exact-rational realizations of rank-2 matroids: a 2 x 2n matrix whose 2 x 2
// minors x_{i,j} (i < j, columns in that order) are the Plucker coordinates.

#include <span>
#include <string_view>
#include <vector>

#include "sympmat/linalg.hpp"
#include "sympmat/matroid.hpp"

namespace sympmat {

/// Offset of x_{i,j} (i < j) in the Plucker vector; pairs in lexicographic order.
std::size_t plucker_index(Position i, Position j, int n);

/// All 2 x 2 minors of a 2 x 2n matrix. Throws RankDeficient if they all vanish
/// and InvalidInput on a matrix that is not 2 x 2n.
std::vector<Rational> plucker_vector(const RationalMatrix& m);

class PluckerWitness {
public:
    /// Derives the Plucker vector from the matrix.
    PluckerWitness(int n, RationalMatrix matrix);
    /// Imported witness; the stored vector is taken as given and only checked
    /// by verify_certificate.
    PluckerWitness(int n, RationalMatrix matrix, std::vector<Rational> plucker);

    int n() const { return n_; }
    const RationalMatrix& matrix() const { return matrix_; }
    const std::vector<Rational>& plucker() const { return plucker_; }
    /// x_{min(i,j), max(i,j)}; the order of the arguments is ignored.
    const Rational& coordinate(Position i, Position j) const;

private:
    int n_;
    RationalMatrix matrix_;
    std::vector<Rational> plucker_;
};

/// Pairs with nonzero coordinate, as a symmetric matroid.
SymmetricMatroid matroid_of_witness(const PluckerWitness& w);

/// s = sum over i in [n] of x_{i, i*}.
Rational symplectic_sum(const PluckerWitness& w);

/// x_ab x_cd - x_ac x_bd + x_ad x_bc = 0 for every a < b < c < d.
bool satisfies_plucker_relations(const PluckerWitness& w);

/// Loops get zero columns; an element of bag k gets column (1, k).
PluckerWitness build_witness(const SymmetricMatroid& m);

/// Realizes N inside the hyperplane s = 0 from its normal lifting. Throws
/// NotRepresentable when every lifting has degree 1.
PluckerWitness build_symplectic_witness(const SymplecticMatroid& m);

enum class CertificateFailure {
    None,
    Shape,
    RankDeficient,
    MinorsMismatch,
    PluckerRelation,
    SymplecticSum,
    PatternMismatch,
};

std::string_view to_string(CertificateFailure f);

struct CertificateCheck {
    bool ok = false;
    CertificateFailure reason = CertificateFailure::None;

    explicit operator bool() const { return ok; }
};

/// Rank 2, stored vector equal to the minors, all Grassmann-Plucker relations,
/// s = 0, and the admissible nonzero pattern equal to B(N).
CertificateCheck verify_certificate(const PluckerWitness& w, const SymplecticMatroid& m);

/// Torus element diag(mu_1..mu_n, mu_n^-1..mu_1^-1) acting on columns. Throws
/// InvalidInput on a zero or missing mu.
PluckerWitness apply_torus(const PluckerWitness& w, std::span<const Rational> mu);

}  // namespace sympmat
