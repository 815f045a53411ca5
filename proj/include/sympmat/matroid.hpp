#pragma once

// Rank-2 matroids on [2n] (symmetric, i.e. S_2n-matroids) and on E_n
// (symplectic, i.e. BC_n-matroids), linked by the symplectic projection that
// deletes the diagonal bases {i, i*}.

#include <optional>
#include <variant>
#include <vector>

#include "sympmat/core.hpp"

namespace sympmat {

using Bag = std::vector<Position>;

/// Rank-2 matroid on [2n] presented as a non-intersecting family of bags.
/// Bases are the pairs meeting two different bags; uncovered positions are
/// loops.
class SymmetricMatroid {
public:
    /// Throws InvalidInput unless the bags are nonempty, pairwise disjoint,
    /// inside [2n] and at least two in number. Bags are canonicalized: each
    /// sorted, then ordered by smallest element.
    SymmetricMatroid(int n, std::vector<Bag> bags);

    int n() const { return n_; }
    GroundSet ground() const { return GroundSet{n_}; }
    const std::vector<Bag>& bags() const { return bags_; }
    std::vector<Position> loops() const;

    /// Index into bags() or -1 for a loop.
    int bag_of(Position p) const { return bag_of_[p]; }

    BasisSet bases() const;
    bool is_basis(Position a, Position b) const;

    /// Number of non-loop elements.
    int weight() const;
    /// Number of bags.
    int length() const { return static_cast<int>(bags_.size()); }

    bool operator==(const SymmetricMatroid& o) const { return n_ == o.n_ && bags_ == o.bags_; }
    bool operator<(const SymmetricMatroid& o) const { return bags_ < o.bags_; }

private:
    int n_;
    std::vector<Bag> bags_;
    std::vector<int> bag_of_;
};

inline BasisSet bases_of(const SymmetricMatroid& m) { return m.bases(); }

/// The unique symmetric matroid whose bases are exactly `b`. Two support
/// elements share a bag iff their pair is not a basis; that relation has to be
/// an equivalence whose cross-class pairs are all of `b`.
/// Throws Empty for b = {} and NotAMatroid otherwise.
SymmetricMatroid from_bases(const BasisSet& b, int n);

/// Like from_bases but returns nullopt instead of throwing NotAMatroid/Empty.
std::optional<SymmetricMatroid> try_from_bases(const BasisSet& b, int n);

/// Every symmetric matroid on [2n], sorted by bags.
std::vector<SymmetricMatroid> enumerate_symmetric(int n);

/// Labels i in [n] whose diagonal pair {i, i*} is a basis (A(M) restricted to
/// unstarred labels).
std::vector<Position> diagonal_labels(const SymmetricMatroid& m);

/// Number of diagonal pairs among the bases.
int degree(const SymmetricMatroid& m);

// Codimension-one moves on the bag family. Bags are addressed by any element
// they contain.
struct Erase {
    Position element;
};
struct Merge {
    Position a;
    Position b;
};
/// Splits `element` off into its own bag.
struct Split {
    Position element;
};
using Move = std::variant<Erase, Merge, Split>;

/// Throws InvalidMove when the move does not apply or the result would have
/// fewer than two bags.
SymmetricMatroid transform(const SymmetricMatroid& m, const Move& move);

/// B(M) minus its diagonal pairs. Throws EmptyProjection if nothing remains.
BasisSet symplectic_projection(const SymmetricMatroid& m);

/// Maximality property: under every admissible order B has a unique maximal
/// element. False for the empty set and for any non-admissible pair.
bool is_symplectic_matroid(const BasisSet& b, int n);

/// Same test against precomputed orders (enumerate_admissible_orders(n)).
bool is_symplectic_matroid(const BasisSet& b, int n, const std::vector<AdmissibleOrder>& orders);

/// A BC_n-matroid of rank 2: admissible basis set passing the maximality
/// property.
class SymplecticMatroid {
public:
    /// Throws InvalidInput when `bases` fails the maximality property or holds
    /// a non-admissible pair.
    SymplecticMatroid(int n, BasisSet bases);

    int n() const { return n_; }
    const BasisSet& bases() const { return bases_; }

    bool operator==(const SymplecticMatroid& o) const = default;

private:
    struct Unchecked {};
    SymplecticMatroid(int n, BasisSet bases, Unchecked) : n_(n), bases_(std::move(bases)) {}
    friend std::vector<SymplecticMatroid> enumerate_symplectic(int n);

    int n_;
    BasisSet bases_;
};

/// Exhaustive over all subsets of J_n^2; n <= 3, throws TooLarge otherwise.
/// Ordered by basis count, then lexicographically.
std::vector<SymplecticMatroid> enumerate_symplectic(int n);

enum class Group { S2n, BCn };

struct Orbit {
    BasisSet representative;  // lexicographically smallest member
    std::vector<BasisSet> members;
};

/// Partition of `sets` into orbits of the group action; `sets` must be closed
/// under it. Orbits are sorted by representative.
std::vector<Orbit> orbits(const std::vector<BasisSet>& sets, Group group, int n);

/// Lexicographically smallest image of `b` under the group.
BasisSet canonical_form(const BasisSet& b, Group group, int n);

/// Multiset of bag sizes, weakly decreasing. Weight is the sum.
struct PartitionType {
    std::vector<int> parts;

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const PartitionType&) const = default;
};

PartitionType partition_type(const SymmetricMatroid& m);

/// Consecutive blocks {1..k_1}, {k_1+1..k_1+k_2}, ...; loops at the tail.
/// Throws InvalidInput unless the type has >= 2 parts, 1 <= k_i < 2n and
/// weight <= 2n.
SymmetricMatroid canonical_matroid(const PartitionType& type, int n);

/// Every valid partition type for [2n].
std::vector<PartitionType> enumerate_partition_types(int n);

struct Lifting {
    SymmetricMatroid matroid;
    int degree;
};

/// Every symmetric matroid M with symplectic_projection(M) = B(N). Those are
/// exactly the valid sets B(N) u D for D a set of diagonal pairs. Sorted by
/// degree (descending), then by bags. Throws NoLifting when there is none.
std::vector<Lifting> liftings(const BasisSet& n_bases, int n);
inline std::vector<Lifting> liftings(const SymplecticMatroid& m) { return liftings(m.bases(), m.n()); }

enum class Trichotomy {
    None,        // not representable
    OnlyDeg0,    // normal liftings {N}
    OnlyDegGe2,  // normal liftings {max(N)}
    Both,        // normal liftings {N, max(N)}
};

struct RepresentabilityReport {
    bool representable = false;
    Trichotomy trichotomy = Trichotomy::None;
    /// max(N): the lifting of largest degree among those of degree != 1.
    std::optional<SymmetricMatroid> witness_lifting;
    std::vector<SymmetricMatroid> normal_liftings;
    /// Set when more than one lifting attains the maximal degree != 1.
    bool multiple_maximal = false;
    /// Every lifting found, including degree-1 ones.
    std::vector<Lifting> liftings;
};

/// Representable over C iff some lifting has degree 0 or >= 2.
RepresentabilityReport is_representable(const SymplecticMatroid& m);

/// Empirical look at symmetric matroids of degree 1 with nonempty projection.
struct DegreeOneSurvey {
    int matroids = 0;               // degree-1 symmetric matroids, nonempty projection
    int distinct_projections = 0;
    int symplectic_projections = 0;  // projections passing the maximality property
};

DegreeOneSurvey degree_one_survey(int n);

}  // namespace sympmat
