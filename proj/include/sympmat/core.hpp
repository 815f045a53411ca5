#pragma once

// Ground set E_n = [n] u [n*] of the hyperoctahedral group BC_n, stored by
// position: label i sits at position i and i* at position 2n - i + 1.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sympmat {

/// Position of a label in [2n] (1-based).
using Position = int;

struct GroundSet {
    int n = 0;

    int size() const { return 2 * n; }
    Position star(Position p) const { return 2 * n + 1 - p; }
    bool is_starred(Position p) const { return p > n; }
    bool contains(Position p) const { return p >= 1 && p <= 2 * n; }

    /// Signed display form: i -> +i, i* -> -i.
    int to_signed(Position p) const;
    /// Inverse of to_signed; throws InvalidInput outside [-n, -1] u [1, n].
    Position from_signed(int label) const;
    /// "3" or "3*".
    std::string name(Position p) const;
};

/// Unordered pair of distinct positions, stored with lo < hi.
struct Pair {
    Position lo = 0;
    Position hi = 0;

    auto operator<=>(const Pair&) const = default;
    bool contains(Position p) const { return p == lo || p == hi; }
};

/// Throws InvalidInput when a == b.
Pair make_pair(Position a, Position b);

/// {i, i*}
bool is_diagonal(const Pair& p, const GroundSet& e);

/// Sorted, duplicate-free list of pairs.
using BasisSet = std::vector<Pair>;

/// Sorts and removes duplicates.
BasisSet normalize(BasisSet b);

bool is_admissible_set(std::span<const Position> s, const GroundSet& e);
bool is_admissible_pair(const Pair& p, const GroundSet& e);

/// J_n^2, sorted. Size 2n(n-1).
BasisSet admissible_pairs(int n);

/// Total order on E_n whose largest n labels form an admissible set and whose
/// smallest n labels are their stars in reverse.
class AdmissibleOrder {
public:
    /// `listing` runs from the largest label to the smallest. Throws
    /// InvalidInput when the listing is not admissible.
    AdmissibleOrder(int n, std::vector<Position> listing);

    int n() const { return n_; }
    const std::vector<Position>& listing() const { return listing_; }
    /// 0 for the smallest label, 2n - 1 for the largest.
    int rank(Position p) const { return rank_[p]; }
    bool less(Position a, Position b) const { return rank_[a] < rank_[b]; }

    AdmissibleOrder reversed() const;

    bool operator==(const AdmissibleOrder& o) const { return listing_ == o.listing_; }

private:
    int n_;
    std::vector<Position> listing_;
    std::vector<int> rank_;
};

bool is_admissible_listing(int n, std::span<const Position> listing);

/// All 2^n n! admissible orders, sorted lexicographically by listing.
std::vector<AdmissibleOrder> enumerate_admissible_orders(int n);

/// The order 1 < 2 < ... < n < n* < ... < 1*.
AdmissibleOrder standard_order(int n);

/// Gale comparison: sort both pairs under `ord`, compare componentwise with <=.
bool gale_leq(const Pair& a, const Pair& b, const AdmissibleOrder& ord);

/// Element of B that is >= every element of B under the Gale order of `ord`,
/// or nullptr if B has no unique maximal element.
const Pair* gale_maximum(std::span<const Pair> b, const AdmissibleOrder& ord);

/// Permutation of [2n]; `images[p - 1]` is the image of position p.
class SignedPermutation {
public:
    /// Throws InvalidInput unless `images` is a bijection of [2n].
    SignedPermutation(int n, std::vector<Position> images);

    static SignedPermutation identity(int n);

    int n() const { return n_; }
    Position operator()(Position p) const { return images_[p - 1]; }
    const std::vector<Position>& images() const { return images_; }

    /// tau(i*) = tau(i)* for every label, i.e. membership in BC_n.
    bool is_signed() const;

    SignedPermutation compose(const SignedPermutation& inner) const;

private:
    int n_;
    std::vector<Position> images_;
};

/// Throws NotInGroup when tau is not in BC_n.
Pair apply_signed_perm(const SignedPermutation& tau, const Pair& p);

/// Image of a pair under any permutation of [2n] (S_2n action).
Pair apply_perm(const SignedPermutation& tau, const Pair& p);
BasisSet apply_perm(const SignedPermutation& tau, const BasisSet& b);

/// BC_n, 2^n n! elements, sorted by image vector.
std::vector<SignedPermutation> enumerate_bcn(int n);

/// S_2n, (2n)! elements, sorted by image vector.
std::vector<SignedPermutation> enumerate_s2n(int n);

}  // namespace sympmat
