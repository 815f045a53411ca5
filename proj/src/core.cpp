#include "sympmat/core.hpp"

#include <algorithm>
#include <numeric>

#include "sympmat/error.hpp"

namespace sympmat {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::NotAMatroid: return "NotAMatroid";
        case ErrorKind::Empty: return "Empty";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InvalidMove: return "InvalidMove";
        case ErrorKind::EmptyProjection: return "EmptyProjection";
        case ErrorKind::NoLifting: return "NoLifting";
        case ErrorKind::NotRepresentable: return "NotRepresentable";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NotInGroup: return "NotInGroup";
    }
    return "Unknown";
}

int GroundSet::to_signed(Position p) const {
    if (!contains(p)) throw Error(ErrorKind::InvalidInput, "position " + std::to_string(p) + " outside [2n]");
    return is_starred(p) ? -star(p) : p;
}

Position GroundSet::from_signed(int label) const {
    if (label == 0 || label > n || label < -n)
        throw Error(ErrorKind::InvalidInput,
                    "label " + std::to_string(label) + " outside E_" + std::to_string(n));
    return label > 0 ? label : star(-label);
}

std::string GroundSet::name(Position p) const {
    int s = to_signed(p);
    return s > 0 ? std::to_string(s) : std::to_string(-s) + "*";
}

Pair make_pair(Position a, Position b) {
    if (a == b) throw Error(ErrorKind::InvalidInput, "pair with repeated element " + std::to_string(a));
    return a < b ? Pair{a, b} : Pair{b, a};
}

bool is_diagonal(const Pair& p, const GroundSet& e) { return p.hi == e.star(p.lo); }

BasisSet normalize(BasisSet b) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

bool is_admissible_set(std::span<const Position> s, const GroundSet& e) {
    for (Position p : s)
        if (std::find(s.begin(), s.end(), e.star(p)) != s.end()) return false;
    return true;
}

bool is_admissible_pair(const Pair& p, const GroundSet& e) {
    return e.contains(p.lo) && e.contains(p.hi) && p.lo != p.hi && !is_diagonal(p, e);
}

BasisSet admissible_pairs(int n) {
    GroundSet e{n};
    BasisSet out;
    for (Position a = 1; a <= e.size(); ++a)
        for (Position b = a + 1; b <= e.size(); ++b)
            if (b != e.star(a)) out.push_back({a, b});
    return out;
}

bool is_admissible_listing(int n, std::span<const Position> listing) {
    GroundSet e{n};
    if (n < 1 || static_cast<int>(listing.size()) != e.size()) return false;
    std::vector<bool> seen(e.size() + 1, false);
    for (Position p : listing) {
        if (!e.contains(p) || seen[p]) return false;
        seen[p] = true;
    }
    if (!is_admissible_set(listing.first(n), e)) return false;
    for (int k = 0; k < n; ++k)
        if (listing[e.size() - 1 - k] != e.star(listing[k])) return false;
    return true;
}

AdmissibleOrder::AdmissibleOrder(int n, std::vector<Position> listing)
    : n_(n), listing_(std::move(listing)), rank_(2 * n + 1, -1) {
    if (!is_admissible_listing(n, listing_)) throw Error(ErrorKind::InvalidInput, "listing is not an admissible order");
    const int size = 2 * n;
    for (int k = 0; k < size; ++k) rank_[listing_[k]] = size - 1 - k;
}

AdmissibleOrder AdmissibleOrder::reversed() const {
    return AdmissibleOrder(n_, std::vector<Position>(listing_.rbegin(), listing_.rend()));
}

std::vector<AdmissibleOrder> enumerate_admissible_orders(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
    GroundSet e{n};
    std::vector<std::vector<Position>> listings;
    std::vector<Position> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Position> listing(e.size());
            for (int k = 0; k < n; ++k) {
                Position p = (mask >> k & 1u) ? e.star(perm[k]) : perm[k];
                listing[k] = p;
                listing[e.size() - 1 - k] = e.star(p);
            }
            listings.push_back(std::move(listing));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(listings.begin(), listings.end());
    std::vector<AdmissibleOrder> out;
    out.reserve(listings.size());
    for (auto& l : listings) out.emplace_back(n, std::move(l));
    return out;
}

AdmissibleOrder standard_order(int n) {
    GroundSet e{n};
    std::vector<Position> listing(e.size());
    for (int k = 0; k < e.size(); ++k) listing[k] = e.size() - k;
    return AdmissibleOrder(n, std::move(listing));
}

namespace {

std::pair<int, int> sorted_ranks(const Pair& p, const AdmissibleOrder& ord) {
    int a = ord.rank(p.lo), b = ord.rank(p.hi);
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

bool gale_leq(const Pair& a, const Pair& b, const AdmissibleOrder& ord) {
    auto [a0, a1] = sorted_ranks(a, ord);
    auto [b0, b1] = sorted_ranks(b, ord);
    return a0 <= b0 && a1 <= b1;
}

const Pair* gale_maximum(std::span<const Pair> b, const AdmissibleOrder& ord) {
    if (b.empty()) return nullptr;
    // The candidate maximizes the larger rank, then the smaller one; a maximum,
    // if it exists, must be that element.
    const Pair* best = &b[0];
    auto best_ranks = sorted_ranks(*best, ord);
    for (const Pair& p : b) {
        auto r = sorted_ranks(p, ord);
        if (r.second > best_ranks.second || (r.second == best_ranks.second && r.first > best_ranks.first)) {
            best = &p;
            best_ranks = r;
        }
    }
    for (const Pair& p : b) {
        auto r = sorted_ranks(p, ord);
        if (r.first > best_ranks.first || r.second > best_ranks.second) return nullptr;
    }
    return best;
}

SignedPermutation::SignedPermutation(int n, std::vector<Position> images) : n_(n), images_(std::move(images)) {
    GroundSet e{n};
    if (static_cast<int>(images_.size()) != e.size()) throw Error(ErrorKind::InvalidInput, "permutation has wrong length");
    std::vector<bool> seen(e.size() + 1, false);
    for (Position p : images_) {
        if (!e.contains(p) || seen[p]) throw Error(ErrorKind::InvalidInput, "images are not a bijection of [2n]");
        seen[p] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<Position> images(2 * n);
    std::iota(images.begin(), images.end(), 1);
    return SignedPermutation(n, std::move(images));
}

bool SignedPermutation::is_signed() const {
    GroundSet e{n_};
    for (Position p = 1; p <= e.size(); ++p)
        if ((*this)(e.star(p)) != e.star((*this)(p))) return false;
    return true;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& inner) const {
    std::vector<Position> images(images_.size());
    for (Position p = 1; p <= static_cast<Position>(images_.size()); ++p) images[p - 1] = (*this)(inner(p));
    return SignedPermutation(n_, std::move(images));
}

Pair apply_perm(const SignedPermutation& tau, const Pair& p) { return make_pair(tau(p.lo), tau(p.hi)); }

BasisSet apply_perm(const SignedPermutation& tau, const BasisSet& b) {
    BasisSet out;
    out.reserve(b.size());
    for (const Pair& p : b) out.push_back(apply_perm(tau, p));
    std::sort(out.begin(), out.end());
    return out;
}

Pair apply_signed_perm(const SignedPermutation& tau, const Pair& p) {
    if (!tau.is_signed()) throw Error(ErrorKind::NotInGroup, "permutation does not commute with the star involution");
    return apply_perm(tau, p);
}

std::vector<SignedPermutation> enumerate_bcn(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
    GroundSet e{n};
    std::vector<std::vector<Position>> all;
    std::vector<Position> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Position> images(e.size());
            for (int i = 1; i <= n; ++i) {
                Position img = (mask >> (i - 1) & 1u) ? e.star(perm[i - 1]) : perm[i - 1];
                images[i - 1] = img;
                images[e.star(i) - 1] = e.star(img);
            }
            all.push_back(std::move(images));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(all.begin(), all.end());
    std::vector<SignedPermutation> out;
    out.reserve(all.size());
    for (auto& images : all) out.emplace_back(n, std::move(images));
    return out;
}

std::vector<SignedPermutation> enumerate_s2n(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
    if (n > 4) throw Error(ErrorKind::TooLarge, "S_2n enumeration limited to n <= 4");
    std::vector<Position> images(2 * n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        out.emplace_back(n, images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace sympmat
