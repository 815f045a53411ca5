#include "sympmat/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "sympmat/error.hpp"

namespace sympmat {

SymmetricMatroid::SymmetricMatroid(int n, std::vector<Bag> bags) : n_(n), bags_(std::move(bags)), bag_of_(2 * n + 1, -1) {
    GroundSet e{n};
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
    if (bags_.size() < 2) throw Error(ErrorKind::InvalidInput, "a rank-2 matroid needs at least two bags");
    for (auto& bag : bags_) {
        if (bag.empty()) throw Error(ErrorKind::InvalidInput, "empty bag");
        std::sort(bag.begin(), bag.end());
    }
    std::sort(bags_.begin(), bags_.end());
    for (std::size_t k = 0; k < bags_.size(); ++k)
        for (Position p : bags_[k]) {
            if (!e.contains(p)) throw Error(ErrorKind::InvalidInput, "bag element " + std::to_string(p) + " outside [2n]");
            if (bag_of_[p] != -1) throw Error(ErrorKind::InvalidInput, "bags are not disjoint at " + std::to_string(p));
            bag_of_[p] = static_cast<int>(k);
        }
}

std::vector<Position> SymmetricMatroid::loops() const {
    std::vector<Position> out;
    for (Position p = 1; p <= 2 * n_; ++p)
        if (bag_of_[p] == -1) out.push_back(p);
    return out;
}

bool SymmetricMatroid::is_basis(Position a, Position b) const {
    return a != b && bag_of_[a] != -1 && bag_of_[b] != -1 && bag_of_[a] != bag_of_[b];
}

BasisSet SymmetricMatroid::bases() const {
    BasisSet out;
    for (Position a = 1; a <= 2 * n_; ++a)
        for (Position b = a + 1; b <= 2 * n_; ++b)
            if (is_basis(a, b)) out.push_back({a, b});
    return out;
}

int SymmetricMatroid::weight() const {
    int w = 0;
    for (const auto& bag : bags_) w += static_cast<int>(bag.size());
    return w;
}

namespace {

enum class BasesCheck { Ok, Empty, NotAMatroid, OutOfRange };

BasesCheck classify_bases(const BasisSet& b, int n, std::vector<Bag>& classes) {
    if (b.empty()) return BasesCheck::Empty;
    GroundSet e{n};
    std::vector<std::vector<bool>> is_base(e.size() + 1, std::vector<bool>(e.size() + 1, false));
    std::vector<bool> support(e.size() + 1, false);
    for (const Pair& p : b) {
        if (!e.contains(p.lo) || !e.contains(p.hi) || p.lo >= p.hi) return BasesCheck::OutOfRange;
        is_base[p.lo][p.hi] = is_base[p.hi][p.lo] = true;
        support[p.lo] = support[p.hi] = true;
    }
    classes.clear();
    for (Position p = 1; p <= e.size(); ++p) {
        if (!support[p]) continue;
        auto it = std::find_if(classes.begin(), classes.end(), [&](const Bag& c) { return !is_base[p][c.front()]; });
        if (it == classes.end())
            classes.push_back({p});
        else
            it->push_back(p);
    }
    if (classes.size() < 2) return BasesCheck::NotAMatroid;
    // The relation must be an equivalence and every cross-class pair a basis.
    std::size_t cross = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t x = 0; x < classes[i].size(); ++x)
            for (std::size_t y = x + 1; y < classes[i].size(); ++y)
                if (is_base[classes[i][x]][classes[i][y]]) return BasesCheck::NotAMatroid;
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            for (Position a : classes[i])
                for (Position c : classes[j])
                    if (!is_base[a][c]) return BasesCheck::NotAMatroid;
            cross += classes[i].size() * classes[j].size();
        }
    }
    return cross == b.size() ? BasesCheck::Ok : BasesCheck::NotAMatroid;
}

}  // namespace

std::optional<SymmetricMatroid> try_from_bases(const BasisSet& b, int n) {
    std::vector<Bag> classes;
    BasisSet nb = normalize(b);
    switch (classify_bases(nb, n, classes)) {
        case BasesCheck::Ok: return SymmetricMatroid(n, std::move(classes));
        case BasesCheck::OutOfRange: throw Error(ErrorKind::InvalidInput, "pair outside [2n]");
        default: return std::nullopt;
    }
}

SymmetricMatroid from_bases(const BasisSet& b, int n) {
    std::vector<Bag> classes;
    BasisSet nb = normalize(b);
    switch (classify_bases(nb, n, classes)) {
        case BasesCheck::Ok: return SymmetricMatroid(n, std::move(classes));
        case BasesCheck::Empty: throw Error(ErrorKind::Empty, "empty basis set");
        case BasesCheck::OutOfRange: throw Error(ErrorKind::InvalidInput, "pair outside [2n]");
        case BasesCheck::NotAMatroid: break;
    }
    throw Error(ErrorKind::NotAMatroid, "non-bases do not form an equivalence with all cross pairs as bases");
}

std::vector<SymmetricMatroid> enumerate_symmetric(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
    if (n > 5) throw Error(ErrorKind::TooLarge, "symmetric matroid enumeration limited to n <= 5");
    const int size = 2 * n;
    std::vector<SymmetricMatroid> out;
    std::vector<int> assign(size, -1);
    // Restricted growth strings, with -1 marking a loop.
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == size) {
            if (blocks < 2) return;
            std::vector<Bag> bags(blocks);
            for (int p = 0; p < size; ++p)
                if (assign[p] >= 0) bags[assign[p]].push_back(p + 1);
            out.emplace_back(n, std::move(bags));
            return;
        }
        for (int b = -1; b <= blocks; ++b) {
            assign[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Position> diagonal_labels(const SymmetricMatroid& m) {
    GroundSet e = m.ground();
    std::vector<Position> out;
    for (Position i = 1; i <= m.n(); ++i)
        if (m.is_basis(i, e.star(i))) out.push_back(i);
    return out;
}

int degree(const SymmetricMatroid& m) { return static_cast<int>(diagonal_labels(m).size()); }

namespace {

struct MoveVisitor {
    const SymmetricMatroid& m;

    int bag_index(Position p, const char* what) const {
        if (!m.ground().contains(p) || m.bag_of(p) < 0)
            throw Error(ErrorKind::InvalidMove, std::string(what) + ": element " + std::to_string(p) + " is not in a bag");
        return m.bag_of(p);
    }

    SymmetricMatroid build(std::vector<Bag> bags) const {
        std::erase_if(bags, [](const Bag& b) { return b.empty(); });
        if (bags.size() < 2) throw Error(ErrorKind::InvalidMove, "result would have fewer than two bags");
        return SymmetricMatroid(m.n(), std::move(bags));
    }

    SymmetricMatroid operator()(const Erase& mv) const {
        int k = bag_index(mv.element, "erase");
        auto bags = m.bags();
        std::erase(bags[k], mv.element);
        return build(std::move(bags));
    }

    SymmetricMatroid operator()(const Merge& mv) const {
        int a = bag_index(mv.a, "merge");
        int b = bag_index(mv.b, "merge");
        if (a == b) throw Error(ErrorKind::InvalidMove, "merge: both elements lie in the same bag");
        auto bags = m.bags();
        bags[a].insert(bags[a].end(), bags[b].begin(), bags[b].end());
        bags[b].clear();
        return build(std::move(bags));
    }

    SymmetricMatroid operator()(const Split& mv) const {
        int k = bag_index(mv.element, "split");
        auto bags = m.bags();
        if (bags[k].size() < 2) throw Error(ErrorKind::InvalidMove, "split: bag has fewer than two elements");
        std::erase(bags[k], mv.element);
        bags.push_back({mv.element});
        return build(std::move(bags));
    }
};

}  // namespace

SymmetricMatroid transform(const SymmetricMatroid& m, const Move& move) { return std::visit(MoveVisitor{m}, move); }

BasisSet symplectic_projection(const SymmetricMatroid& m) {
    GroundSet e = m.ground();
    BasisSet out;
    for (const Pair& p : m.bases())
        if (!is_diagonal(p, e)) out.push_back(p);
    if (out.empty()) throw Error(ErrorKind::EmptyProjection, "every basis is a diagonal pair");
    return out;
}

bool is_symplectic_matroid(const BasisSet& b, int n, const std::vector<AdmissibleOrder>& orders) {
    if (b.empty()) return false;
    GroundSet e{n};
    for (const Pair& p : b)
        if (!is_admissible_pair(p, e)) return false;
    for (const auto& ord : orders)
        if (gale_maximum(b, ord) == nullptr) return false;
    return true;
}

bool is_symplectic_matroid(const BasisSet& b, int n) {
    if (b.empty()) return false;
    return is_symplectic_matroid(b, n, enumerate_admissible_orders(n));
}

SymplecticMatroid::SymplecticMatroid(int n, BasisSet bases) : n_(n), bases_(normalize(std::move(bases))) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
    if (!is_symplectic_matroid(bases_, n))
        throw Error(ErrorKind::InvalidInput, "basis set fails the maximality property or is not admissible");
}

std::vector<SymplecticMatroid> enumerate_symplectic(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
    if (n > 3) throw Error(ErrorKind::TooLarge, "exhaustive enumeration limited to n <= 3");
    const BasisSet all = admissible_pairs(n);
    const auto orders = enumerate_admissible_orders(n);
    std::vector<BasisSet> found;
    for (unsigned long mask = 1; mask < (1ul << all.size()); ++mask) {
        BasisSet b;
        for (std::size_t k = 0; k < all.size(); ++k)
            if (mask >> k & 1ul) b.push_back(all[k]);
        if (is_symplectic_matroid(b, n, orders)) found.push_back(std::move(b));
    }
    std::sort(found.begin(), found.end(), [](const BasisSet& x, const BasisSet& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    std::vector<SymplecticMatroid> out;
    out.reserve(found.size());
    for (auto& b : found) out.push_back(SymplecticMatroid(n, std::move(b), SymplecticMatroid::Unchecked{}));
    return out;
}

namespace {

std::vector<SignedPermutation> group_elements(Group group, int n) {
    return group == Group::BCn ? enumerate_bcn(n) : enumerate_s2n(n);
}

BasisSet canonical_form_with(const BasisSet& b, const std::vector<SignedPermutation>& elements) {
    BasisSet best = normalize(b);
    for (const auto& g : elements) best = std::min(best, apply_perm(g, b));
    return best;
}

}  // namespace

BasisSet canonical_form(const BasisSet& b, Group group, int n) {
    return canonical_form_with(b, group_elements(group, n));
}

std::vector<Orbit> orbits(const std::vector<BasisSet>& sets, Group group, int n) {
    const auto elements = group_elements(group, n);
    std::map<BasisSet, std::vector<BasisSet>> by_rep;
    for (const auto& b : sets) by_rep[canonical_form_with(b, elements)].push_back(normalize(b));
    std::vector<Orbit> out;
    for (auto& [rep, members] : by_rep) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back({rep, std::move(members)});
    }
    return out;
}

int PartitionType::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

PartitionType partition_type(const SymmetricMatroid& m) {
    PartitionType t;
    for (const auto& bag : m.bags()) t.parts.push_back(static_cast<int>(bag.size()));
    std::sort(t.parts.rbegin(), t.parts.rend());
    return t;
}

SymmetricMatroid canonical_matroid(const PartitionType& type, int n) {
    if (type.length() < 2) throw Error(ErrorKind::InvalidInput, "partition type needs at least two parts");
    for (int k : type.parts)
        if (k < 1 || k >= 2 * n) throw Error(ErrorKind::InvalidInput, "part sizes must lie in [1, 2n)");
    if (type.weight() > 2 * n) throw Error(ErrorKind::InvalidInput, "partition weight exceeds 2n");
    std::vector<int> parts = type.parts;
    std::sort(parts.rbegin(), parts.rend());
    std::vector<Bag> bags;
    Position next = 1;
    for (int k : parts) {
        Bag bag(k);
        std::iota(bag.begin(), bag.end(), next);
        next += k;
        bags.push_back(std::move(bag));
    }
    return SymmetricMatroid(n, std::move(bags));
}

std::vector<PartitionType> enumerate_partition_types(int n) {
    std::vector<PartitionType> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (parts.size() >= 2) out.push_back({parts});
        for (int k = std::min(max_part, remaining); k >= 1; --k) {
            parts.push_back(k);
            self(self, remaining - k, k);
            parts.pop_back();
        }
    };
    rec(rec, 2 * n, 2 * n - 1);
    std::sort(out.begin(), out.end(), [](const PartitionType& a, const PartitionType& b) { return a.parts < b.parts; });
    return out;
}

std::vector<Lifting> liftings(const BasisSet& n_bases, int n) {
    GroundSet e{n};
    const BasisSet base = normalize(n_bases);
    if (base.empty()) throw Error(ErrorKind::Empty, "empty basis set");
    for (const Pair& p : base)
        if (!is_admissible_pair(p, e)) throw Error(ErrorKind::InvalidInput, "non-admissible pair in a symplectic basis set");
    std::vector<Lifting> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        BasisSet b = base;
        int d = 0;
        for (Position i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1u) {
                b.push_back({i, e.star(i)});
                ++d;
            }
        if (auto m = try_from_bases(b, n)) out.push_back({std::move(*m), d});
    }
    if (out.empty()) throw Error(ErrorKind::NoLifting, "no set of diagonal pairs completes B(N) to a symmetric matroid");
    std::sort(out.begin(), out.end(), [](const Lifting& a, const Lifting& b) {
        return a.degree != b.degree ? a.degree > b.degree : a.matroid < b.matroid;
    });
    return out;
}

RepresentabilityReport is_representable(const SymplecticMatroid& m) {
    RepresentabilityReport r;
    try {
        r.liftings = liftings(m);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::NoLifting) throw;
        return r;
    }
    const Lifting* deg0 = nullptr;
    const Lifting* top = nullptr;
    int top_count = 0;
    for (const auto& l : r.liftings) {
        if (l.degree == 1) continue;
        if (l.degree == 0) deg0 = &l;
        if (top == nullptr || l.degree > top->degree) {
            top = &l;
            top_count = 1;
        } else if (l.degree == top->degree) {
            ++top_count;
        }
    }
    if (top == nullptr) return r;

    r.representable = true;
    r.witness_lifting = top->matroid;
    r.multiple_maximal = top_count > 1;
    const bool has_high = top->degree >= 2;
    if (deg0 != nullptr && has_high) {
        r.trichotomy = Trichotomy::Both;
        r.normal_liftings = {deg0->matroid, top->matroid};
    } else if (has_high) {
        r.trichotomy = Trichotomy::OnlyDegGe2;
        r.normal_liftings = {top->matroid};
    } else {
        r.trichotomy = Trichotomy::OnlyDeg0;
        r.normal_liftings = {deg0->matroid};
    }
    return r;
}

DegreeOneSurvey degree_one_survey(int n) {
    const auto orders = enumerate_admissible_orders(n);
    DegreeOneSurvey s;
    std::set<BasisSet> seen;
    for (const auto& m : enumerate_symmetric(n)) {
        if (degree(m) != 1) continue;
        BasisSet proj;
        try {
            proj = symplectic_projection(m);
        } catch (const Error&) {
            continue;
        }
        ++s.matroids;
        if (seen.insert(proj).second) {
            ++s.distinct_projections;
            if (is_symplectic_matroid(proj, n, orders)) ++s.symplectic_projections;
        }
    }
    return s;
}

}  // namespace sympmat
