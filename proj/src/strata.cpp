#include "sympmat/strata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sympmat/error.hpp"
#include "sympmat/linalg.hpp"
#include "sympmat/polytope.hpp"

namespace sympmat {

namespace {

std::vector<long long> character(const Pair& p, int n, Torus torus) {
    GroundSet e{n};
    if (torus == Torus::Full) {
        std::vector<long long> x(2 * n, 0);
        x[p.lo - 1] += 1;
        x[p.hi - 1] += 1;
        return x;
    }
    std::vector<long long> x(n, 0);
    for (Position q : {p.lo, p.hi}) {
        if (e.is_starred(q))
            x[e.star(q) - 1] -= 1;
        else
            x[q - 1] += 1;
    }
    return x;
}

}  // namespace

StabilizerReport stabilizer(const BasisSet& b, int n, Torus torus) {
    if (b.empty()) throw Error(ErrorKind::Empty, "stabilizer of an empty basis set");
    const std::size_t k = torus == Torus::Full ? 2 * n : n;
    std::vector<std::vector<long long>> chars;
    for (const Pair& p : b) chars.push_back(character(p, n, torus));

    // Unknowns (u_1..u_k, lambda); one row u.chi - lambda = 0 per basis.
    RationalMatrix system(chars.size(), k + 1);
    for (std::size_t r = 0; r < chars.size(); ++r) {
        for (std::size_t c = 0; c < k; ++c) system(r, c) = chars[r][c];
        system(r, k) = -1;
    }
    const int nullity = static_cast<int>(k + 1 - rank(system));

    std::vector<std::vector<long long>> diffs;
    for (std::size_t r = 1; r < chars.size(); ++r) {
        std::vector<long long> d(k);
        for (std::size_t c = 0; c < k; ++c) d[c] = chars[r][c] - chars[0][c];
        diffs.push_back(std::move(d));
    }
    long long torsion = 1;
    for (const auto& s : smith_invariants(diffs, k)) torsion *= s.convert_to<long long>();

    return {torus, nullity, torsion};
}

CellDimensions cell_dims(const SymplecticMatroid& m) {
    const auto report = is_representable(m);
    if (!report.representable) throw Error(ErrorKind::NotRepresentable, "no lifting of degree != 1");
    const SymmetricMatroid& lift = *report.witness_lifting;
    const int w = lift.weight();
    const int len = lift.length();
    const int deg = degree(lift);

    CellDimensions d{lift};
    d.total = w + len - 4 - (deg >= 2 ? 1 : 0);
    d.fiber = affine_dim(symplectic_polytope(m));
    d.quotient = d.total - d.fiber;

    if (len == 2)
        d.formula = {DimensionCase::LengthTwo, 0, 0};
    else if (deg == 0)
        d.formula = {DimensionCase::DegreeZero, w - 1, len - 3};
    else
        d.formula = {DimensionCase::DegreeAtLeastTwo, w - deg, len + deg - 5};
    d.agrees = d.formula.total() == d.total;
    d.flagged = len == 2;
    return d;
}

SchubertVariety sp_schubert(const Pair& p, int n) {
    GroundSet e{n};
    if (!is_admissible_pair(p, e)) throw Error(ErrorKind::InvalidInput, "Schubert varieties are indexed by admissible pairs");
    const AdmissibleOrder ord = standard_order(n);
    SchubertVariety s{p, {}, 0};
    for (const Pair& q : admissible_pairs(n))
        if (!gale_leq(q, p, ord)) s.vanishing.push_back(q);
    // Positions coincide with p(.); the sum 2n + 1 only occurs for diagonals.
    const int sum = p.lo + p.hi;
    s.dim = sum < 2 * n + 1 ? sum - 3 : sum - 4;
    return s;
}

std::vector<long long> betti_via_grassmannian(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be >= 2");
    const int dim_g = 4 * n - 4;
    std::vector<long long> g(dim_g + 1, 0);
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n; ++j) ++g[i + j - 3];
    // Real degree r <= 4n - 5 is unchanged; r >= 4n - 4 reads degree r + 2.
    const int dim_sp = 4 * n - 5;
    std::vector<long long> out(dim_sp + 1, 0);
    for (int k = 0; k <= dim_sp; ++k) out[k] = 2 * k <= 4 * n - 5 ? g[k] : g[k + 1];
    return out;
}

std::vector<long long> betti_via_schubert(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be >= 2");
    std::vector<long long> out(4 * n - 4, 0);
    for (const Pair& p : admissible_pairs(n)) ++out.at(sp_schubert(p, n).dim);
    return out;
}

std::vector<long long> betti_numbers(int n) {
    auto a = betti_via_grassmannian(n);
    auto b = betti_via_schubert(n);
    if (a != b) throw std::logic_error("Betti number computations disagree");
    return a;
}

std::vector<Pair> fixed_points(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be >= 2");
    return admissible_pairs(n);
}

std::string_view to_string(HomologyClass c) {
    switch (c) {
        case HomologyClass::Point: return "[*]";
        case HomologyClass::Line: return "[P1]";
        case HomologyClass::TwoLines: return "2[P1]";
        case HomologyClass::Hyperplane: return "[H]";
        case HomologyClass::TwoHyperplanes: return "2[H]";
        case HomologyClass::Fundamental: return "[SpG]";
    }
    return "?";
}

std::array<int, 4> coefficients(HomologyClass c) {
    switch (c) {
        case HomologyClass::Point: return {1, 0, 0, 0};
        case HomologyClass::Line: return {0, 1, 0, 0};
        case HomologyClass::TwoLines: return {0, 2, 0, 0};
        case HomologyClass::Hyperplane: return {0, 0, 1, 0};
        case HomologyClass::TwoHyperplanes: return {0, 0, 2, 0};
        case HomologyClass::Fundamental: return {0, 0, 0, 1};
    }
    return {0, 0, 0, 0};
}

HomologyClass stratum_class_n2(const BasisSet& b) {
    GroundSet e{2};
    for (const Pair& p : b)
        if (!is_admissible_pair(p, e)) throw Error(ErrorKind::InvalidInput, "not an n = 2 symplectic basis set");
    switch (b.size()) {
        case 1: return HomologyClass::Point;
        case 2: {
            const Pair& x = b[0];
            const Pair& y = b[1];
            const bool shared = y.contains(x.lo) || y.contains(x.hi);
            return shared ? HomologyClass::Line : HomologyClass::TwoLines;
        }
        case 3: return HomologyClass::Hyperplane;
        case 4: return HomologyClass::Fundamental;
        default: break;
    }
    throw Error(ErrorKind::InvalidInput, "not an n = 2 symplectic basis set");
}

Classification classify(int n) {
    if (n > 3) throw Error(ErrorKind::TooLarge, "classification limited to n <= 3");
    Classification out{n, {}, {}};
    const auto all = enumerate_symplectic(n);

    std::vector<BasisSet> sets;
    for (const auto& m : all) sets.push_back(m.bases());
    std::map<BasisSet, int> orbit_of;
    std::map<BasisSet, BasisSet> rep_of;
    const auto orbs = orbits(sets, Group::BCn, n);
    for (std::size_t k = 0; k < orbs.size(); ++k)
        for (const auto& member : orbs[k].members) {
            orbit_of[member] = static_cast<int>(k);
            rep_of[member] = orbs[k].representative;
        }

    for (const auto& m : all) {
        const auto rep = is_representable(m);
        if (!rep.representable) continue;
        const SymmetricMatroid& lift = *rep.witness_lifting;
        StratumReport r{
            m,
            true,
            rep.trichotomy,
            degree(lift),
            lift.weight(),
            lift.length(),
            cell_dims(m),
            stabilizer(lift, Torus::Full),
            stabilizer(lift, Torus::Symplectic),
            std::nullopt,
            rep_of.at(m.bases()),
            orbit_of.at(m.bases()),
        };
        if (n == 2) r.homology = stratum_class_n2(m.bases());
        out.strata.push_back(std::move(r));
    }

    if (n == 2) {
        for (const auto& r : out.strata)
            out.types.push_back({r.matroid.bases(), false, r.dims.total, *r.homology});
        for (const auto& r : out.strata)
            if (r.dims.quotient > 0)
                out.types.push_back({r.matroid.bases(), true, r.dims.fiber, HomologyClass::TwoHyperplanes});
    }
    return out;
}

}  // namespace sympmat
