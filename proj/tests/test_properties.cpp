#include <catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "sympmat/strata.hpp"
#include "sympmat/witness.hpp"

using namespace sympmat;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    return Rational(num(rng), den(rng));
}

// Random 2 x 2n matrix; some columns are zero or copies of others so that
// loops and parallel classes show up.
RationalMatrix random_matrix(int n, std::mt19937& rng) {
    RationalMatrix m(2, 2 * n);
    for (int c = 0; c < 2 * n; ++c) {
        switch (rng() % 6) {
            case 0:
                break;
            case 1:
                if (c > 0) {
                    const int src = static_cast<int>(rng() % c);
                    const Rational k = random_rational(rng);
                    m(0, c) = k * m(0, src);
                    m(1, c) = k * m(1, src);
                    break;
                }
                [[fallthrough]];
            default:
                m(0, c) = random_rational(rng);
                m(1, c) = random_rational(rng);
        }
    }
    return m;
}

std::vector<Rational> random_torus(int n, std::mt19937& rng) {
    std::vector<Rational> mu;
    while (static_cast<int>(mu.size()) < n) {
        Rational x = random_rational(rng);
        if (x != 0) mu.push_back(x);
    }
    return mu;
}

}  // namespace

TEST_CASE("Grassmann-Plucker relations on random exact witnesses") {
    std::mt19937 rng(12345);
    int tested = 0;
    while (tested < 1200) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto m = random_matrix(n, rng);
        std::optional<PluckerWitness> w;
        if (error_kind([&] { w.emplace(n, m); })) continue;
        ++tested;
        CHECK(satisfies_plucker_relations(*w));
        auto mat = matroid_of_witness(*w);
        BasisSet nonzero;
        for (Position i = 1; i <= 2 * n; ++i)
            for (Position j = i + 1; j <= 2 * n; ++j)
                if (w->coordinate(i, j) != 0) nonzero.push_back({i, j});
        CHECK(mat.bases() == nonzero);
    }
    CHECK(tested >= 1000);
}

TEST_CASE("a broken Plucker vector is caught") {
    RationalMatrix m(2, 4);
    m(0, 0) = m(0, 1) = m(0, 2) = m(0, 3) = 1;
    m(1, 1) = 1;
    m(1, 2) = 2;
    m(1, 3) = 3;
    PluckerWitness good(2, m);
    auto pl = good.plucker();
    pl[plucker_index(1, 2, 2)] = 5;
    CHECK_FALSE(satisfies_plucker_relations(PluckerWitness(2, m, pl)));
}

TEST_CASE("torus action preserves the pattern and s on random witnesses") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::optional<PluckerWitness> w;
        if (error_kind([&] { w.emplace(n, random_matrix(n, rng)); })) continue;
        auto mu = random_torus(n, rng);
        auto t = apply_torus(*w, mu);
        CHECK(matroid_of_witness(t) == matroid_of_witness(*w));
        CHECK(symplectic_sum(t) == symplectic_sum(*w));
        GroundSet e{n};
        auto weight = [&](Position p) { return e.is_starred(p) ? 1 / mu[e.star(p) - 1] : mu[p - 1]; };
        for (Position i = 1; i <= 2 * n; ++i)
            for (Position j = i + 1; j <= 2 * n; ++j)
                CHECK(t.coordinate(i, j) == weight(i) * weight(j) * w->coordinate(i, j));
    }
}

TEST_CASE("torus action keeps certified witnesses certified") {
    std::mt19937 rng(5);
    for (int n = 2; n <= 3; ++n)
        for (const auto& m : enumerate_symplectic(n)) {
            std::optional<PluckerWitness> w;
            if (error_kind([&] { w.emplace(build_symplectic_witness(m)); })) continue;
            auto mu = random_torus(n, rng);
            auto t = apply_torus(*w, mu);
            CHECK(verify_certificate(t, m).ok);
            CHECK(symplectic_sum(t) == 0);
        }
}

TEST_CASE("BC_n symmetry of representability and strata data") {
    for (int n = 2; n <= 3; ++n) {
        auto group = enumerate_bcn(n);
        for (const auto& m : enumerate_symplectic(n)) {
            RepresentabilityReport r;
            const bool lifts = !error_kind([&] { r = is_representable(m); });
            for (const auto& tau : group) {
                BasisSet img;
                for (const auto& p : m.bases()) img.push_back(apply_signed_perm(tau, p));
                SymplecticMatroid im(n, normalize(img));
                RepresentabilityReport ri;
                const bool lifts_i = !error_kind([&] { ri = is_representable(im); });
                REQUIRE(lifts == lifts_i);
                if (!lifts) continue;
                CHECK(r.representable == ri.representable);
                CHECK(r.trichotomy == ri.trichotomy);
                if (!r.representable) continue;
                auto d = cell_dims(m), di = cell_dims(im);
                CHECK(d.total == di.total);
                CHECK(d.fiber == di.fiber);
                CHECK(stabilizer(d.max_lifting, Torus::Symplectic).dim ==
                      stabilizer(di.max_lifting, Torus::Symplectic).dim);
            }
        }
    }
}

TEST_CASE("projection after lifting is the identity") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& m : enumerate_symplectic(n)) {
            std::vector<Lifting> ls;
            if (error_kind([&] { ls = liftings(m); })) continue;
            for (const auto& l : ls) CHECK(symplectic_projection(l.matroid) == m.bases());
        }
}
