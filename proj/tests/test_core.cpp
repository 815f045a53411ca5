#include <catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "sympmat/core.hpp"

using namespace sympmat;

namespace {

long long expected_orders(int n) {
    long long v = 1;
    for (int k = 1; k <= n; ++k) v *= 2 * k;
    return v;
}

AdmissibleOrder order_from_signed(int n, std::initializer_list<int> largest_first) {
    GroundSet e{n};
    std::vector<Position> listing;
    for (int l : largest_first) listing.push_back(e.from_signed(l));
    return AdmissibleOrder(n, listing);
}

}  // namespace

TEST_CASE("labels and stars") {
    GroundSet e{3};
    for (Position p = 1; p <= 6; ++p) CHECK(e.star(e.star(p)) == p);
    CHECK(e.from_signed(1) == 1);
    CHECK(e.from_signed(-1) == 6);
    CHECK(e.from_signed(-3) == 4);
    CHECK(e.to_signed(5) == -2);
    CHECK(e.name(5) == "2*");
    CHECK(error_kind([&] { e.from_signed(4); }) == ErrorKind::InvalidInput);
    CHECK(error_kind([&] { e.from_signed(0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("admissible sets") {
    GroundSet e2{2}, e3{3};
    std::vector<Position> a{e2.from_signed(1), e2.from_signed(2)};
    std::vector<Position> b{e2.from_signed(1), e2.from_signed(-1)};
    std::vector<Position> c{e3.from_signed(1), e3.from_signed(2), e3.from_signed(-3)};
    CHECK(is_admissible_set(a, e2));
    CHECK_FALSE(is_admissible_set(b, e2));
    CHECK(is_admissible_set(c, e3));
}

TEST_CASE("admissible pairs count 2n(n-1)") {
    for (int n = 1; n <= 6; ++n) {
        auto pairs = admissible_pairs(n);
        CHECK(pairs.size() == static_cast<std::size_t>(2 * n * (n - 1)));
        CHECK(to_oracle(pairs) == oracle::admissible_pairs(n));
    }
}

TEST_CASE("admissible order counts") {
    for (int n = 1; n <= 5; ++n) {
        auto orders = enumerate_admissible_orders(n);
        CHECK(static_cast<long long>(orders.size()) == expected_orders(n));
        for (std::size_t k = 1; k < orders.size(); ++k) CHECK(orders[k - 1].listing() < orders[k].listing());
    }
}

TEST_CASE("admissible orders match a brute-force filter of all permutations") {
    for (int n = 1; n <= 4; ++n) {
        auto brute = oracle::admissible_orders(n);
        std::set<std::vector<int>> expected(brute.begin(), brute.end());
        std::set<std::vector<int>> got;
        for (const auto& ord : enumerate_admissible_orders(n)) {
            std::vector<int> rank(2 * n + 1);
            for (Position p = 1; p <= 2 * n; ++p) rank[p] = ord.rank(p);
            got.insert(rank);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("order listing invariants and reversal pairing") {
    for (int n = 1; n <= 5; ++n) {
        GroundSet e{n};
        auto orders = enumerate_admissible_orders(n);
        std::set<std::vector<Position>> listings;
        for (const auto& o : orders) listings.insert(o.listing());
        for (const auto& o : orders) {
            const auto& l = o.listing();
            std::vector<Position> top(l.begin(), l.begin() + n);
            CHECK(is_admissible_set(top, e));
            for (int k = 0; k < n; ++k) CHECK(l[2 * n - 1 - k] == e.star(l[k]));
            auto r = o.reversed();
            CHECK(listings.count(r.listing()) == 1);
            CHECK_FALSE(r == o);
            CHECK(r.reversed() == o);
        }
    }
}

TEST_CASE("n = 1 and n = 2 orders") {
    auto o1 = enumerate_admissible_orders(1);
    REQUIRE(o1.size() == 2);
    auto o2 = enumerate_admissible_orders(2);
    auto has = [&](const AdmissibleOrder& x) { return std::find(o2.begin(), o2.end(), x) != o2.end(); };
    CHECK(has(order_from_signed(2, {-1, -2, 2, 1})));
    CHECK(has(order_from_signed(2, {-2, 1, -1, 2})));
    CHECK(standard_order(2) == order_from_signed(2, {-1, -2, 2, 1}));
    CHECK_FALSE(is_admissible_listing(2, std::vector<Position>{4, 1, 3, 2}));
    CHECK(is_admissible_listing(2, std::vector<Position>{1, 2, 3, 4}));
    CHECK(error_kind([] { AdmissibleOrder(2, {1, 4, 2, 3}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("gale order examples") {
    const auto std2 = standard_order(2);
    auto b = signed_bases(2, {{1, 2}, {1, -2}});
    CHECK(gale_leq(b[0], b[1], std2));
    CHECK(gale_leq(b[0], b[0], std2));

    // the chain 12 < 12* < 21* < 2*1*
    auto chain = signed_bases(2, {{1, 2}, {1, -2}, {2, -1}, {-2, -1}});
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) CHECK(gale_leq(chain[k], chain[k + 1], std2));

    // 2 < 1* < 1 < 2*: the chain 21* < 21 < 1*2* < 12*
    auto ord = order_from_signed(2, {-2, 1, -1, 2});
    auto j2 = admissible_pairs(2);
    const Pair* top = gale_maximum(j2, ord);
    REQUIRE(top != nullptr);
    CHECK(*top == signed_bases(2, {{1, -2}}).front());
    CHECK(gale_leq(signed_bases(2, {{2, -1}})[0], signed_bases(2, {{2, 1}})[0], ord));
    CHECK(gale_leq(signed_bases(2, {{2, 1}})[0], signed_bases(2, {{-1, -2}})[0], ord));
    CHECK(gale_leq(signed_bases(2, {{-1, -2}})[0], signed_bases(2, {{1, -2}})[0], ord));
}

TEST_CASE("gale order is a partial order on J_n^2") {
    for (int n = 2; n <= 3; ++n) {
        auto pairs = admissible_pairs(n);
        for (const auto& ord : enumerate_admissible_orders(n)) {
            for (const auto& a : pairs) {
                CHECK(gale_leq(a, a, ord));
                for (const auto& b : pairs) {
                    if (gale_leq(a, b, ord) && gale_leq(b, a, ord)) CHECK(a == b);
                    for (const auto& c : pairs)
                        if (gale_leq(a, b, ord) && gale_leq(b, c, ord)) CHECK(gale_leq(a, c, ord));
                }
            }
        }
    }
}

TEST_CASE("gale maximum agrees with the oracle") {
    const int n = 3;
    auto orders = enumerate_admissible_orders(n);
    auto pairs = admissible_pairs(n);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        BasisSet b;
        for (const auto& p : pairs)
            if (rng() % 3 == 0) b.push_back(p);
        if (b.empty()) continue;
        for (const auto& ord : orders) {
            std::vector<int> rank(2 * n + 1);
            for (Position p = 1; p <= 2 * n; ++p) rank[p] = ord.rank(p);
            const Pair* top = gale_maximum(b, ord);
            int maxima = 0;
            Pair found{};
            for (const auto& x : b) {
                bool dom = true;
                for (const auto& y : b) dom = dom && oracle::gale_leq({y.lo, y.hi}, {x.lo, x.hi}, rank);
                if (dom) {
                    ++maxima;
                    found = x;
                }
            }
            if (maxima == 1) {
                REQUIRE(top != nullptr);
                CHECK(*top == found);
            } else {
                CHECK(top == nullptr);
            }
        }
    }
}

TEST_CASE("signed permutations") {
    const int n = 2;
    GroundSet e{n};
    auto p = signed_bases(n, {{1, -2}})[0];
    CHECK(apply_signed_perm(SignedPermutation::identity(n), p) == p);

    // 1 <-> 2, hence 1* <-> 2*
    SignedPermutation swap12(n, {e.from_signed(2), e.from_signed(1), e.from_signed(-1), e.from_signed(-2)});
    CHECK(swap12.is_signed());
    CHECK(apply_signed_perm(swap12, p) == signed_bases(n, {{2, -1}})[0]);

    // 1 <-> 1*
    SignedPermutation flip1(n, {e.from_signed(-1), e.from_signed(2), e.from_signed(-2), e.from_signed(1)});
    CHECK(apply_signed_perm(flip1, signed_bases(n, {{1, 2}})[0]) == signed_bases(n, {{-1, 2}})[0]);

    SignedPermutation bad(n, {2, 1, 3, 4});
    CHECK_FALSE(bad.is_signed());
    CHECK(error_kind([&] { apply_signed_perm(bad, p); }) == ErrorKind::NotInGroup);
}

TEST_CASE("BC_n inside S_2n") {
    for (int n = 1; n <= 4; ++n) {
        long long members = 0;
        for (const auto& tau : enumerate_s2n(n)) members += tau.is_signed();
        CHECK(members == expected_orders(n));
        CHECK(static_cast<long long>(enumerate_bcn(n).size()) == expected_orders(n));
    }
}

TEST_CASE("signed permutations act bijectively on J_n^2") {
    for (int n = 2; n <= 3; ++n) {
        auto pairs = admissible_pairs(n);
        for (const auto& tau : enumerate_bcn(n)) {
            BasisSet image;
            for (const auto& p : pairs) image.push_back(apply_signed_perm(tau, p));
            CHECK(normalize(image) == pairs);
        }
    }
}

TEST_CASE("composition") {
    auto group = enumerate_bcn(2);
    for (const auto& a : group)
        for (const auto& b : group) {
            auto c = a.compose(b);
            CHECK(c.is_signed());
            for (Position p = 1; p <= 4; ++p) CHECK(c(p) == a(b(p)));
        }
}
