#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "irred/typelab.hpp"
#include "oracles.hpp"

using namespace irred;

namespace {
ClassOrdering z3() { return canonical_ordering(make_group({3})); }
ClassOrdering v4() { return canonical_ordering(make_group({2, 2})); }
} // namespace

TEST_CASE("class sums and principality in Z/3") {
    ClassOrdering ord = z3();
    CHECK(class_sum(ord, {3, 0, 0}) == GroupElement{{0}});
    CHECK(class_sum(ord, {1, 1, 0}) == GroupElement{{0}});
    CHECK(class_sum(ord, {1, 0, 0}) == GroupElement{{1}});
    CHECK(is_principal(ord, {0, 0, 1}));
    CHECK(is_principal(ord, {3, 0, 0}));
    CHECK(!is_principal(ord, {2, 0, 0}));
}

TEST_CASE("subtype order") {
    CHECK(is_subtype({1, 0, 0}, {3, 0, 0}));
    CHECK(is_subtype({0, 0, 0}, {3, 0, 0}));
    CHECK(is_subtype({0, 0, 0}, {0, 0, 0}));
    CHECK(!is_subtype({1, 1, 0}, {3, 0, 0}));
}

TEST_CASE("irreducible types in Z/3") {
    ClassOrdering ord = z3();
    CHECK(is_irreducible_type(ord, {1, 1, 0}));
    CHECK(is_irreducible_type(ord, {3, 0, 0}));
    CHECK(!is_irreducible_type(ord, {1, 1, 1})); // contains the principal (0,0,1)
    CHECK(!is_irreducible_type(ord, {0, 0, 0}));
    CHECK(!is_irreducible_type(ord, {2, 0, 0})); // not even principal
}

TEST_CASE("davenport constants of the named groups") {
    DavenportResult triv = davenport(make_group({}));
    CHECK(triv.D == 1);
    REQUIRE(triv.witness.size() == 1);
    CHECK(triv.witness[0] == identity_element(make_group({})));

    CHECK(davenport(make_group({3})).D == 3);
    CHECK(davenport(make_group({2, 2})).D == 3);
}

TEST_CASE("davenport against the literature closed forms") {
    for (long long n = 2; n <= 8; ++n)
        CHECK(davenport(make_group({n})).D == n);
    // rank two: D = d1 + d2 - 1
    CHECK(davenport(make_group({2, 4})).D == 5);
    CHECK(davenport(make_group({2, 2, 2})).D == 4); // elementary rank three
    CHECK(davenport(make_group({3, 3})).D == 5);
    CHECK(davenport(make_group({2, 6})).D == 7);
}

TEST_CASE("davenport witnesses are minimal zero-sum sequences") {
    for (long long n = 2; n <= 12; ++n) {
        for (const auto& inv : abelian_groups_of_order(n)) {
            FiniteAbelianGroup g = make_group(inv);
            DavenportResult r = davenport(g);
            REQUIRE(static_cast<long long>(r.witness.size()) == r.D);
            GroupElement total = identity_element(g);
            for (const auto& e : r.witness) total = add(g, total, e);
            CHECK(total == identity_element(g));
            // no proper nonempty subsequence sums to zero: brute force over masks
            REQUIRE(r.D <= 20);
            for (unsigned mask = 1; mask + 1 < (1u << r.D); ++mask) {
                GroupElement s = identity_element(g);
                for (int i = 0; i < r.D; ++i)
                    if (mask & (1u << i)) s = add(g, s, r.witness[i]);
                CHECK(s != identity_element(g));
            }
            // the witness type is irreducible under any ordering
            ClassOrdering ord = canonical_ordering(g);
            TypeVec t(n, 0);
            for (const auto& e : r.witness) ++t[ord.position_of(e) - 1];
            CHECK(is_irreducible_type(ord, t));
        }
    }
}

TEST_CASE("irreducible type enumeration matches the brute-force oracle") {
    // Z/3 expected set, frozen from the oracle
    ClassOrdering ord3 = z3();
    TypeSet s3 = enumerate_irreducible_types(ord3);
    std::vector<TypeVec> expect3 = {{0, 0, 1}, {0, 3, 0}, {1, 1, 0}, {3, 0, 0}};
    CHECK(s3.types == expect3);
    auto brute3 = oracle::enumerate_irreducible_brute(ord3, 3);
    CHECK(std::set<TypeVec>(s3.types.begin(), s3.types.end()) == brute3);

    // trivial group
    TypeSet s1 = enumerate_irreducible_types(canonical_ordering(make_group({})));
    CHECK(s1.types == std::vector<TypeVec>{{1}});

    // Klein group: identity singleton, doubled singletons, and the triple
    ClassOrdering ord4 = v4();
    TypeSet s4 = enumerate_irreducible_types(ord4);
    std::vector<TypeVec> expect4 = {{0, 0, 0, 1}, {0, 0, 2, 0}, {0, 2, 0, 0},
                                    {1, 1, 1, 0}, {2, 0, 0, 0}};
    CHECK(s4.types == expect4);
    CHECK(std::set<TypeVec>(s4.types.begin(), s4.types.end()) ==
          oracle::enumerate_irreducible_brute(ord4, 3));

    // oracle agreement across every abelian group of order <= 10
    for (long long n = 2; n <= 10; ++n) {
        for (const auto& inv : abelian_groups_of_order(n)) {
            ClassOrdering ord = canonical_ordering(make_group(inv));
            TypeSet got = enumerate_irreducible_types(ord);
            long long dd = davenport(make_group(inv)).D;
            CHECK(std::set<TypeVec>(got.types.begin(), got.types.end()) ==
                  oracle::enumerate_irreducible_brute(ord, dd));
        }
    }
}

TEST_CASE("maximal types") {
    TypeSet m3 = maximal_types(z3());
    CHECK(m3.types == std::vector<TypeVec>{{0, 3, 0}, {3, 0, 0}});
    TypeSet m1 = maximal_types(canonical_ordering(make_group({})));
    CHECK(m1.types == std::vector<TypeVec>{{1}});
    TypeSet m4 = maximal_types(v4());
    CHECK(m4.types == std::vector<TypeVec>{{1, 1, 1, 0}});
}

TEST_CASE("extend_to_irreducible follows the one-increment construction") {
    ClassOrdering ord = z3();
    CHECK(extend_to_irreducible(ord, {1, 0, 0}) == TypeVec{1, 1, 0});
    CHECK(extend_to_irreducible(ord, {1, 1, 0}) == TypeVec{1, 1, 0});
    CHECK(extend_to_irreducible(ord, {2, 0, 0}) == TypeVec{3, 0, 0});
    CHECK_THROWS_AS(extend_to_irreducible(ord, {1, 0, 1}), HasPrincipalSubtype);
    // every weakly coprime subtype of a Klein-group type extends to an irreducible
    ClassOrdering ord4 = v4();
    for (TypeVec tp : {TypeVec{1, 0, 0, 0}, TypeVec{0, 1, 0, 0}, TypeVec{1, 1, 0, 0}}) {
        TypeVec ext = extend_to_irreducible(ord4, tp);
        CHECK(is_irreducible_type(ord4, ext));
        CHECK(is_subtype(tp, ext));
    }
}

TEST_CASE("types maximal with respect to a subtype") {
    ClassOrdering ord = z3();
    MaximalWrtResult r = types_maximal_wrt(ord, {1, 0, 0});
    CHECK(r.types.types == std::vector<TypeVec>{{3, 0, 0}});
    CHECK(r.L == 2);

    // tau' = 0 collapses to the maximal types with L = D
    MaximalWrtResult r0 = types_maximal_wrt(ord, {0, 0, 0});
    CHECK(r0.types.types == maximal_types(ord).types);
    CHECK(r0.L == 3);

    // Klein group: only the length-3 triple survives
    MaximalWrtResult rk = types_maximal_wrt(v4(), {1, 0, 0, 0});
    CHECK(rk.types.types == std::vector<TypeVec>{{1, 1, 1, 0}});
    CHECK(rk.L == 2);

    CHECK_THROWS_AS(types_maximal_wrt(ord, {3, 0, 0}), HasPrincipalSubtype);
}

TEST_CASE("every irreducible type is bounded by D, attained somewhere") {
    for (long long n = 1; n <= 12; ++n) {
        for (const auto& inv : abelian_groups_of_order(n)) {
            FiniteAbelianGroup g = make_group(inv);
            ClassOrdering ord = canonical_ordering(g);
            long long dd = davenport(g).D;
            TypeSet s = enumerate_irreducible_types(ord);
            long long best = 0;
            for (const TypeVec& t : s.types) {
                CHECK(type_length(t) <= dd);
                best = std::max(best, type_length(t));
            }
            CHECK(best == dd);
        }
    }
}

TEST_CASE("types_maximal_wrt(0) equals maximal_types exhaustively") {
    for (long long n = 1; n <= 8; ++n) {
        for (const auto& inv : abelian_groups_of_order(n)) {
            ClassOrdering ord = canonical_ordering(make_group(inv));
            MaximalWrtResult r = types_maximal_wrt(ord, TypeVec(n, 0));
            CHECK(r.types.types == maximal_types(ord).types);
            CHECK(r.L == davenport(make_group(inv)).D);
        }
    }
}

TEST_CASE("ordering permutations leave the invariants alone") {
    for (const auto& inv : {std::vector<long long>{6}, std::vector<long long>{2, 4}}) {
        FiniteAbelianGroup g = make_group(inv);
        long long n = g.order();
        ClassOrdering base = canonical_ordering(g);
        std::vector<long long> perm(n);
        for (long long i = 0; i < n; ++i) perm[i] = (i + 3) % n + 1;
        ClassOrdering shuffled = permuted_ordering(g, perm);

        TypeSet a = enumerate_irreducible_types(base);
        TypeSet b = enumerate_irreducible_types(shuffled);
        std::multiset<long long> la, lb;
        for (const auto& t : a.types) la.insert(type_length(t));
        for (const auto& t : b.types) lb.insert(type_length(t));
        CHECK(la == lb);
    }
}
