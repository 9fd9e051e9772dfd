#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "test_instances.hpp"
#include "twocoh/group_core.hpp"
#include "twocoh/prng.hpp"

using namespace twocoh;
using test_instances::conjugation_module;
using test_instances::trivial_action_module;
using test_instances::z2_into_z4_module;

namespace {

Arrow random_arrow(const CrossedModule& xm, SplitMix64& rng) {
    return Arrow{rng.range(0, xm.G().order() - 1), rng.range(0, xm.H().order() - 1)};
}

NervePoint random_nerve_point(const CrossedModule& xm, long level, SplitMix64& rng) {
    NervePoint x;
    for (long j = 0; j < level; ++j) x.gs.push_back(rng.range(0, xm.G().order() - 1));
    x.h = rng.range(0, xm.H().order() - 1);
    return x;
}

/// Element orders as a sorted multiset; an isomorphism invariant used to
/// distinguish small groups.
std::vector<long> order_profile(const FiniteGroup& g) {
    std::vector<long> out;
    for (long a = 0; a < g.order(); ++a) {
        long x = a, n = 1;
        while (x != FiniteGroup::id) {
            x = g.mul(x, a);
            ++n;
        }
        out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("group table validation finds the first broken axiom") {
    CHECK(!FiniteGroup::validate_table({{0, 1}, {1, 0}}).has_value());

    auto bad_identity = FiniteGroup::validate_table({{1, 1}, {1, 0}});
    REQUIRE(bad_identity.has_value());
    CHECK(bad_identity->axiom == "identity");

    auto bad_closure = FiniteGroup::validate_table({{0, 1}, {1, 7}});
    REQUIRE(bad_closure.has_value());
    CHECK(bad_closure->axiom == "closure");

    // Identity and closure hold but (1*1)*2 != 1*(1*2).
    auto bad_assoc = FiniteGroup::validate_table({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    REQUIRE(bad_assoc.has_value());
    CHECK(bad_assoc->axiom == "associativity");

    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 1}, {1, 0}}), Error);
}

TEST_CASE("standard constructors produce valid groups of the right order") {
    for (long n = 1; n <= 6; ++n) {
        FiniteGroup c = FiniteGroup::cyclic(n);
        CHECK(c.order() == n);
        CHECK(!FiniteGroup::validate_table(c.table()).has_value());
        for (long a = 0; a < n; ++a) CHECK(c.mul(a, c.inv(a)) == FiniteGroup::id);
    }
    FiniteGroup d4 = FiniteGroup::dihedral(4);
    CHECK(d4.order() == 8);
    CHECK(!FiniteGroup::validate_table(d4.table()).has_value());

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    FiniteGroup s4 = FiniteGroup::symmetric(4);
    CHECK(s4.order() == 24);
    CHECK(!FiniteGroup::validate_table(s4.table()).has_value());

    // S3 and the dihedral group of the triangle are the same group.
    CHECK(order_profile(s3) == order_profile(FiniteGroup::dihedral(3)));
    CHECK(order_profile(s3) == std::vector<long>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("permutation closure agrees with an independent right-to-left closure") {
    // Independent oracle: close {(01), (012)} under "apply right factor
    // first" composition and just count elements.
    std::vector<std::vector<long>> gens{{1, 0, 2}, {1, 2, 0}};
    auto compose_rl = [](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> c(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
        return c;
    };
    std::map<std::vector<long>, long> seen;
    std::vector<std::vector<long>> queue{{0, 1, 2}};
    seen[queue[0]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& g : gens) {
            auto next = compose_rl(queue[head], g);
            if (seen.emplace(next, static_cast<long>(queue.size())).second)
                queue.push_back(std::move(next));
        }
    CHECK(queue.size() == 6);
    CHECK(FiniteGroup::symmetric(3).order() == 6);

    CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0, 1}}), Error);
}

TEST_CASE("crossed module validation accepts conjugation and flags broken axioms") {
    CHECK(conjugation_module(FiniteGroup::symmetric(3)).validate().empty());
    CHECK(conjugation_module(FiniteGroup::cyclic(4)).validate().empty());
    CHECK(z2_into_z4_module().validate().empty());
    CHECK(test_instances::zn_to_trivial_module(3).validate().empty());
    CHECK(test_instances::group_only_module(FiniteGroup::symmetric(3)).validate().empty());

    // Identity map with the trivial action on a nonabelian group: exactly the
    // Peiffer condition fails, and the reported witness really violates it.
    // (Equivariance fails too: with i = id both conditions say conjugation
    // is trivial.)
    CrossedModule bad = trivial_action_module(FiniteGroup::symmetric(3));
    auto violations = bad.validate();
    REQUIRE(violations.size() == 2);
    CHECK(violations[0].axiom == "equivariance");
    CHECK(violations[1].axiom == "peiffer");
    REQUIRE(violations[1].witness.size() == 2);
    const long a = violations[1].witness[0], b = violations[1].witness[1];
    const FiniteGroup& g = bad.G();
    CHECK(bad.act(a, bad.i(b)) != g.mul(g.mul(g.inv(b), a), b));

    // The constant-to-identity i is a homomorphism (and the whole module is
    // valid for abelian G); swapping the values breaks i_hom first.
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    CrossedModule const_i(z2, z2, {0, 0}, {{0, 0}, {1, 1}});
    CHECK(const_i.validate().empty());
    CrossedModule swapped_i(z2, z2, {1, 0}, {{0, 0}, {1, 1}});
    auto v2 = swapped_i.validate();
    REQUIRE(!v2.empty());
    CHECK(v2[0].axiom == "i_hom");
}

TEST_CASE("vertical product: group laws, inverse, closed-form multiprod") {
    CrossedModule xm = conjugation_module(FiniteGroup::symmetric(3));
    const Arrow e{FiniteGroup::id, FiniteGroup::id};
    SplitMix64 rng(2024);
    for (int round = 0; round < 200; ++round) {
        Arrow a = random_arrow(xm, rng), b = random_arrow(xm, rng), c = random_arrow(xm, rng);
        CHECK(vmul(xm, vmul(xm, a, b), c) == vmul(xm, a, vmul(xm, b, c)));
        CHECK(vmul(xm, a, e) == a);
        CHECK(vmul(xm, e, a) == a);
        CHECK(vmul(xm, a, vinv(xm, a)) == e);
        CHECK(vmul(xm, vinv(xm, a), a) == e);
    }
    // multiprod must agree with a left fold of vmul for every length.
    for (int round = 0; round < 100; ++round) {
        const long len = rng.range(0, 4);
        std::vector<Arrow> rows;
        for (long j = 0; j < len; ++j) rows.push_back(random_arrow(xm, rng));
        Arrow fold = e;
        for (const Arrow& a : rows) fold = vmul(xm, fold, a);
        CHECK(multiprod(xm, rows) == fold);
    }
}

TEST_CASE("horizontal structure: source, target, units, inversion, interchange") {
    CrossedModule xm = conjugation_module(FiniteGroup::symmetric(3));
    const long nh = xm.H().order();
    SplitMix64 rng(7);
    for (int round = 0; round < 200; ++round) {
        Arrow a = random_arrow(xm, rng);
        CHECK(arrow_source(arrow_unit(a.h)) == a.h);
        CHECK(arrow_target(xm, arrow_unit(a.h)) == a.h);
        CHECK(hcomp(xm, a, arrow_unit(arrow_source(a))) == a);
        CHECK(hcomp(xm, arrow_unit(arrow_target(xm, a)), a) == a);
        CHECK(hcomp(xm, a, arrow_iota(xm, a)) == arrow_unit(arrow_target(xm, a)));
        CHECK(hcomp(xm, arrow_iota(xm, a), a) == arrow_unit(arrow_source(a)));
        // Source and target intertwine the two products.
        Arrow b = random_arrow(xm, rng);
        CHECK(arrow_source(vmul(xm, a, b)) == xm.H().mul(arrow_source(a), arrow_source(b)));
        CHECK(arrow_target(xm, vmul(xm, a, b)) ==
              xm.H().mul(arrow_target(xm, a), arrow_target(xm, b)));
    }
    // Interchange: (a1 a2) . (b1 b2) = (a1 . b1) (a2 . b2) whenever the
    // horizontal composites exist.
    for (int round = 0; round < 400; ++round) {
        Arrow b1 = random_arrow(xm, rng), b2 = random_arrow(xm, rng);
        Arrow a1{rng.range(0, xm.G().order() - 1), arrow_target(xm, b1)};
        Arrow a2{rng.range(0, xm.G().order() - 1), arrow_target(xm, b2)};
        CHECK(hcomp(xm, vmul(xm, a1, a2), vmul(xm, b1, b2)) ==
              vmul(xm, hcomp(xm, a1, b1), hcomp(xm, a2, b2)));
    }
    CHECK_THROWS_AS(hcomp(xm, Arrow{1, 0}, Arrow{1, 0}), ComposabilityError);
    CHECK(nh == 6);
}

TEST_CASE("nerve points decompose into composable arrows and back") {
    CrossedModule xm = conjugation_module(FiniteGroup::symmetric(3));
    SplitMix64 rng(55);
    for (int round = 0; round < 150; ++round) {
        const long level = rng.range(1, 4);
        NervePoint x = random_nerve_point(xm, level, rng);
        std::vector<Arrow> arrows;
        for (long j = 0; j < level; ++j) arrows.push_back(nerve_arrow(xm, x, j));
        // Consecutive arrows compose, the last one is the plain pair.
        for (long j = 0; j + 1 < level; ++j)
            CHECK(arrow_source(arrows[j]) == arrow_target(xm, arrows[j + 1]));
        CHECK(arrows.back() == (Arrow{x.gs.back(), x.h}));
        CHECK(nerve_from_arrows(xm, arrows) == x);
        // The final target is the target of the leading arrow.
        CHECK(final_target(xm, x) == arrow_target(xm, arrows.front()));
    }
    CHECK_THROWS_AS(nerve_from_arrows(xm, {Arrow{1, 0}, Arrow{1, 0}}), ComposabilityError);
}

TEST_CASE("nerve faces agree with dropping / composing arrows in the chain") {
    CrossedModule xm = conjugation_module(FiniteGroup::symmetric(3));
    SplitMix64 rng(99);
    for (int round = 0; round < 150; ++round) {
        const long level = rng.range(2, 4);
        NervePoint x = random_nerve_point(xm, level, rng);
        std::vector<Arrow> arrows;
        for (long j = 0; j < level; ++j) arrows.push_back(nerve_arrow(xm, x, j));
        for (long k = 0; k <= level; ++k) {
            std::vector<Arrow> expected;
            if (k == 0) {
                expected.assign(arrows.begin() + 1, arrows.end());
            } else if (k == level) {
                expected.assign(arrows.begin(), arrows.end() - 1);
            } else {
                expected = arrows;
                expected[static_cast<std::size_t>(k - 1)] =
                    hcomp(xm, arrows[static_cast<std::size_t>(k - 1)],
                          arrows[static_cast<std::size_t>(k)]);
                expected.erase(expected.begin() + k);
            }
            CHECK(face_p(xm, k, x) == nerve_from_arrows(xm, expected));
        }
    }
    // Level 1 faces: face 0 forgets g keeping the source, face 1 moves to the
    // target.
    for (long g = 0; g < xm.G().order(); ++g)
        for (long h = 0; h < xm.H().order(); ++h) {
            NervePoint x{{g}, h};
            CHECK(face_p(xm, 0, x) == (NervePoint{{}, h}));
            CHECK(face_p(xm, 1, x) == (NervePoint{{}, arrow_target(xm, Arrow{g, h})}));
        }
}

TEST_CASE("simplicial identities for nerve faces and plain group faces") {
    CrossedModule xm = conjugation_module(FiniteGroup::cyclic(2));
    // Exhaustive at levels 2 and 3 on the smallest nontrivial module.
    for (long level = 2; level <= 3; ++level) {
        GridDomain dom(xm, level, 1, 0);
        for (std::size_t idx = 0; idx < dom.size(); ++idx) {
            NervePoint x = dom.decode(idx).rows[0];
            for (long j = 0; j < level; ++j)
                for (long k = j + 1; k <= level; ++k)
                    CHECK(face_p(xm, j, face_p(xm, k, x)) ==
                          face_p(xm, k - 1, face_p(xm, j, x)));
        }
    }
    CrossedModule s3 = conjugation_module(FiniteGroup::symmetric(3));
    SplitMix64 rng(3);
    for (int round = 0; round < 100; ++round) {
        NervePoint x = random_nerve_point(s3, 3, rng);
        for (long j = 0; j < 3; ++j)
            for (long k = j + 1; k <= 3; ++k)
                CHECK(face_p(s3, j, face_p(s3, k, x)) == face_p(s3, k - 1, face_p(s3, j, x)));
    }
    // Plain tuple faces, natural order: pinned example and identities.
    FiniteGroup z6 = FiniteGroup::cyclic(6);
    CHECK(group_face(z6, 0, {1, 2, 3}) == std::vector<long>{2, 3});
    CHECK(group_face(z6, 1, {1, 2, 3}) == std::vector<long>{3, 3});
    CHECK(group_face(z6, 2, {1, 2, 3}) == std::vector<long>{1, 5});
    CHECK(group_face(z6, 3, {1, 2, 3}) == std::vector<long>{1, 2});
    for (long a = 0; a < 6; ++a)
        for (long b = 0; b < 6; ++b)
            for (long c = 0; c < 6; ++c) {
                std::vector<long> t{a, b, c};
                for (long j = 0; j < 3; ++j)
                    for (long k = j + 1; k <= 3; ++k)
                        CHECK(group_face(z6, j, group_face(z6, k, t)) ==
                              group_face(z6, k - 1, group_face(z6, j, t)));
            }
}

TEST_CASE("final target is a homomorphism for the slotwise vertical product") {
    CrossedModule xm = conjugation_module(FiniteGroup::symmetric(3));
    SplitMix64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const long level = rng.range(1, 3);
        NervePoint x = random_nerve_point(xm, level, rng);
        NervePoint y = random_nerve_point(xm, level, rng);
        std::vector<Arrow> product;
        for (long j = 0; j < level; ++j)
            product.push_back(vmul(xm, nerve_arrow(xm, x, j), nerve_arrow(xm, y, j)));
        NervePoint xy = nerve_from_arrows(xm, product);
        CHECK(final_target(xm, xy) == xm.H().mul(final_target(xm, x), final_target(xm, y)));
    }
}

TEST_CASE("grid domain codec: size, round trips, pinned digit order") {
    CrossedModule xm = test_instances::z2_into_z4_module();  // |G| = 2, |H| = 4
    GridDomain dom(xm, 1, 1, 1);
    CHECK(dom.size() == 2 * 2 * 4);  // |G|^{pq+r} |H|^q
    for (std::size_t i = 0; i < dom.size(); ++i) CHECK(dom.encode(dom.decode(i)) == i);
    // Least-significant-first: g_11, then h_1, then f_1.
    GridPoint pt{{NervePoint{{1}, 2}}, {1}};
    CHECK(dom.encode(pt) == 1 + 2 * 2 + 1 * 8);
    CHECK(dom.decode(1 + 2 * 2 + 1 * 8) == pt);

    CrossedModule s3 = conjugation_module(FiniteGroup::symmetric(3));
    GridDomain big(s3, 2, 2, 1);
    CHECK(big.size() == 6u * 6 * 6 * 6 * 6 * 6 * 6);  // 6^{pq+r} 6^q
    SplitMix64 rng(123);
    for (int round = 0; round < 50; ++round) {
        std::size_t i = rng.below(big.size());
        CHECK(big.encode(big.decode(i)) == i);
    }
    CHECK_THROWS_AS(dom.decode(dom.size()), IndexError);
    CHECK_THROWS_AS(dom.encode(GridPoint{{}, {}}), ShapeError);
}

TEST_CASE("componentwise vertical product of nerve points") {
    CrossedModule xm = conjugation_module(FiniteGroup::symmetric(3));
    SplitMix64 rng(321);
    for (long level = 0; level <= 3; ++level) {
        for (int round = 0; round < 30; ++round) {
            NervePoint x = random_nerve_point(xm, level, rng);
            NervePoint y = random_nerve_point(xm, level, rng);
            NervePoint xy = nerve_vmul(xm, x, y);
            CHECK(xy.h == xm.H().mul(x.h, y.h));
            // Slotwise product of the arrow decompositions.
            for (long j = 0; j < level; ++j)
                CHECK(nerve_arrow(xm, xy, j) ==
                      vmul(xm, nerve_arrow(xm, x, j), nerve_arrow(xm, y, j)));
            // Unit row: all entries the identity arrow over the identity base.
            NervePoint unit{std::vector<long>(static_cast<std::size_t>(level), FiniteGroup::id),
                            FiniteGroup::id};
            CHECK(nerve_vmul(xm, x, unit) == x);
            CHECK(nerve_vmul(xm, unit, x) == x);
        }
    }
    CHECK_THROWS_AS(nerve_vmul(xm, NervePoint{{0}, 0}, NervePoint{{}, 0}), ShapeError);
}
