#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "toric/weighted_polytope.hpp"

using namespace toric;
using tt::im;
using tt::iv;

namespace {

PolytopeSpec spec_of(const std::vector<HalfSpace>& facets, int n, std::vector<Int> labels = {}) {
    if (labels.empty()) labels.assign(facets.size(), Int(1));
    PolytopeSpec s;
    s.dim = n;
    for (std::size_t i = 0; i < facets.size(); ++i)
        s.facets.push_back({facets[i].normal, facets[i].offset, labels[i]});
    return s;
}

/// Full witness verification: the affine map carries the source vertex set
/// onto the target's and matches facets and labels through sigma.
bool witness_ok(const WeightedPolytope& a, const WeightedPolytope& b, const Isomorphism& iso) {
    std::set<RatVec> mapped, target(b.base.vertices.begin(), b.base.vertices.end());
    for (const RatVec& v : a.base.vertices) {
        RatVec image = to_rat(iso.L) * v;
        for (std::size_t j = 0; j < image.size(); ++j) image[j] += iso.c[j];
        mapped.insert(image);
    }
    if (mapped != target) return false;
    IntMat pullback = inverse_unimodular(iso.L).transposed();
    for (std::size_t i = 0; i < a.facet_count(); ++i) {
        int j = iso.sigma[i];
        if (j < 0 || a.labels[i] != b.labels[j]) return false;
        IntVec y = pullback * a.base.facets[i].normal;
        if (b.base.facets[j].normal != y) return false;
        if (b.base.facets[j].offset != a.base.facets[i].offset + dot(iso.c, y)) return false;
    }
    std::vector<int> sorted = iso.sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i)) return false;
    return true;
}

WeightedPolytope translated(const WeightedPolytope& w, const RatVec& c) {
    return transform(w, IntMat::identity(w.dim()), c);
}

IntMat random_unimodular(tt::Rng& rng, int n) {
    IntMat L = IntMat::identity(n);
    if (n == 1) return L;  // SL(1,Z) = {1}
    int shears = static_cast<int>(rng.pick(2, 5));
    for (int s = 0; s < shears; ++s) {
        int i = static_cast<int>(rng.pick(0, n - 1));
        int j = static_cast<int>(rng.pick(0, n - 2));
        if (j >= i) ++j;
        IntMat e = IntMat::identity(n);
        e(i, j) = rng.pick(-3, 3);
        L = L * e;
    }
    return L;
}

}  // namespace

TEST_CASE("validation report") {
    SECTION("Delzant triangle passes") {
        CHECK(validate(spec_of(tt::triangle_facets(), 2)).pass);
    }
    SECTION("octahedron fails simplicity only") {
        auto report = validate(spec_of(tt::octahedron_facets(), 3, std::vector<Int>(8, Int(5))));
        CHECK_FALSE(report.pass);
        for (const auto& c : report.checks)
            CHECK(c.pass == (c.name != "simple"));
    }
    SECTION("football interval passes") {
        CHECK(validate(spec_of(tt::interval_facets(), 1, {Int(2), Int(3)})).pass);
    }
    SECTION("non-positive label flagged") {
        auto report = validate(spec_of(tt::triangle_facets(), 2, {Int(1), Int(0), Int(2)}));
        CHECK_FALSE(report.pass);
        CHECK_FALSE(report.checks[0].pass);
    }
    SECTION("empty intersection flagged") {
        PolytopeSpec s;
        s.dim = 1;
        s.facets = {{iv({1}), Rat(0), 1}, {iv({-1}), Rat(1), 1}};
        auto report = validate(s);
        CHECK_FALSE(report.pass);
        bool nonempty_failed = false;
        for (const auto& c : report.checks)
            if (c.name == "nonempty" && !c.pass) nonempty_failed = true;
        CHECK(nonempty_failed);
    }
    SECTION("unbounded flagged") {
        PolytopeSpec s;
        s.dim = 2;
        s.facets = {{iv({1, 0}), Rat(0), 1}, {iv({0, 1}), Rat(0), 1}, {iv({1, 1}), Rat(-1), 1}};
        auto report = validate(s);
        CHECK_FALSE(report.pass);
        bool bounded_failed = false;
        for (const auto& c : report.checks)
            if (c.name == "bounded" && !c.pass) bounded_failed = true;
        CHECK(bounded_failed);
    }
    SECTION("make_weighted throws on invalid data") {
        CHECK_THROWS_AS(make_weighted(spec_of(tt::octahedron_facets(), 3)), input_error);
    }
}

TEST_CASE("isomorphism goldens") {
    SECTION("pure translation is recognized with L = I") {
        WeightedPolytope w = tt::weighted_triangle();
        WeightedPolytope moved = translated(w, tt::rv({5, 7}));
        auto iso = isomorphic(w, moved);
        REQUIRE(iso.has_value());
        CHECK(iso->L == IntMat::identity(2));
        CHECK(iso->c == tt::rv({5, 7}));
        CHECK(iso->sigma == std::vector<int>{0, 1, 2});
        CHECK(witness_ok(w, moved, *iso));
    }
    SECTION("1d translation") {
        WeightedPolytope a = tt::football(2, 3);
        WeightedPolytope b =
            tt::weighted(tt::interval_facets(Rat(5), Rat(6)), 1, {Int(2), Int(3)});
        auto iso = isomorphic(a, b);
        REQUIRE(iso.has_value());
        CHECK(iso->c == tt::rv({5}));
        CHECK(witness_ok(a, b, *iso));
    }
    SECTION("different label multisets never match") {
        CHECK_FALSE(isomorphic(tt::football(2, 3), tt::football(2, 2)).has_value());
    }
    SECTION("label swap needs a reflection: GL finds it, SL cannot") {
        WeightedPolytope a = tt::football(2, 3);
        WeightedPolytope b = tt::football(3, 2);
        CHECK_FALSE(isomorphic(a, b, EquivGroup::SL).has_value());
        auto iso = isomorphic(a, b, EquivGroup::GL);
        REQUIRE(iso.has_value());
        CHECK(iso->L == im({{-1}}));
        CHECK(witness_ok(a, b, *iso));
    }
    SECTION("self-isomorphism always exists") {
        for (const WeightedPolytope& w :
             {tt::cp2(), tt::football(4, 6), tt::hirzebruch(2), tt::weighted_triangle()}) {
            auto iso = isomorphic(w, w);
            REQUIRE(iso.has_value());
            CHECK(witness_ok(w, w, *iso));
        }
    }
}

TEST_CASE("isomorphism under random unimodular transforms") {
    tt::Rng rng(20240818);
    for (const WeightedPolytope& w : {tt::cp2(), tt::unit_square(), tt::weighted_triangle(),
                                      tt::hirzebruch(3), tt::football(5, 10)}) {
        for (int trial = 0; trial < 20; ++trial) {
            int n = w.dim();
            IntMat L = random_unimodular(rng, n);
            RatVec c(static_cast<std::size_t>(n));
            for (auto& x : c) x = rng.pick(-10, 10);
            WeightedPolytope image = transform(w, L, c);

            // shuffle the facet order so sigma is exercised
            PolytopeSpec s = to_spec(image);
            std::shuffle(s.facets.begin(), s.facets.end(), rng.g);
            WeightedPolytope shuffled = make_weighted(s);

            auto iso = isomorphic(w, shuffled);
            REQUIRE(iso.has_value());
            CHECK(witness_ok(w, shuffled, *iso));

            // symmetry: the inverse witness works backwards
            auto back = isomorphic(shuffled, w);
            REQUIRE(back.has_value());
            CHECK(witness_ok(shuffled, w, *back));
        }
    }
}

TEST_CASE("single label change breaks isomorphism") {
    tt::Rng rng(5);
    for (const WeightedPolytope& w :
         {tt::cp2(), tt::unit_square(), tt::weighted_triangle(), tt::hirzebruch(2)}) {
        PolytopeSpec s = to_spec(w);
        std::size_t i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(s.facets.size()) - 1));
        s.facets[i].label += 1;
        WeightedPolytope changed = make_weighted(s);
        CHECK_FALSE(isomorphic(w, changed).has_value());
        CHECK_FALSE(isomorphic(w, changed, EquivGroup::GL).has_value());
    }
}

TEST_CASE("equal coarse invariants do not force isomorphism") {
    // unit square vs 2x1 rectangle: same dim, facet count, vertex count,
    // labels, and vertex group orders, but lattice maps preserve area
    WeightedPolytope square = tt::unit_square();
    WeightedPolytope rect = tt::weighted(
        {tt::hs({1, 0}, 0), tt::hs({0, 1}, 0), tt::hs({-1, 0}, -2), tt::hs({0, -1}, -1)}, 2);
    CHECK_FALSE(isomorphic(square, rect).has_value());
    CHECK_FALSE(isomorphic(square, rect, EquivGroup::GL).has_value());
}

TEST_CASE("isomorphism is transitive on a chain") {
    tt::Rng rng(11);
    WeightedPolytope a = tt::weighted_triangle();
    WeightedPolytope b = transform(a, random_unimodular(rng, 2), tt::rv({3, -2}));
    WeightedPolytope c = transform(b, random_unimodular(rng, 2), tt::rv({-1, 9}));
    REQUIRE(isomorphic(a, b).has_value());
    REQUIRE(isomorphic(b, c).has_value());
    auto ac = isomorphic(a, c);
    REQUIRE(ac.has_value());
    CHECK(witness_ok(a, c, *ac));
}

TEST_CASE("canonical keys") {
    WeightedPolytope w = tt::weighted_triangle();
    SECTION("translation invariant") {
        CHECK(canonical_key(w) == canonical_key(translated(w, tt::rv({Rat(13), Rat(-5, 2)}))));
    }
    SECTION("labels distinguish") {
        CHECK(canonical_key(tt::football(2, 3)) != canonical_key(tt::football(2, 2)));
    }
    SECTION("a shear changes the key but not the isomorphism class") {
        IntMat shear = im({{1, 1}, {0, 1}});
        WeightedPolytope sheared = transform(w, shear, tt::rv({0, 0}));
        CHECK(isomorphic(w, sheared).has_value());
        CHECK(canonical_key(w) != canonical_key(sheared));
    }
}
