#include "doctest.h"

#include <fstream>

#include "cliffver/cech.hpp"
#include "cliffver/rng.hpp"

using namespace cliffver;

namespace {
SimplicialComplex solid_tetrahedron() {
    SimplicialComplex c;
    c.nvertices = 4;
    c.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    c.triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    c.tetrahedra = {{0, 1, 2, 3}};
    c.build_index();
    c.validate();
    return c;
}
}  // namespace

TEST_CASE("fixture cohomology against the frozen tables") {
    struct Row {
        const char* name;
        AbelianGroup h0, h1, h2;
        int b0, b1, b2;  // mod-2 betti numbers
    };
    const Row rows[] = {
        {"circle", {1, {}}, {1, {}}, {0, {}}, 1, 1, 0},
        {"sphere", {1, {}}, {0, {}}, {1, {}}, 1, 0, 1},
        {"rp2", {1, {}}, {0, {}}, {0, {2}}, 1, 1, 1},
        {"torus", {1, {}}, {2, {}}, {1, {}}, 1, 2, 1},
    };
    for (const auto& row : rows) {
        SimplicialComplex c = fixture_by_name(row.name);
        CHECK(integer_cohomology(c, 0) == row.h0);
        CHECK(integer_cohomology(c, 1) == row.h1);
        CHECK(integer_cohomology(c, 2) == row.h2);
        CHECK(mod2_betti(c, 0) == row.b0);
        CHECK(mod2_betti(c, 1) == row.b1);
        CHECK(mod2_betti(c, 2) == row.b2);
    }
}

TEST_CASE("coboundary composes to zero") {
    for (const char* name : {"sphere", "rp2", "torus"}) {
        SimplicialComplex c = fixture_by_name(name);
        IMat d1 = c.coboundary(1), d0 = c.coboundary(0);
        IMat prod = d1 * d0;
        CHECK(prod.cwiseAbs().maxCoeff() == 0);
    }
    SimplicialComplex t = solid_tetrahedron();
    CHECK(IMat(t.coboundary(2) * t.coboundary(1)).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("complex validation catches missing faces") {
    SimplicialComplex c;
    c.nvertices = 3;
    c.edges = {{0, 1}, {1, 2}};
    c.triangles = {{0, 1, 2}};
    c.build_index();
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("orientation classes on the circle") {
    SimplicialComplex c = circle_complex();
    TransitionData one = bundle_from_orientation(c, Cochain{1, 2, {1, 0, 0}});
    TransitionData two = bundle_from_orientation(c, Cochain{1, 2, {1, 1, 0}});
    Cochain e1 = orientation_cocycle(one);
    Cochain e2 = orientation_cocycle(two);
    CHECK(e1.values == std::vector<long long>{1, 0, 0});
    CHECK(!cohomology_class(c, e1).is_zero());
    CHECK(cohomology_class(c, e2).is_zero());
}

TEST_CASE("scalar phase bundles have coboundary triple products") {
    Rng rng(113);
    SimplicialComplex c = sphere_complex();
    Cochain mu{1, 4, {}};
    mu.values.resize(c.edges.size());
    for (auto& v : mu.values) v = rng.uniform_int(0, 3);
    TransitionData t = bundle_from_phases(c, mu, 4);
    Cochain lam = dd_cocycle(t, 4);
    CHECK(is_closed(c, lam));
    CHECK(cohomology_class(c, lam).is_zero());
    // and the orientation class of a scalar bundle is zero
    CHECK(cohomology_class(c, orientation_cocycle(t)).is_zero());
}

TEST_CASE("constructed generator cochain on the sphere is detected") {
    SimplicialComplex c = sphere_complex();
    Cochain gen{2, 2, {1, 0, 0, 0}};
    CHECK(is_closed(c, gen));
    CHECK(!cohomology_class(c, gen).is_zero());
    // moving it by a coboundary keeps the class
    Cochain shift{1, 2, {1, 0, 1, 0, 0, 0}};
    Cochain moved = gen;
    Cochain ds = apply_coboundary(c, shift);
    for (size_t i = 0; i < moved.values.size(); ++i) moved.values[i] += ds.values[i];
    moved = moved.reduced();
    CHECK(cohomology_class(c, moved) == cohomology_class(c, gen));
}

TEST_CASE("phase snapping rejects non-roots") {
    SimplicialComplex c = sphere_complex();
    Cochain mu{1, 3, {}};
    mu.values.assign(c.edges.size(), 0);
    mu.values[0] = 1;
    TransitionData t = bundle_from_phases(c, mu, 3);  // third roots of unity
    CHECK_THROWS_AS(dd_cocycle(t, 2), PhaseNotRootOfUnity);
    CHECK(is_closed(c, dd_cocycle(t, 3)));
    CHECK(is_closed(c, dd_cocycle(t, 6)));
}

TEST_CASE("non-scalar triple products are rejected") {
    Rng rng(127);
    SimplicialComplex c = sphere_complex();
    TransitionData t;
    t.complex = c;
    t.grading = CMat::Identity(2, 2);
    for (size_t e = 0; e < c.edges.size(); ++e) {
        // random even unitaries: triple products are generically non-scalar
        CMat h = rng.gaussian_complex_matrix(2, 2);
        CMat u = (h - h.adjoint()) / 2.0;
        CMat expu = (CMat::Identity(2, 2) - 0.5 * u).inverse() * (CMat::Identity(2, 2) + 0.5 * u);
        t.edge_unitaries.push_back(expu);
    }
    CHECK_THROWS_AS(dd_cocycle(t, 64), std::invalid_argument);
}

TEST_CASE("bockstein on the projective plane") {
    SimplicialComplex c = rp2_complex();
    auto gens = mod2_generators(c, 1);
    REQUIRE(gens.size() == 1);
    Cochain beta = bockstein(c, gens[0]);
    CHECK(is_closed(c, beta));
    CHECK(!cohomology_class(c, beta).is_zero());
    // the image is 2-torsion
    Cochain doubled = beta;
    for (auto& v : doubled.values) v *= 2;
    CHECK(cohomology_class(c, doubled).is_zero());
    // bockstein of a coboundary vanishes
    Cochain phi{0, 2, {1, 0, 1, 0, 1, 0}};
    Cochain cob = apply_coboundary(c, phi);
    CHECK(cohomology_class(c, bockstein(c, cob)).is_zero());
}

TEST_CASE("cup product pairing on the torus") {
    SimplicialComplex c = torus_complex();
    auto gens = mod2_generators(c, 1);
    REQUIRE(gens.size() == 2);
    Cochain cup = cup_product(c, gens[0], gens[1]);
    CHECK(is_closed(c, cup));
    CHECK(!cohomology_class(c, cup).is_zero());
    // the cup square of a torus generator is trivial, and cup classes commute
    Cochain cup_rev = cup_product(c, gens[1], gens[0]);
    CHECK(cohomology_class(c, cup) == cohomology_class(c, cup_rev));
}

TEST_CASE("cup product satisfies the Leibniz rule on a 3-dimensional complex") {
    Rng rng(131);
    SimplicialComplex c = solid_tetrahedron();
    for (int t = 0; t < 20; ++t) {
        Cochain x{1, 2, {}}, y{1, 2, {}};
        x.values.resize(c.edges.size());
        y.values.resize(c.edges.size());
        for (auto& v : x.values) v = rng.uniform_int(0, 1);
        for (auto& v : y.values) v = rng.uniform_int(0, 1);
        Cochain lhs = apply_coboundary(c, cup_product(c, x, y));
        Cochain r1 = cup_product(c, apply_coboundary(c, x), y);
        Cochain r2 = cup_product(c, x, apply_coboundary(c, y));
        for (size_t i = 0; i < lhs.values.size(); ++i)
            CHECK(lhs.values[i] == (r1.values[i] + r2.values[i]) % 2);
    }
}

TEST_CASE("tensor bundle produces the cup correction at cochain level") {
    SimplicialComplex c = torus_complex();
    auto gens = mod2_generators(c, 1);
    TransitionData ta = bundle_from_orientation(c, gens[0]);
    TransitionData tb = bundle_from_orientation(c, gens[1]);
    TransitionData t = graded_tensor_bundle(ta, tb);
    // orientation degrees add edgewise
    Cochain eps = orientation_cocycle(t);
    for (size_t e = 0; e < c.edges.size(); ++e)
        CHECK(eps.values[e] == (gens[0].values[e] + gens[1].values[e]) % 2);
    // triple-product signs realize the front-back cup product exactly
    Cochain lam = dd_cocycle(t, 2);
    Cochain cup = cup_product(c, gens[0], gens[1]);
    CHECK(lam.values == cup.values);
    CHECK(!cohomology_class(c, lam).is_zero());
}

TEST_CASE("tensor product formula") {
    SimplicialComplex torus = torus_complex();
    auto gens = mod2_generators(torus, 1);
    TransitionData ta = bundle_from_orientation(torus, gens[0]);
    TransitionData tb = bundle_from_orientation(torus, gens[1]);
    auto rep = verify_tensor_formula(ta, tb, 2);
    CHECK(rep.orientation_additive);
    CHECK(rep.dd_classes_equal);
    CHECK(rep.bockstein_classes_equal);
    CHECK(rep.correction_nonzero);

    SimplicialComplex rp2 = rp2_complex();
    auto rgens = mod2_generators(rp2, 1);
    TransitionData ra = bundle_from_orientation(rp2, rgens[0]);
    auto rrep = verify_tensor_formula(ra, ra, 2);
    CHECK(rrep.orientation_additive);
    CHECK(rrep.dd_classes_equal);
    CHECK(rrep.bockstein_classes_equal);
    CHECK(rrep.correction_nonzero);
}

TEST_CASE("randomized coboundary modifications preserve both classes") {
    Rng rng(137);
    SimplicialComplex c = torus_complex();
    auto gens = mod2_generators(c, 1);
    TransitionData t =
        graded_tensor_bundle(bundle_from_orientation(c, gens[0]), bundle_from_orientation(c, gens[1]));
    auto eps0 = cohomology_class(c, orientation_cocycle(t));
    auto lam0 = cohomology_class(c, dd_cocycle(t, 2));
    for (int trial = 0; trial < 10; ++trial) {
        TransitionData mod = t;
        for (auto& u : mod.edge_unitaries)
            if (rng.uniform_int(0, 1)) u = -u;
        CHECK(cohomology_class(c, orientation_cocycle(mod)) == eps0);
        CHECK(cohomology_class(c, dd_cocycle(mod, 2)) == lam0);
    }
}

TEST_CASE("fixture data files match the programmatic complexes") {
    for (const char* name : {"circle", "sphere", "rp2", "torus"}) {
        std::ifstream in(std::string(CLIFFVER_DATA_DIR) + "/fixtures/" + name + ".json");
        REQUIRE(in.good());
        nlohmann::json doc = nlohmann::json::parse(in);
        SimplicialComplex loaded = SimplicialComplex::from_json(doc.at("complex"));
        SimplicialComplex built = fixture_by_name(name);
        CHECK(loaded.nvertices == built.nvertices);
        CHECK(loaded.edges == built.edges);
        CHECK(loaded.triangles == built.triangles);
        // frozen oracle rows
        AbelianGroup h2{doc.at("oracle").at("h2").at("rank").get<int>(), {}};
        for (const auto& v : doc.at("oracle").at("h2").at("torsion"))
            h2.torsion.push_back(v.get<long long>());
        CHECK(integer_cohomology(built, 2) == h2);
    }
}

TEST_CASE("transition data serialization round-trips") {
    SimplicialComplex c = circle_complex();
    TransitionData t = bundle_from_orientation(c, Cochain{1, 2, {1, 0, 0}});
    nlohmann::json j = transition_data_to_json(t);
    TransitionData back = transition_data_from_json(j);
    for (size_t e = 0; e < t.edge_unitaries.size(); ++e)
        CHECK((t.edge_unitaries[e] - back.edge_unitaries[e]).norm() == 0.0);
    CHECK(orientation_cocycle(back).values == orientation_cocycle(t).values);
}
