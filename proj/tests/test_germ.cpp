#include <doctest.h>

#include "germlab/germ.hpp"

using namespace germlab;

namespace {

MapGerm monogerm(const std::vector<std::string>& vars, const std::vector<std::string>& comps,
                 std::vector<std::string> target = {}) {
    Branch b;
    b.vars = vars;
    for (const auto& c : comps)
        b.components.push_back(parse_polynomial(c, vars));
    return MapGerm(static_cast<int>(vars.size()), static_cast<int>(comps.size()), {b},
                   std::move(target));
}

} // namespace

TEST_CASE("germ validation") {
    CHECK_THROWS(monogerm({"x"}, {"x + 1"})); // does not vanish at 0
    Branch b1{{"x"}, {parse_polynomial("x", {"x"})}};
    Branch b2{{"x"}, {parse_polynomial("x", {"x"})}};
    CHECK_THROWS(MapGerm(1, 1, {b1, b2})); // shared variable names
}

TEST_CASE("critical locus of the Whitney cusp map") {
    MapGerm g = monogerm({"x", "y"}, {"x", "y^3 + x y"});
    auto crit = critical_locus(g);
    REQUIRE(crit.size() == 1);
    Ideal b = groebner_basis(crit[0], MonomialOrder::grevlex());
    REQUIRE(b.gens().size() == 1);
    CHECK(contains(b, parse_polynomial("3y^2 + x", {"x", "y"})));
}

TEST_CASE("critical locus is the whole source for p > n") {
    MapGerm g = monogerm({"x", "y"}, {"x", "y^2", "y^3"});
    auto crit = critical_locus(g);
    REQUIRE(crit.size() == 1);
    CHECK(crit[0].is_zero_ideal());
}

TEST_CASE("critical locus of the identity is empty") {
    MapGerm g = monogerm({"x"}, {"x"});
    auto crit = critical_locus(g);
    Ideal b = groebner_basis(crit[0], MonomialOrder::grevlex());
    REQUIRE(b.gens().size() == 1);
    CHECK(b.gens()[0].is_constant());
}

TEST_CASE("K-finiteness per the spec fixtures") {
    CHECK(is_K_finite(monogerm({"x", "y"}, {"x", "y^2", "y^3"})));
    CHECK(is_K_finite(monogerm({"x", "y"}, {"x", "y^3 + x y"})));
    CHECK(!is_K_finite(monogerm({"x", "y"}, {"x", "x y"}))); // Sigma = {x=0} maps to 0
}

TEST_CASE("discriminant of the Whitney cusp") {
    MapGerm g = monogerm({"x", "y"}, {"x", "y^3 + x y"});
    LocusReport rep = discriminant(g);
    CHECK(rep.K_finite);
    CHECK(!rep.dim.empty);
    CHECK(rep.dim.dim == 1);
    REQUIRE(rep.dim_delta_expected.has_value());
    CHECK(*rep.dim_delta_expected);
    Ideal b = groebner_basis(rep.ideal, MonomialOrder::grevlex());
    std::vector<std::string> XY{"X", "Y"};
    CHECK(contains(b, parse_polynomial("4X^3 + 27Y^2", XY)));
    // the parametrization (X, Y) = (-3t^2, -2t^3) sweeps the discriminant
    std::vector<std::string> XYt{"X", "Y", "t"};
    for (const auto& gen : rep.ideal.gens()) {
        Polynomial s = gen.in_ring(XYt).substitute(
            {{"X", parse_polynomial("-3t^2", XYt)}, {"Y", parse_polynomial("-2t^3", XYt)}});
        CHECK(s.is_zero());
    }
}

TEST_CASE("image of the cuspidal edge is the cuspidal surface") {
    MapGerm g = monogerm({"x", "y"}, {"x", "y^2", "y^3"});
    LocusReport rep = discriminant(g); // p > n: image = discriminant
    CHECK(rep.K_finite);
    CHECK(rep.dim.dim == 2);
    REQUIRE(rep.dim_delta_expected.has_value());
    CHECK(*rep.dim_delta_expected);
    Ideal b = groebner_basis(rep.ideal, MonomialOrder::grevlex());
    CHECK(contains(b, parse_polynomial("Z^2 - Y^3", {"X", "Y", "Z"})));
    CHECK(radical_equal(rep.ideal, Ideal({"X", "Y", "Z"},
                                         {parse_polynomial("Z^2 - Y^3", {"X", "Y", "Z"})})) ==
          RadicalCompare::Equal);
}

TEST_CASE("image of an embedded line") {
    MapGerm g = monogerm({"x"}, {"x", "0"});
    LocusReport rep = discriminant(g);
    CHECK(rep.dim.dim == 1);
    Ideal b = groebner_basis(rep.ideal, MonomialOrder::grevlex());
    CHECK(contains(b, parse_polynomial("Y", {"X", "Y"})));
}

TEST_CASE("bi-germ construction and its dictionary") {
    Polynomial g = parse_polynomial("x*y");
    MapGerm bg = bigerm_from_hypersurface(g);
    CHECK(bg.n() == 2);
    CHECK(bg.p() == 3);
    REQUIRE(bg.branches().size() == 2);
    CHECK(is_hypersurface_bigerm(bg));
    CHECK(bigerm_source_polynomial(bg) == g);
    CHECK_THROWS(bigerm_from_hypersurface(Polynomial::zero({"x", "y"})));
    CHECK_THROWS(bigerm_from_hypersurface(parse_polynomial("x + 1")));

    // intersection of the two branch images is V(g) x {0}
    MapGerm only1(bg.n(), bg.p(), {bg.branches()[0]}, bg.target_vars());
    MapGerm only2(bg.n(), bg.p(), {bg.branches()[1]}, bg.target_vars());
    Ideal both = groebner_basis(sum(image_ideal(only1), image_ideal(only2)),
                                MonomialOrder::grevlex());
    std::vector<std::string> XYZ = bg.target_vars();
    Ideal expected(XYZ, {parse_polynomial("Z", XYZ), parse_polynomial("X*Y", XYZ)});
    CHECK(radical_equal(both, expected) == RadicalCompare::Equal);
}

TEST_CASE("bi-germ stabilization translates the second branch") {
    MapGerm bg = bigerm_from_hypersurface(parse_polynomial("x*y"));
    Unfolding f = bigerm_stabilization(bg);
    REQUIRE(f.params().size() == 1);
    std::vector<std::string> ring = f.base().branches()[1].vars;
    ring.push_back(f.params()[0]);
    CHECK(f.branch_components()[1].back() == Polynomial::variable(ring, f.params()[0]));
    MapGerm back = f.slice({Rational(0)});
    CHECK(back.branches()[1].components.back().is_zero());
    CHECK_THROWS(bigerm_stabilization(monogerm({"x", "y"}, {"x", "y^2", "y^3"})));
}

TEST_CASE("instability dimension of bi-germs") {
    OriginDim d_xy = instability_dim_bigerm(bigerm_from_hypersurface(parse_polynomial("x*y")));
    CHECK(!d_xy.empty);
    CHECK(d_xy.dim == 0);
    OriginDim d_smooth =
        instability_dim_bigerm(bigerm_from_hypersurface(parse_polynomial("x")));
    CHECK(d_smooth.empty); // smooth hypersurface, stable bi-germ
    OriginDim d_xy3 = instability_dim_bigerm(
        bigerm_from_hypersurface(parse_polynomial("x*y", {"x", "y", "z"})));
    CHECK(d_xy3.dim == 1); // dummy variable adds a line of instabilities
}

TEST_CASE("unfolding validation catches bad deformations") {
    MapGerm g = monogerm({"x", "y"}, {"x", "y^2", "y^3"});
    std::vector<std::string> ring{"x", "y", "t"};
    std::vector<std::vector<Polynomial>> comps{{parse_polynomial("x", ring),
                                                parse_polynomial("y^2", ring),
                                                parse_polynomial("y^3 + t*y*(x^2 - t)", ring)}};
    Unfolding ok(g, {"t"}, comps);
    CHECK(ok.params() == std::vector<std::string>{"t"});
    std::vector<std::vector<Polynomial>> bad{{parse_polynomial("x", ring),
                                              parse_polynomial("y^2 + t + 1", ring),
                                              parse_polynomial("y^3", ring)}};
    CHECK_THROWS(Unfolding(g, {"t"}, bad));
}
