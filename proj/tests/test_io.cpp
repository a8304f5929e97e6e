#include <doctest.h>

#include "germlab/io.hpp"
#include "germlab/models.hpp"

using namespace germlab;
using json = nlohmann::json;

namespace {
const std::string kFixtures = GERMLAB_FIXTURE_DIR;
}

TEST_CASE("ideal JSON round trip") {
    Ideal i({"x", "y"}, {parse_polynomial("x^2 - 1/2 y", {"x", "y"})});
    Ideal back = io::ideal_from_json(io::ideal_to_json(i));
    CHECK(back.vars() == i.vars());
    REQUIRE(back.gens().size() == 1);
    CHECK(back.gens()[0] == i.gens()[0]);
}

TEST_CASE("germ file with unfolding loads and validates") {
    io::GermFile gf =
        io::germ_from_json(io::load_json_file(kFixtures + "/cuspidal_edge.germ.json"));
    CHECK(gf.germ.n() == 2);
    CHECK(gf.germ.p() == 3);
    REQUIRE(gf.unfolding.has_value());
    CHECK(gf.unfolding->params() == std::vector<std::string>{"t"});
    // round trip through serialization
    io::GermFile back = io::germ_from_json(io::unfolding_to_json(*gf.unfolding));
    CHECK(back.germ.branches()[0].components == gf.germ.branches()[0].components);
    REQUIRE(back.unfolding.has_value());
}

TEST_CASE("matrix and monodromy files") {
    MonodromyMatrix m =
        io::monodromy_matrix_from_json(io::load_json_file(kFixtures + "/matrix_phi6.json"));
    CHECK(m.degree == 1);
    CHECK(m.matrix.rows() == 2);
    JordanModule data = jordan_data(m.matrix);
    CHECK(data.max_block_size() == 1);
    json j = io::jordan_to_json(data);
    REQUIRE(j.size() == 2);
    CHECK(j[0].at("order") == 6);
    // integers are accepted alongside rational strings
    QMat q = io::matrix_from_json(json::parse("[[1, \"1/2\"], [0, 1]]"));
    CHECK(q.at(0, 1) == Rational(1, 2));
}

TEST_CASE("pair model fixture reproduces the suspension") {
    ICSSModel m =
        io::icss_model_from_json(io::load_json_file(kFixtures + "/model_bigerm_xy.json"));
    IcssResult res = run_icss(m);
    CHECK(res.total_betti == std::vector<int>{0, 0, 1});
    ICSSModel m2 =
        io::icss_model_from_json(io::load_json_file(kFixtures + "/model_bigerm_x2y3.json"));
    CHECK(run_icss(m2).total_betti == std::vector<int>{0, 0, 2});
    ICSSModel trivial =
        io::icss_model_from_json(io::load_json_file(kFixtures + "/model_trivial_family.json"));
    for (int b : run_icss(trivial).total_betti)
        CHECK(b == 0);
}

TEST_CASE("absolute model fixtures verify the augmented complex") {
    json tdp = io::load_json_file(kFixtures + "/model_tdp_absolute.json");
    REQUIRE(io::model_json_is_absolute(tdp));
    AbsoluteIcssModel m = io::absolute_model_from_json(tdp);
    CHECK(check_augmented_exactness(m, tdp.at("image_cohomology").get<std::vector<int>>()));

    json xy = io::load_json_file(kFixtures + "/model_bigerm_xy_absolute.json");
    AbsoluteIcssModel m2 = io::absolute_model_from_json(xy);
    CHECK(check_augmented_exactness(m2, xy.at("image_cohomology").get<std::vector<int>>()));
}

TEST_CASE("fixture models agree with the built-in generators") {
    ICSSModel file_model =
        io::icss_model_from_json(io::load_json_file(kFixtures + "/model_bigerm_xy.json"));
    ICSSModel built = bigerm_pair_model({1, 1}, true);
    CHECK(file_model.columns[0].fiber.dims == built.columns[0].fiber.dims);
    CHECK(run_icss(file_model).total_betti == run_icss(built).total_betti);
}

TEST_CASE("analyze report serialization is stable") {
    io::GermFile gf =
        io::germ_from_json(io::load_json_file(kFixtures + "/cuspidal_edge.germ.json"));
    AnalyzeOptions opts;
    opts.d = 1;
    AnalyzeReport rep = analyze(gf.germ, opts);
    json j1 = io::analyze_report_to_json(rep);
    json j2 = io::analyze_report_to_json(analyze(gf.germ, opts));
    CHECK(j1.dump() == j2.dump());
    CHECK(j1.at("windows")[0].at("theorem") == "KMA");
}
