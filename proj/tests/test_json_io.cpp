#include <doctest.h>

#include "dcqft/json_io.hpp"
#include "dcqft/random_data.hpp"

using namespace dcqft;

namespace {

Json parse(const char* s) { return Json::parse(s); }

}  // namespace

TEST_CASE("character round trip") {
    Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        const auto h = random_character(rng);
        const auto back = character_from_json(character_to_json(h));
        CHECK(back.n == h.n);
        CHECK(back.nt == h.nt);
        CHECK(back.h0.rep() == h.h0.rep());
        CHECK(back.modes == h.modes);
    }
    const auto h = character_from_json(parse(R"({"h0":0,"ht0":0.25,"n":1,"nt":0,"modes":[{"k":2,"a_plus":1},{"k":1}]})"));
    REQUIRE(h.modes.size() == 2);
    CHECK(h.modes[0].k == 1);
    CHECK(h.modes[1].a_plus == 1.0);
}

TEST_CASE("schema rejections") {
    CHECK_THROWS_AS(character_from_json(parse(R"({"h0":0,"ht0":0,"n":1,"modes":[]})")), InputError);
    CHECK_THROWS_AS(character_from_json(parse(R"({"h0":0,"ht0":0,"n":1,"nt":0,"modes":[],"x":1})")), InputError);
    CHECK_THROWS_AS(character_from_json(parse(R"({"h0":0,"ht0":0,"n":1.5,"nt":0,"modes":[]})")), InputError);
    CHECK_THROWS_AS(character_from_json(parse(R"({"h0":"a","ht0":0,"n":1,"nt":0,"modes":[]})")), InputError);
    CHECK_THROWS_AS(datum_from_json(parse(R"({"modes":[{"k":0,"a_plus":1}]})")), InputError);
    CHECK_THROWS_AS(datum_from_json(parse(R"({"modes":[{"k":1},{"k":1}]})")), InputError);
    CHECK_THROWS_AS(datum_from_json(parse(R"({"modes":[{"k":1,"c":1}]})")), InputError);
    CHECK_THROWS_AS(datum_from_json(parse(R"([1,2])")), InputError);
    CHECK_THROWS_AS(topological_from_json(parse(R"({"k":1,"m":2,"u":[0.1],"ut":[0],"v":[1,2],"vt":[0]})")), InputError);
    CHECK_THROWS_AS(topological_from_json(parse(R"({"k":1,"m":2,"u":[0.1],"ut":[0],"v":[1.5],"vt":[0]})")), InputError);
    CHECK_THROWS_AS(spectrum_from_json(parse(R"({"m":2,"k":1,"modes":[{"lambda":0}]})")), InputError);
    CHECK_THROWS_AS(spectrum_from_json(parse(R"({"m":1,"k":2,"modes":[]})")), InputError);
    CHECK_THROWS_AS(splitting_from_json(parse(R"({"n":1,"n_tilde":1,"k":1,"m":2,"case":"odd","lifts":[[0.1]]})")),
                    InputError);
    CHECK_THROWS_AS(splitting_from_json(parse(R"({"n":2,"n_tilde":1,"k":1,"m":2,"case":"general","lifts":[[0.1]]})")),
                    InputError);
    CHECK_THROWS_AS(test_form_from_json(parse(R"({"components":[{"s":2,"k":1,"t_grid":{"t0":0,"dt":0.1},"samples_re":[0,1,0]}]})")),
                    InputError);
    CHECK_THROWS_AS(test_form_from_json(parse(R"({"components":[{"s":0,"k":1,"t_grid":{"t0":0,"dt":0},"samples_re":[0,1,0]}]})")),
                    InputError);
    CHECK_THROWS_AS(gns_script_from_json(parse(R"({"k":1,"m":2,"n":1,"n_tilde":1,"initial":[],"ops":[{"op":"Q"}]})")),
                    InputError);
    CHECK_THROWS_AS(gns_script_from_json(parse(R"({"k":1,"m":2,"n":1,"n_tilde":1,"initial":[],"ops":[{"op":"Pi","index":1}]})")),
                    InputError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("other schemas") {
    const auto x = topological_from_json(parse(R"({"k":2,"m":4,"u":[0.25],"ut":[1.5],"v":[3],"vt":[-1]})"));
    CHECK(x.grading.k == 2);
    CHECK(x.ut[0].rep() == 0.5);
    CHECK(x.vt[0] == -1);
    const auto back = topological_from_json(topological_to_json(x));
    CHECK(back.u[0].rep() == 0.25);
    CHECK(back.v == x.v);

    const auto g = gns_from_json(parse(R"([{"v":[1],"vt":[2],"re":0.5,"im":-1},{"v":[0],"vt":[0],"re":1}])"));
    CHECK(g.size() == 2);
    CHECK(g.amplitude({{1}, {2}}) == Complex(0.5, -1));
    CHECK(gns_distance(gns_from_json(gns_to_json(g)), g) == 0.0);

    const auto s = spectrum_from_json(parse(R"({"m":4,"k":2,"modes":[{"lambda":2,"alpha":1},{"lambda":1,"alpha_tilde":3}]})"));
    CHECK(s.spectrum.slot_count() == 2);
    CHECK(s.data.slots.size() == 2);

    const auto sp = splitting_from_json(parse(R"({"n":2,"n_tilde":2,"k":1,"m":2,"case":"self_dual","lifts":[[0,0.3],[-0.3,0]]})"));
    CHECK(sp.kind == SplittingCase::self_dual);
    CHECK(sp.lifts(1, 0) == -0.3);

    const auto tf = test_form_from_json(
        parse(R"({"components":[{"s":1,"k":2,"t_grid":{"t0":-1,"dt":0.5},"samples_re":[0,1,0],"samples_im":[0,2,0],"profile":"sin"}]})"));
    REQUIRE(tf.components.size() == 1);
    CHECK(tf.components[0].basis == TestFormComponent::Basis::sin);
    CHECK(tf.components[0].samples[1] == Complex(1, 2));

    const auto script = gns_script_from_json(parse(
        R"({"k":2,"m":4,"n":1,"n_tilde":1,"initial":[{"v":[1],"vt":[2],"re":1}],"ops":[{"op":"U"},{"op":"Pi","index":0},{"op":"R_tilde","u":[0.5]},{"op":"T","v":[3]}]})"));
    REQUIRE(script.ops.size() == 4);
    CHECK(script.ops[0].kind == GnsOp::Kind::duality);
    CHECK(script.ops[1].kind == GnsOp::Kind::momentum);
    CHECK(script.ops[2].kind == GnsOp::Kind::rotation_tilde);
    CHECK(script.ops[3].v == IntVector{3});
}
