#include <doctest.h>

#include <fstream>

#include "pim/verifier.hpp"

using namespace pim;

namespace {
Json load_root() {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/curated.json");
    REQUIRE(in.good());
    return Json::parse(in);
}
}  // namespace

TEST_CASE("curated store") {
    Json root = load_root();
    CaseConfig cfg = load_case(root, "k10");
    CHECK(cfg.k == 10);
    CHECK(cfg.curated.get("triple_product").value ==
          Scalar(frac(Int(5) * pow_int(2, 51), Int(187))));
    CHECK_THROWS_AS(cfg.curated.get("nonexistent"), Error);
    CHECK_THROWS_AS(load_case(root, "k12"), Error);

    // missing provenance is refused unless explicitly allowed
    Json bad = Json::array();
    bad.push_back({{"name", "x"}, {"value", "1/2"}});
    CHECK_THROWS_AS(CuratedStore::from_json(bad, false), Error);
    CHECK_NOTHROW(CuratedStore::from_json(bad, true));
}

TEST_CASE("k10 assembly") {
    CaseConfig cfg = load_case(load_root(), "k10");
    auto [C, rep] = assemble_C(cfg);
    CHECK(C == Scalar(16384));
    CHECK(rep.pass);
    CHECK(rep.first_divergent.empty());
    CHECK(C.is_rational());

    SUBCASE("report determinism modulo timing") {
        auto [C2, rep2] = assemble_C(cfg);
        CHECK(rep.to_json(false).dump() == rep2.to_json(false).dump());
        CHECK(rep.to_markdown() == rep2.to_markdown());
    }
    SUBCASE("markdown format") {
        std::string md = rep.to_markdown();
        CHECK(md.find("PASS") != std::string::npos);
        CHECK(md.find("c_lift(A)") != std::string::npos);
        CHECK(md.find("curated") != std::string::npos);
    }
}

TEST_CASE("scale invariance and negative control, k10") {
    CaseConfig cfg = load_case(load_root(), "k10");
    CHECK(scale_invariance_suite(cfg));

    AssembleOptions h7;
    h7.h_scale = Rat(7);
    h7.check_reference = false;
    auto [C7, rep7] = assemble_C(cfg, h7);
    CHECK(C7 == Scalar(16384));

    AssembleOptions f3;
    f3.f1_scale = Rat(3);
    f3.check_reference = false;
    auto [C3, rep3] = assemble_C(cfg, f3);
    CHECK(C3 == Scalar(16384));

    AssembleOptions bad;
    bad.perturb_curated = true;
    bad.check_reference = false;
    auto [Cb, repb] = assemble_C(cfg, bad);
    CHECK(!(Cb == Scalar(16384)));
}

TEST_CASE("report records divergence on perturbed reference") {
    CaseConfig cfg = load_case(load_root(), "k10");
    cfg.reference["c_lift_A"] = "-17281";  // wrong on purpose
    auto [C, rep] = assemble_C(cfg);
    CHECK(C == Scalar(16384));
    CHECK(!rep.pass);
    CHECK(rep.first_divergent == "c_lift(A)");
}
