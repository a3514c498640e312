#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/catalog.hpp"
#include "toric/certify.hpp"

using namespace toric;

namespace {

Fan p2() { return build_fan(2, {{1, 0}, {0, 1}, {-1, -1}}); }
Fan v1() { return build_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}); }
Fan bl1() { return build_fan(2, {{1, 0}, {0, 1}, {1, 1}, {-1, -1}}); }

}  // namespace

TEST_CASE("symmetric fans are certified") {
    for (const Fan& f : {p2(), v1()}) {
        CertificationReport rep = certify(f);
        CHECK(rep.validation.all_ok());
        CHECK(rep.combinatorics_available);
        CHECK(rep.necessary.futaki_vanishes);
        CHECK(rep.necessary.aut_reductive);
        CHECK(rep.symmetry_checked);
        CHECK(rep.symmetric.is_symmetric);
        CHECK(rep.ek_certified);
        CHECK(rep.verdict_text == "EK certificate: YES (symmetric toric Fano)");
    }
}

TEST_CASE("family fans are certified via the full pipeline") {
    for (FamilySpec spec : {FamilySpec{Family::W, 2, 0}, FamilySpec{Family::S, 1, 1},
                            FamilySpec{Family::V, 0, 1}}) {
        CertificationReport rep = certify(family_fan(spec));
        CHECK(rep.validation.all_ok());
        CHECK(rep.ek_certified);
    }
}

TEST_CASE("the one-point blow-up fails the necessary conditions") {
    CertificationReport rep = certify(bl1());
    CHECK(rep.validation.all_ok());
    CHECK(rep.combinatorics_available);
    CHECK(rep.bary.point == RatVec{Rat(-1, 12), Rat(-1, 12)});
    CHECK(rep.r_size == 4);
    CHECK(!rep.r_centrally_symmetric);
    CHECK(!rep.necessary.futaki_vanishes);
    CHECK(!rep.necessary.aut_reductive);
    CHECK(rep.symmetry_checked);
    CHECK(!rep.symmetric.is_symmetric);
    CHECK(!rep.ek_certified);
    CHECK(rep.verdict_text == "fails necessary conditions");
}

TEST_CASE("invalid fans short-circuit") {
    Fan f = build_fan(2, {{1, 0}, {0, 1}, {-1, -2}});  // irregular
    CertificationReport rep = certify(f);
    CHECK(!rep.validation.is_fano);
    CHECK(!rep.combinatorics_available);
    CHECK(!rep.ek_certified);
    CHECK(rep.verdict_text == "not a smooth toric Fano fan");
}

TEST_CASE("necessary_only skips the automorphism search") {
    CertifyOptions opts;
    opts.necessary_only = true;
    CertificationReport rep = certify(v1(), opts);
    CHECK(!rep.symmetry_checked);
    CHECK(!rep.ek_certified);
    CHECK(rep.verdict_text == "necessary conditions hold (symmetric criterion not run)");
    CHECK(certify(bl1(), opts).verdict_text == "fails necessary conditions");
}

TEST_CASE("symmetric implies the necessary conditions on a corpus") {
    std::vector<Fan> corpus = enumerate_smooth_fano_surfaces(3);
    corpus.push_back(family_fan({Family::W, 2, 0}));
    corpus.push_back(family_fan({Family::S, 1, 1}));
    for (const Fan& f : corpus) {
        CertificationReport rep = certify(f);
        if (rep.ek_certified) {
            CHECK(rep.necessary.futaki_vanishes);
            CHECK(rep.necessary.aut_reductive);
        }
        if (!rep.necessary.futaki_vanishes || !rep.necessary.aut_reductive)
            CHECK(!rep.ek_certified);
    }
}

TEST_CASE("analytic evidence attaches to a certified fan") {
    CertifyOptions opts;
    opts.analytic = true;
    CertificationReport rep = certify(v1(), opts);
    CHECK(rep.analytic_ran);
    CHECK(rep.exp_integral.bound_ok);
    CHECK(rep.exp_integral.value > 0.0);
    CHECK(rep.exp_integral.bound == 6.0);
    CHECK(rep.positivity_ok);
    CHECK(rep.positivity_min >= 0.0);
    REQUIRE(rep.alpha_evidence.size() == 3);
    for (const auto& e : rep.alpha_evidence) CHECK(e.bound_ok);
}

TEST_CASE("certification is deterministic for a fixed seed") {
    CertifyOptions opts;
    opts.analytic = true;
    opts.seed = 777;
    CertificationReport a = certify(v1(), opts);
    CertificationReport b = certify(v1(), opts);
    CHECK(a.exp_integral.value == b.exp_integral.value);
    CHECK(a.positivity_min == b.positivity_min);
    REQUIRE(a.alpha_evidence.size() == b.alpha_evidence.size());
    for (size_t i = 0; i < a.alpha_evidence.size(); ++i)
        CHECK(a.alpha_evidence[i].value == b.alpha_evidence[i].value);
}
