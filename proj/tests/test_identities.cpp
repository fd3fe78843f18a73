#include <catch2/catch_amalgamated.hpp>

#include "hankel_lab/identities.hpp"

using namespace hankel_lab;

namespace {

IdentityParams params(long long n, long long r = 0) {
    IdentityParams p;
    p.n = n;
    p.r = r;
    return p;
}

void expect_pass(const CheckResult& c) {
    INFO(c.note << ": lhs=" << c.lhs << " rhs=" << c.rhs);
    CHECK(c.pass);
}

}  // namespace

TEST_CASE("kernel window determinants agree with series route") {
    expect_pass(verify_identity("un", params(3)));
    expect_pass(verify_identity("vn", params(3)));
}

TEST_CASE("shifted-entry determinant family agrees across columns") {
    IdentityParams p = params(3);
    p.u = 3;
    expect_pass(verify_identity("err", p));
    p.u = rat(1, 2);
    expect_pass(verify_identity("sdet", p));
    p.u = 0;
    CHECK_THROWS_AS(verify_identity("sdet", p), std::invalid_argument);
    expect_pass(verify_identity("rdet", params(3)));
}

TEST_CASE("determinant-preserving transforms hold on the sample series") {
    for (const Rational& c : {Rational(2), Rational(-1)}) {
        IdentityParams p = params(3);
        p.c = c;
        expect_pass(verify_identity("tsame", p));
        expect_pass(verify_identity("tsame1", p));
        expect_pass(verify_identity("hn1a", p));
    }
    IdentityParams bad = params(3);
    bad.c = 1;
    CHECK_THROWS_AS(verify_identity("hn1a", bad), std::invalid_argument);
    IdentityParams tiny = params(5);
    tiny.series = build_series("g", 3);  // needs order 2(n-1)+1 = 9
    CHECK_THROWS_AS(verify_identity("tsame", tiny), std::invalid_argument);
}

TEST_CASE("cube-root series determinants give the alternating counts") {
    expect_pass(verify_identity("asm", params(3)));
    expect_pass(verify_identity("asm_remark", params(3)));
    expect_pass(verify_identity("asm1", params(3)));
}

TEST_CASE("parameterized binomial determinant matches its product form") {
    expect_pass(verify_identity("gen_det", params(3, 0)));
    expect_pass(verify_identity("gen_det", params(3, 1)));
    CHECK_THROWS_AS(verify_identity("gen_det", params(3, -1)), std::invalid_argument);
}

TEST_CASE("trivariate slices expand the binomial grid") {
    expect_pass(verify_identity("gfzzz", params(3, 2)));
    expect_pass(verify_identity("e_r", params(3, 0)));
    expect_pass(verify_identity("e_r", params(3, 1)));
}

TEST_CASE("constant-term identities hold at small sizes") {
    expect_pass(verify_ct_identity("t2ab", params(6)));
    expect_pass(verify_ct_identity("trexpand", params(3, 2)));
    expect_pass(verify_ct_identity("gf_tr0", params(3, 2)));
    expect_pass(verify_ct_identity("s9", params(3, 2)));
    CHECK_THROWS_AS(verify_ct_identity("trexpand", params(3, 0)), std::invalid_argument);
}

TEST_CASE("path matrix factorization and trinomial determinants") {
    expect_pass(verify_path_identity("matrix_id", params(3, 2)));
    expect_pass(verify_path_identity("unt", params(3)));
    CHECK_THROWS_AS(verify_path_identity("matrix_id", params(3, 0)), std::invalid_argument);
}

TEST_CASE("shifted trinomial determinants equal the tree windows") {
    expect_pass(verify_path_identity("e98_e99", params(3, 2)));  // every shift
    IdentityParams pinned = params(3, 2);
    pinned.s = 1;
    expect_pass(verify_path_identity("e98_e99", pinned));
    expect_pass(verify_path_identity("thm93", params(3, 3)));
}

TEST_CASE("three-phase path counts reproduce tree coefficients") {
    expect_pass(verify_path_identity("thm62", params(2)));
    expect_pass(verify_path_identity("thm75", params(2)));
    expect_pass(verify_path_identity("thm83", params(2, 3)));
    expect_pass(verify_path_identity("lemma85", params(2, 2)));
}

TEST_CASE("unknown tags are rejected by every entry point") {
    CHECK_THROWS_AS(verify_identity("nope", params(2)), std::invalid_argument);
    CHECK_THROWS_AS(verify_ct_identity("nope", params(2)), std::invalid_argument);
    CHECK_THROWS_AS(verify_path_identity("nope", params(2)), std::invalid_argument);
    CHECK_THROWS_AS(verify_series_identities("nope", 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity("un", params(0)), std::invalid_argument);
}

TEST_CASE("merge keeps the first failure") {
    CheckResult r = CheckResult::ok();
    r.merge(CheckResult::fail("1", "2", "first"));
    r.merge(CheckResult::fail("3", "4", "second"));
    r.merge(CheckResult::ok());
    REQUIRE_FALSE(r.pass);
    CHECK(r.lhs == "1");
    CHECK(r.note == "first");
    CheckResult fine = CheckResult::ok();
    fine.merge(CheckResult::ok("also fine"));
    CHECK(fine.pass);
}
