#include "testutil.hpp"

#include "jjalg/algfile.hpp"

#include <doctest.h>
#include <fstream>
#include <sstream>

using namespace jjtest;

namespace {

std::string fixture(const std::string& name) {
    return std::string(JJALG_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("parsing the paper tables") {
    AlgebraFile a3 = parse_algebra_file("dim 3; field Q; e1*e1=e2; e3*e3=e2");
    CHECK(a3.alg() == make_a3(Q()));

    AlgebraFile p2 = parse_algebra_file("dim 2; field Q; species prejj-left; e1*e1=e2");
    CHECK(p2.alg() == make_p2(Q()));
    CHECK(p2.species == Species::prejj_left);

    AlgebraFile z4 = parse_algebra_file("dim 4\nfield Q\n");
    CHECK(z4.alg().structure().is_zero());
    CHECK(z4.alg().dim() == 4);
}

TEST_CASE("linear combinations with rational coefficients") {
    AlgebraFile f = parse_algebra_file("dim 3; field Q; e1*e2 = 1/2e1 + e3 - 2*e2");
    Vec v = f.alg().product_of_basis(0, 1);
    CHECK(v[0] == Scalar::fraction(1, 2));
    CHECK(v[1] == Scalar::integer(-2, Q()));
    CHECK(v[2] == Scalar::one(Q()));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_algebra_file("dim 2; field Q; e1*e5 = e1"), const parse_error&);
    CHECK_THROWS_AS(parse_algebra_file("dim 2; field Q; e1*e1 = e1; e1*e1 = e2"),
                    const parse_error&);  // duplicate product line
    CHECK_THROWS_AS(parse_algebra_file("dim 2; e1*e1 = e1"), const parse_error&);
    CHECK_THROWS_AS(parse_algebra_file("dim 2; field F4; e1*e1 = e1"), const error&);
    try {
        parse_algebra_file("dim 2\nfield Q\ne1*e9 = e1");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("field entries are reduced mod p") {
    AlgebraFile f = parse_algebra_file("dim 2; field F5; e1*e1 = 7e2");
    CHECK(f.alg().product_of_basis(0, 0)[1].res() == 2);
    // denominators invert mod p
    AlgebraFile g = parse_algebra_file("dim 2; field F5; e1*e1 = 1/2e2");
    CHECK(g.alg().product_of_basis(0, 0)[1].res() == 3);
}

TEST_CASE("small characteristic needs the override") {
    CHECK_THROWS_AS(parse_algebra_file("dim 2; field F2"), const precondition_error&);
    ParseOptions allow;
    allow.allow_small_char = true;
    CHECK_NOTHROW(parse_algebra_file("dim 2; field F2", allow));
}

TEST_CASE("round trips through serialize") {
    for (const char* name :
         {"a3.alg", "a4x.alg", "p2.alg", "z3.alg", "a3_b2.alg", "a3_a2.alg", "p2_t01.alg",
          "a3_n.alg", "a3_family_ac.alg", "a3_family_b2.alg", "p2_family_t.alg",
          "p2_family_tprime.alg", "mp_jj_a3_z2.alg", "mp_p2_z1.alg"}) {
        std::ifstream in(fixture(name));
        REQUIRE(in);
        std::ostringstream ss;
        ss << in.rdbuf();
        AlgebraFile f = parse_algebra_file(ss.str());
        std::string canon = serialize(f);
        AlgebraFile g = parse_algebra_file(canon);
        CHECK(f == g);
        CHECK(serialize(g) == canon);  // canonical form is a fixed point
    }
}

TEST_CASE("fixture semantics survive the parse") {
    ParseOptions allow;
    allow.allow_small_char = true;
    AlgebraFile a4x2 = load_algebra_file(fixture("a4x_f2.alg"), allow);
    CHECK(check_structure(a4x2.alg(), StructureKind::jacobi_jordan));

    AlgebraFile b2 = load_algebra_file(fixture("a3_b2.alg"));
    CHECK(b2.has_representation);
    CHECK(is_relative_rb(JJRelRB(b2.representation(), *b2.op_t)));
    CHECK(b2.element_x == Vec::basis(Q(), 3, 0));
    CHECK(b2.map_z);

    AlgebraFile t01 = load_algebra_file(fixture("p2_t01.alg"));
    CHECK(is_relative_rb(PreJJRelRB(t01.birepresentation(), *t01.op_t)));
    CHECK(t01.map_n);
    CHECK(is_nijenhuis_operator(t01.alg(), *t01.map_n));

    AlgebraFile fam = load_algebra_file(fixture("p2_family_tprime.alg"));
    REQUIRE(fam.family);
    LinearMap t = fam.family->instantiate({Scalar::zero(Q()), Scalar::one(Q())});
    CHECK(t == make_tprime_ctx(Q(), 0, 1).t);
}

TEST_CASE("matched pair files") {
    AlgebraFile mp = load_algebra_file(fixture("mp_jj_a3_z2.alg"));
    REQUIRE(mp.algebra2);
    CHECK(is_matched_pair(JJMatchedPair{mp.alg(), *mp.algebra2, mp.rho1, mp.rho2}));

    AlgebraFile pmp = load_algebra_file(fixture("mp_p2_z1.alg"));
    REQUIRE(pmp.algebra2);
    CHECK(is_matched_pair(
        PreJJMatchedPair{pmp.alg(), *pmp.algebra2, pmp.rho1, pmp.mu1, pmp.rho2, pmp.mu2}));
}
