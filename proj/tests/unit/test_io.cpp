#include "doctest.h"
#include "qadhm/adhm/generators.hpp"
#include "qadhm/io/expr.hpp"
#include "qadhm/io/json.hpp"

using namespace qadhm;
using io::json;

namespace {

NCPoly x(int g) { return NCPoly::gen(Chart::I, g); }
NCPoly num(long v) { return NCPoly::scalar(Chart::I, QLaurent(v)); }

}  // namespace

TEST_CASE("scalar strings") {
    CHECK(io::to_json(GaussRational(mpq_class(1, 2), mpq_class(-3))) == json("1/2-3/1*i"));
    CHECK(io::to_json(GaussRational(0)) == json("0/1"));
    CHECK(io::gauss_from_json(json("1/2-3/1*i")) == GaussRational(mpq_class(1, 2), mpq_class(-3)));
    CHECK(io::gauss_from_json(json(4)) == GaussRational(4));
    CHECK_THROWS_AS(io::gauss_from_json(json("1/0")), io::SchemaError);
    CHECK_THROWS_AS(io::gauss_from_json(json(true)), io::SchemaError);
}

TEST_CASE("laurent objects") {
    QLaurent f = QLaurent::q(1) + QLaurent::q(-1);
    CHECK(io::to_json(f) == json::parse(R"({"-1":"1/1","1":"1/1"})"));
    CHECK(io::laurent_from_json(io::to_json(f)) == f);
    CHECK(io::laurent_from_json(json::parse(R"({"2":"0"})")).is_zero());
    CHECK_THROWS_AS(io::laurent_from_json(json::parse(R"({"x":"1"})")), io::SchemaError);
    CHECK_THROWS_AS(io::laurent_from_json(json::parse(R"({"1.5":"1"})")), io::SchemaError);
}

TEST_CASE("datum round trip") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto d = random_c_stable(2, 3, seed);
        json j = io::to_json(d);
        CHECK(j["kind"] == "complex");
        CHECK(io::complex_datum_from_json(j) == d);
        CHECK(io::dump(j) == io::dump(io::to_json(io::complex_datum_from_json(json::parse(io::dump(j))))));
    }
    auto rd = random_real_regular(1, 2, 9);
    json rj = io::to_json(rd);
    CHECK(rj["kind"] == "real");
    CHECK(io::complex_datum_from_json(rj) == embed_real(rd));
}

TEST_CASE("schema violations") {
    json j = io::to_json(ComplexADHMDatum::zero(1, 2));
    json missing = j;
    missing.erase("B12");
    CHECK_THROWS_AS(io::complex_datum_from_json(missing), io::SchemaError);
    json shape = j;
    shape["i1"] = json::parse(R"([["1"]])");
    CHECK_THROWS_AS(io::complex_datum_from_json(shape), io::SchemaError);
    json kind = j;
    kind["kind"] = "quaternionic";
    CHECK_THROWS_AS(io::complex_datum_from_json(kind), io::SchemaError);
    json neg = j;
    neg["c"] = 0;
    CHECK_THROWS_AS(io::complex_datum_from_json(neg), io::SchemaError);
    auto err = io::error_object("schema", "boom");
    CHECK(err["error"]["kind"] == "schema");
}

TEST_CASE("monad json") {
    auto d = random_c_stable(1, 2, 3);
    Monad m = build_monad(d);
    json j = io::to_json(m);
    CHECK(j["alpha"].contains("const"));
    Monad back = io::monad_from_json(j);
    CHECK(back.alpha.constant == m.alpha.constant);
    for (const char* v : {"x", "y", "z", "w"}) {
        CHECK(back.alpha.coeff(v) == m.alpha.coeff(v));
        CHECK(back.beta.coeff(v) == m.beta.coeff(v));
    }
}

TEST_CASE("ncpoly json") {
    NCPoly f = x(0) * x(3) + QLaurent::q(2) * (x(1) * x(2));
    json j = io::to_json(f);
    CHECK(j["chart"] == "I");
    CHECK(io::ncpoly_from_json(j) == f);
    json ij = json::parse(R"({"chart":"IJ","terms":[{"k":-1,"e":[1,0,0,1],"coef":{"0":"1/1"}}]})");
    CHECK_THROWS_AS(io::ncpoly_from_json(ij), io::SchemaError);
    json bad = json::parse(R"({"chart":"I","terms":[{"k":1,"e":[0,0,0,0],"coef":"1"}]})");
    CHECK_THROWS_AS(io::ncpoly_from_json(bad), io::SchemaError);
}

TEST_CASE("expression parser") {
    CHECK(io::parse_expr("det") == NCPoly::det(Chart::I));
    CHECK(io::parse_expr("x11*x22 - x12*x21") == NCPoly::det(Chart::I));
    CHECK(io::parse_expr("x11 x22") == x(0) * x(3));
    CHECK(io::parse_expr("x22*x11") == x(3) * x(0));
    CHECK(io::parse_expr("q^2*x12*x21") == QLaurent::q(2) * (x(1) * x(2)));
    CHECK(io::parse_expr("3q^-1 x11") == QLaurent::q(-1) * (num(3) * x(0)));
    CHECK(io::parse_expr("-(x11 + 2)^2") == -((x(0) + num(2)) * (x(0) + num(2))));
    CHECK(io::parse_expr("det^2") == NCPoly::det(Chart::I) * NCPoly::det(Chart::I));
    CHECK(io::parse_expr("0").is_zero());
    // x12 x21 is not reordered for free
    CHECK(io::parse_expr("x21*x12") != x(1) * x(2));
    CHECK_THROWS_AS(io::parse_expr("x13"), io::SchemaError);
    CHECK_THROWS_AS(io::parse_expr("x11^-1"), io::SchemaError);
    CHECK_THROWS_AS(io::parse_expr("(x11"), io::SchemaError);
    CHECK_THROWS_AS(io::parse_expr("x11 +"), io::SchemaError);
    CHECK_THROWS_AS(io::parse_expr("y11"), io::SchemaError);
}

TEST_CASE("deterministic dumps") {
    auto d = random_non_c_stable(2, 2, 11);
    CHECK(io::dump(io::to_json(classify(d))) == io::dump(io::to_json(classify(random_non_c_stable(2, 2, 11)))));
    Calculus c(PChoice::Q);
    std::string t = io::dump(io::to_json(c.table()));
    CHECK(t == io::dump(io::to_json(Calculus(PChoice::Q).table())));
    CHECK(t.find("\"dx_x\"") != std::string::npos);
}
