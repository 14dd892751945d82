#include <catch2/catch_amalgamated.hpp>

#include <dqn/dqn.hpp>

#include "oracles.hpp"

using namespace dqn;

namespace {

Element gen(int n, int i, int j) { return Element::generator(n, i, j); }

}  // namespace

TEST_CASE("expression parsing normalizes products") {
    const int n = 2;
    Algebra alg(n);
    SECTION("out-of-order factors are rewritten") {
        CHECK(parse_element("d[2,2]*d[1,1]", alg) == multiply(gen(n, 2, 2), gen(n, 1, 1), alg));
    }
    SECTION("the unit") { CHECK(parse_element("1", alg) == Element::unit(n)); }
    SECTION("two spellings of the same element") {
        CHECK(parse_element("(q-1)*d[1,2]*d[2,1] + d[1,1]*d[2,2]", alg) ==
              parse_element("d[2,2]*d[1,1]", alg));
    }
    SECTION("powers, division, unary minus, whitespace") {
        Element e = parse_element(" d[1,2]^2 * d[2,1] / q - -1 ", alg);
        Element expect = multiply(multiply(gen(n, 1, 2), gen(n, 1, 2), alg), gen(n, 2, 1), alg)
                             .scaled(Scalar::q(alg.field()).inverse());
        expect += Element::unit(n);
        CHECK(e == expect);
    }
    SECTION("negative exponents only on scalars") {
        CHECK(parse_element("q^-2", alg) ==
              Element::unit(n, Scalar::q(alg.field()).pow(-2)));
        CHECK_THROWS_AS(parse_element("d[1,1]^-1", alg), parse_error);
    }
}

TEST_CASE("parse errors carry positions") {
    Algebra alg(2);
    SECTION("syntax error") {
        try {
            parse_element("d[1,1] + * d[2,2]", alg);
            FAIL("expected a parse error");
        } catch (const parse_error& e) {
            CHECK(e.position == 9);
        }
    }
    SECTION("index out of range") {
        CHECK_THROWS_AS(parse_element("d[3,1]", alg), index_out_of_range);
    }
    SECTION("division by a non-scalar") {
        CHECK_THROWS_AS(parse_element("1 / d[1,1]", alg), parse_error);
    }
    SECTION("trailing garbage") { CHECK_THROWS_AS(parse_element("d[1,1] d", alg), parse_error); }
}

TEST_CASE("print-parse round trip on random elements") {
    Algebra alg(2);
    OrderSpec order = OrderSpec::paper_lex();
    oracles::Rng rng(71);
    for (int k = 0; k < 200; ++k) {
        Element e = rng.element(alg, 3);
        std::string s = to_string(e, order, alg.n());
        CHECK(parse_element(s, alg) == e);
        CHECK(to_string(parse_element(s, alg), order, alg.n()) == s);  // printing is a fixpoint
    }
}

TEST_CASE("JSON interchange") {
    Algebra alg(2);
    OrderSpec order = OrderSpec::paper_lex();
    SECTION("schema fields") {
        Element e = multiply(gen(2, 2, 2), gen(2, 1, 1), alg);
        json j = element_to_json(e, order, 2);
        CHECK(j.at("n") == 2);
        CHECK(j.at("order") == "paper-lex");
        REQUIRE(j.at("terms").size() == 2);
        // terms descend under the active order; the head comes first
        CHECK(j.at("terms")[0].at("exp") == json::parse("[[1,0],[0,1]]"));
        CHECK(j.at("terms")[1].at("exp") == json::parse("[[0,1],[1,0]]"));
        CHECK(j.at("terms")[1].at("coeff").at("num") == json::parse(R"(["-1","1"])"));
    }
    SECTION("round trip on random elements") {
        oracles::Rng rng(83);
        for (int k = 0; k < 100; ++k) {
            Element e = rng.element(alg, 3);
            CHECK(element_from_json(element_to_json(e, order, 2)) == e);
        }
    }
    SECTION("scalar round trip") {
        Scalar q = Scalar::q(alg.field());
        Scalar s = (q * q + Scalar(3)) / (q + Scalar(1));
        CHECK(scalar_from_json(to_json(s)) == s);
    }
    SECTION("text and JSON forms are semantically equal") {
        oracles::Rng rng(97);
        for (int k = 0; k < 50; ++k) {
            Element e = rng.element(alg, 3);
            Element from_text = parse_element(to_string(e, order, 2), alg);
            Element from_json_form = element_from_json(element_to_json(e, order, 2));
            CHECK(from_text == from_json_form);
        }
    }
}
