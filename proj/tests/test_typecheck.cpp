#include "doctest.h"
#include "fixtures.hpp"
#include "pie/normalize.hpp"
#include "pie/syntax.hpp"
#include "pie/typecheck.hpp"

using namespace pie;
using fixtures::term;

namespace {

Rule failure(const Context& ctx, const std::string& src) {
    try {
        typeCheck(ctx, term(src));
    } catch (const KernelError& e) {
        return e.rule();
    }
    FAIL("expected a type error for: " << src);
    return Rule::Parse;
}

TermPtr typeOf(const Context& ctx, const std::string& src) { return normalise(typeCheck(ctx, term(src)), ctx); }

} // namespace

TEST_CASE("T-Univ") {
    Context ctx;
    for (std::uint32_t i = 0; i < 6; ++i)
        CHECK(alphaEq(typeCheck(ctx, mk::universe(i)), mk::universe(i + 1)));
    CHECK(alphaEq(typeOf(ctx, "Prop"), mk::universe(2)));
}

TEST_CASE("T-PI takes the larger universe") {
    Context ctx;
    CHECK(alphaEq(typeOf(ctx, "Πx:Set.(Type 1)"), mk::universe(2)));
    CHECK(alphaEq(typeOf(ctx, "Πx:(Type 3).Set"), mk::universe(4)));
    CHECK(alphaEq(typeOf(ctx, "Set -> Set"), mk::universe(1)));
    auto local = fixtures::withLocals(ctx, {{"A", "Set"}});
    CHECK(alphaEq(typeOf(local, "A -> A"), mk::universe(0)));
}

TEST_CASE("T-Var") {
    auto ctx = fixtures::withLocals({}, {{"A", "Set"}, {"a", "A"}});
    CHECK(alphaEq(typeOf(ctx, "a"), term("A")));
    CHECK(failure(ctx, "b") == Rule::TVar);
}

TEST_CASE("T-Abs") {
    auto ctx = fixtures::withLocals({}, {{"A", "Set"}, {"a", "A"}});
    CHECK(alphaEq(typeOf(ctx, "λx:A.x"), term("Πx:A.A")));
    CHECK(alphaEq(typeOf(ctx, "λT:Set.λx:T.x"), term("ΠT:Set.Πx:T.T")));
    CHECK(failure(ctx, "λx:a.x") == Rule::TAbs);
}

TEST_CASE("T-PI failures") {
    auto ctx = fixtures::withLocals({}, {{"A", "Set"}, {"a", "A"}});
    CHECK(failure(ctx, "Πx:a.A") == Rule::TPi);
    CHECK(failure(ctx, "Πx:A.a") == Rule::TPi);
}

TEST_CASE("T-App") {
    auto ctx = fixtures::withLocals({}, {{"A", "Set"}, {"B", "Set"}, {"a", "A"}, {"b", "B"}, {"f", "A -> B"}});
    CHECK(alphaEq(typeOf(ctx, "(f a)"), term("B")));
    CHECK(alphaEq(typeOf(ctx, "((λT:Set.λx:T.x) A a)"), term("A")));
    CHECK(failure(ctx, "(a b)") == Rule::TApp);

    try {
        typeCheck(ctx, term("(f b)"));
        FAIL("expected T-App");
    } catch (const KernelError& e) {
        CHECK(e.rule() == Rule::TApp);
        REQUIRE(e.diagnostic().expected);
        REQUIRE(e.diagnostic().actual);
        CHECK(alphaEq(e.diagnostic().expected, term("A")));
        CHECK(alphaEq(e.diagnostic().actual, term("B")));
    }
}

TEST_CASE("dependent application substitutes the argument") {
    auto ctx = fixtures::withLocals({}, {{"P", "Set -> Set"}, {"g", "ΠT:Set.(P T)"}, {"A", "Set"}});
    CHECK(alphaEq(typeOf(ctx, "(g A)"), term("(P A)")));
}

TEST_CASE("application types are compared up to conversion") {
    auto ctx = fixtures::withLocals({}, {{"A", "Set"}, {"a", "A"}, {"f", "((λT:Set.T) A) -> A"}});
    CHECK(alphaEq(typeOf(ctx, "(f a)"), term("A")));
}

TEST_CASE("cumulativity at application") {
    auto ctx = fixtures::withLocals({}, {{"F", "(Type 1) -> Set"}});
    CHECK(alphaEq(typeOf(ctx, "(F Set)"), term("Set")));
    auto lower = fixtures::withLocals({}, {{"G", "Set -> Set"}});
    CHECK(failure(lower, "(G Set)") == Rule::TApp);
}

TEST_CASE("imp_a_b_a") {
    auto el = fixtures::elaborateCorpus("fol_proof.pie");
    REQUIRE(el.ok());
    auto t = el.context.lookupType(Name{"imp_a_b_a"});
    REQUIRE(t);
    CHECK(alphaEq(t, term("ΠA:o.ΠB:o.(true (⊃ A (⊃ B A)))")));
}

TEST_CASE("elaborate continues after a failing declaration") {
    auto el = fixtures::elaborateSource("Axiom A : Set; Axiom bad : (A A); Axiom a : A; Axiom c : (bad a); Axiom d : A;");
    CHECK(el.diagnostics.size() == 2);
    REQUIRE(el.decls.size() == 7);
    CHECK(el.decls[0].fromPrelude);
    CHECK(el.decls[2].ok);
    CHECK_FALSE(el.decls[3].ok);
    CHECK(el.decls[4].ok);
    CHECK_FALSE(el.decls[5].ok);
    CHECK(el.decls[6].ok);
    CHECK_FALSE(el.context.lookupType(Name{"bad"}));
    CHECK(el.diagnostics[1].rule == Rule::TVar);
}

TEST_CASE("declaration rules") {
    auto rule = [](const std::string& src) {
        auto el = fixtures::elaborateSource(src);
        REQUIRE(el.diagnostics.size() == 1);
        return el.diagnostics[0].rule;
    };
    CHECK(rule("Axiom A : Set; Axiom A : Set;") == Rule::TVar);
    CHECK(rule("Axiom A : Set; Axiom a : A; Axiom b : a;") == Rule::TPi);
    CHECK(rule("Axiom A : Set; Axiom B : Set; Axiom a : A; def b : B { a };") == Rule::TApp);
    CHECK(rule("Axiom A : Set; def f(x:A) : A { (f x) };") == Rule::Guard);
}

TEST_CASE("diagnostics point at the declaration") {
    auto el = fixtures::elaborateSource("Axiom A : Set;\nAxiom B : Set;\nAxiom a : A;\ndef b : B {\n  a\n};");
    REQUIRE(el.diagnostics.size() == 1);
    CHECK_FALSE(el.diagnostics[0].span.empty());
    CHECK(el.diagnostics[0].span.startLine >= 4);
}

TEST_CASE("the prelude provides Void and Null") {
    auto el = fixtures::elaborateSource("");
    REQUIRE(el.ok());
    CHECK(alphaEq(el.context.lookupType(Name{"Void"}), term("Set")));
    CHECK(alphaEq(el.context.lookupType(Name{"Null"}), term("Void")));
}

TEST_CASE("the whole corpus elaborates") {
    for (const auto& f : fixtures::positiveCorpus()) {
        auto el = fixtures::elaborateCorpus(f);
        CHECK_MESSAGE(el.ok(), f << ": " << (el.ok() ? "" : el.diagnostics[0].message));
    }
}

TEST_CASE("subject reduction on corpus definitions") {
    auto el = fixtures::elaborateCorpus("nat_proofs.pie");
    REQUIRE(el.ok());
    auto ctx = el.context;
    for (const char* src : {"(add (Succ Zero) (Succ Zero))", "(add_zero (Succ Zero))", "(add_x_zero Zero)"}) {
        auto t = typeCheck(ctx, term(src));
        auto v = normalise(term(src), ctx);
        CHECK_MESSAGE(checkEqual(typeCheck(ctx, v), t, ctx), src);
    }
}
