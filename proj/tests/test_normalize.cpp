#include "doctest.h"
#include "fixtures.hpp"
#include "pie/normalize.hpp"
#include "pie/syntax.hpp"

using namespace pie;
using fixtures::term;

namespace {

const Context& natCtx() {
    static const Context ctx = fixtures::elaborateCorpus("nat_proofs.pie").context;
    return ctx;
}

TermPtr nf(const std::string& src, const Context& ctx = natCtx()) { return normalise(term(src), ctx); }

} // namespace

TEST_CASE("beta") {
    Context ctx;
    CHECK(alphaEq(normalise(term("((λx:A.x) y)"), ctx), term("y")));
    CHECK(alphaEq(normalise(term("((λx:A.λy:B.x) y)"), ctx), term("λq:B.y")));
    CHECK(alphaEq(normalise(term("λz:A.((λx:A.x) z)"), ctx), term("λz:A.z")));
    CHECK(alphaEq(normalise(term("(f ((λx:A.x) y))"), ctx), term("(f y)")));
}

TEST_CASE("beta reduction avoids capture") {
    Context ctx;
    auto r = normalise(term("((λx:A.λy:A.(x y)) y)"), ctx);
    CHECK(alphaEq(r, term("λz:A.(y z)")));
}

TEST_CASE("delta unfolds defs but not axioms") {
    auto el = fixtures::elaborateSource("Axiom A : Set; Axiom a : A; def id(x:A) : A { x }; def b : A { (id a) };");
    REQUIRE(el.ok());
    CHECK(alphaEq(normalise(term("b"), el.context), term("a")));
    CHECK(alphaEq(normalise(term("a"), el.context), term("a")));
}

TEST_CASE("add facts") {
    const auto& ctx = natCtx();
    CHECK(alphaEq(nf("(add Zero Zero)"), nf("Zero")));
    CHECK(alphaEq(nf("(add (Succ Zero) (Succ Zero))"), nf("(Succ (Succ Zero))")));
    CHECK(checkEqual(term("(add (Succ (Succ Zero)) (Succ Zero))"), term("(Succ (Succ (Succ Zero)))"), ctx));
    CHECK_FALSE(checkEqual(term("(add (Succ Zero) Zero)"), term("Zero"), ctx));
}

TEST_CASE("normal forms are built from Ind and Constr nodes") {
    auto zero = nf("Zero");
    const auto* c = zero->as<Constr>();
    REQUIRE(c);
    CHECK(c->index == 1);
    CHECK(c->inductive->is<Ind>());
    auto one = nf("(Succ Zero)");
    auto s = spine(one);
    REQUIRE(s.head->as<Constr>());
    CHECK(s.head->as<Constr>()->index == 2);
}

TEST_CASE("stuck recursion stays neutral") {
    auto ctx = fixtures::withLocals(natCtx(), {{"y", "Nat"}});
    auto r = normalise(term("(add y Zero)"), ctx);
    CHECK(alphaEq(r, normalise(term("(add y Zero)"), ctx)));
    CHECK_FALSE(r->is<Constr>());
    CHECK(prettyPrint(r) == "(add y Zero)");
    CHECK(alphaEq(normalise(term("(add Zero y)"), ctx), term("y")));
    CHECK(checkEqual(term("(add (Succ Zero) y)"), term("(Succ y)"), ctx));
}

TEST_CASE("next_weekday") {
    auto ctx = fixtures::elaborateCorpus("weekdays_rewrite.pie").context;
    for (auto [in, out] : std::vector<std::pair<const char*, const char*>>{
             {"monday", "tuesday"}, {"thursday", "friday"}, {"friday", "monday"}, {"sunday", "monday"}}) {
        CHECK_MESSAGE(checkEqual(mk::app(term("next_weekday"), term(in)), term(out), ctx), in);
    }
    CHECK_FALSE(checkEqual(term("(next_weekday monday)"), term("monday"), ctx));
}

TEST_CASE("checkEqual") {
    Context ctx;
    CHECK(checkEqual(term("λx:A.x"), term("λy:A.y"), ctx));
    CHECK(checkEqual(term("((λx:Set.x) A)"), term("A"), ctx));
    CHECK_FALSE(checkEqual(term("A"), term("B"), ctx));
    CHECK_FALSE(checkEqual(term("Set"), term("Type 1"), ctx));
}

TEST_CASE("subsumes allows lifting along universes") {
    Context ctx;
    CHECK(subsumes(term("Set"), term("Type 1"), ctx));
    CHECK(subsumes(term("Type 1"), term("Type 1"), ctx));
    CHECK_FALSE(subsumes(term("Type 2"), term("Type 1"), ctx));
    CHECK(subsumes(term("A -> Set"), term("A -> Prop"), ctx));
}

TEST_CASE("constructorHeaded") {
    CHECK(constructorHeaded(nf("Zero")));
    CHECK(constructorHeaded(nf("(Succ Zero)")));
    CHECK_FALSE(constructorHeaded(term("Zero")));
    CHECK_FALSE(constructorHeaded(nf("Nat")));
}

TEST_CASE("budget exhaustion is a diagnostic") {
    auto loop = mk::fix(Name{"loop"}, 0, term("Πx:Nat.Nat"), term("λx:Nat.(loop x)"));
    auto zero = nf("Zero");
    try {
        normalise(mk::app(loop, zero), natCtx());
        FAIL("expected Budget");
    } catch (const KernelError& e) {
        CHECK(e.rule() == Rule::Budget);
    }

    KernelOptions tight;
    tight.stepBudget = 3;
    try {
        normalise(term("(add (Succ (Succ (Succ Zero))) Zero)"), natCtx().withOptions(tight));
        FAIL("expected Budget");
    } catch (const KernelError& e) {
        CHECK(e.rule() == Rule::Budget);
    }
}

TEST_CASE("deep terms hit the depth limit, not the stack") {
    TermPtr t = term("Zero");
    for (int i = 0; i < 50000; ++i) t = mk::app(term("Succ"), t);
    KernelOptions o;
    o.stepBudget = 10'000'000;
    try {
        normalise(t, natCtx().withOptions(o));
        FAIL("expected Budget");
    } catch (const KernelError& e) {
        CHECK(e.rule() == Rule::Budget);
    }
}
