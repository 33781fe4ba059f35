#include "doctest.h"
#include "fixtures.hpp"
#include "pie/syntax.hpp"
#include "pie/termination.hpp"

using namespace pie;
using fixtures::term;

namespace {

bool guarded(const GuardState& st, const std::string& src) {
    try {
        guardCheck(st, term(src));
        return true;
    } catch (const KernelError& e) {
        CHECK(e.rule() == Rule::Guard);
        return false;
    }
}

bool bodyOk(const std::string& src, std::size_t k) {
    try {
        checkGuardedBody(Name{"f"}, k, term(src));
        return true;
    } catch (const KernelError& e) {
        CHECK(e.rule() == Rule::Guard);
        return false;
    }
}

} // namespace

TEST_CASE("guard clauses") {
    GuardState st{Name{"f"}, 0, Name{"x"}, {}};
    CHECK(guarded(st, "(g x y)"));
    CHECK_FALSE(guarded(st, "f"));
    CHECK_FALSE(guarded(st, "(g f)"));
    CHECK_FALSE(guarded(st, "(f x)"));
    CHECK(guarded(st, "<P> match x with { Zero => y; Succ => λp:Nat.(f p) }"));
    CHECK_FALSE(guarded(st, "<P> match y with { Zero => y; Succ => λp:Nat.(f p) }"));

    GuardState withP{Name{"f"}, 1, Name{"x"}, {Name{"p"}}};
    CHECK(guarded(withP, "(f y p)"));
    CHECK_FALSE(guarded(withP, "(f p y)"));
    CHECK_FALSE(guarded(withP, "(f y)"));
    CHECK_FALSE(guarded(withP, "(f y p f)"));
    CHECK(guarded(withP, "(f y p (f z p))"));
}

TEST_CASE("shadowing") {
    GuardState st{Name{"f"}, 0, Name{"x"}, {Name{"p"}}};
    CHECK(guarded(st, "λf:Nat.f"));
    CHECK_FALSE(guarded(st, "λp:Nat.(f p)"));
    CHECK_FALSE(guarded(st, "λx:Nat.<P> match x with { Succ => λq:Nat.(f q) }"));
}

TEST_CASE("deeper matches stay guarded") {
    GuardState st{Name{"f"}, 0, Name{"x"}, {}};
    CHECK(guarded(st, "<P> match x with { Zero => Zero; Succ => λp:Nat.<P> match p with { Zero => Zero; Succ => "
                      "λq:Nat.(f q) } }"));
}

TEST_CASE("checkGuardedBody") {
    CHECK(bodyOk("λx:Nat.λy:Nat.<P> match x with { Zero => y; Succ => λn:Nat.(f n y) }", 0));
    CHECK_FALSE(bodyOk("λx:Nat.λy:Nat.<P> match x with { Zero => y; Succ => λn:Nat.(f n y) }", 1));
    CHECK_FALSE(bodyOk("λx:Nat.x", 1));
    CHECK_FALSE(bodyOk("λx:Nat.(f x)", 0));
}

TEST_CASE("inferFixIndex") {
    auto p = parseProgram(fixtures::readFile(fixtures::corpusPath("nat_proofs.pie")));
    for (const auto& d : p.decls) {
        const auto* def = std::get_if<DefDecl>(&d);
        if (!def || (def->name != Name{"add"} && def->name != Name{"nat_ind"})) continue;
        TermPtr type = def->resultType, value = def->body;
        for (auto it = def->params.rbegin(); it != def->params.rend(); ++it) {
            type = mk::pi(it->name, it->type, type);
            value = mk::lam(it->name, it->type, value);
        }
        CHECK(inferFixIndex(def->name, type, value) == (def->name == Name{"add"} ? 0u : 3u));
    }

    auto swapped = term("λy:Nat.λx:Nat.<P> match x with { Zero => y; Succ => λn:Nat.(f y n) }");
    CHECK(inferFixIndex(Name{"f"}, term("Nat -> Nat -> Nat"), swapped) == 1);

    try {
        inferFixIndex(Name{"f"}, term("Nat -> Nat"), term("λx:Nat.(f x)"));
        FAIL("expected Guard");
    } catch (const KernelError& e) {
        CHECK(e.rule() == Rule::Guard);
        CHECK(e.diagnostic().message.find("k=0") != std::string::npos);
    }
}

TEST_CASE("checkFix") {
    auto ctx = fixtures::elaborateCorpus("nat.pie").context;
    auto body = term("λx:Nat.<λn:Nat.Nat> match x with { Zero => Zero; Succ => λn:Nat.(f n) }");
    CHECK(alphaEq(checkFix(Name{"f"}, 0, term("Nat -> Nat"), body, ctx), term("Nat -> Nat")));
    try {
        auto shortBody = term("λx:Nat.<λn:Nat.Nat> match x with { Zero => Zero; Succ => λn:Nat.(f n Zero) }");
        checkFix(Name{"f"}, 0, term("Nat -> Nat -> Nat"), shortBody, ctx);
        FAIL("expected T-Fix");
    } catch (const KernelError& e) {
        CHECK(e.rule() == Rule::TFix);
    }
    auto loop = term("λx:Nat.(f x)");
    try {
        checkFix(Name{"f"}, 0, term("Nat -> Nat"), loop, ctx);
        FAIL("expected Guard");
    } catch (const KernelError& e) {
        CHECK(e.rule() == Rule::Guard);
    }
}

TEST_CASE("guard failures through elaboration") {
    for (const char* f : {"guard_undeconstructed.pie", "guard_escape_argument.pie", "guard_escape_lambda.pie",
                          "guard_constructor_argument.pie"}) {
        auto el = fixtures::elaborateCorpus(std::string("negative/") + f);
        REQUIRE(el.diagnostics.size() >= 1);
        CHECK_MESSAGE(el.diagnostics[0].rule == Rule::Guard, f);
        CHECK_FALSE(el.diagnostics[0].span.empty());
    }
}
