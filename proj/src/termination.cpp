#include "pie/termination.hpp"

#include "pie/normalize.hpp"
#include "pie/syntax.hpp"
#include "pie/typecheck.hpp"

namespace pie {

namespace {

[[noreturn]] void reject(const std::string& msg, const TermPtr& at) { throw KernelError(Rule::Guard, msg, at->span()); }

// State after entering the scope of `binder`; false when it shadows f, in
// which case the scope cannot mention the recursive function.
bool enter(GuardState& st, const Name& binder) {
    if (binder == st.f) return false;
    st.guarded.erase(binder);
    if (st.xk == binder) st.xk.reset();
    return true;
}

bool isGuardedVar(const GuardState& st, const TermPtr& t, bool allowXk) {
    const auto* v = t->as<Var>();
    if (!v) return false;
    return st.guarded.count(v->name) || (allowXk && st.xk == v->name);
}

void check(const GuardState& st, const TermPtr& e);

void under(const GuardState& st, const Name& binder, const TermPtr& body) {
    GuardState inner = st;
    if (enter(inner, binder)) check(inner, body);
}

void check(const GuardState& st, const TermPtr& e) {
    if (!occursFree(st.f, e)) return; // (1)
    if (e->is<Var>()) reject("`" + st.f.str() + "` is used as a value instead of being called", e); // (2)

    if (const auto* m = e->as<Match>(); m && isGuardedVar(st, m->scrutinee, true)) { // (3)
        check(st, m->carrier);
        check(st, m->scrutinee);
        for (const auto& b : m->branches) {
            GuardState inner = st;
            TermPtr body = b.body;
            bool live = true;
            while (const auto* l = body->as<Lam>()) {
                check(inner, l->domain);
                if (!enter(inner, l->binder)) {
                    live = false;
                    break;
                }
                inner.guarded.insert(l->binder);
                body = l->body;
            }
            if (live) check(inner, body);
        }
        return;
    }

    if (e->is<App>()) {
        auto s = spine(e);
        if (const auto* h = s.head->as<Var>(); h && h->name == st.f) { // (4)
            if (s.args.size() <= st.k)
                reject("recursive call to `" + st.f.str() + "` has fewer than " + std::to_string(st.k + 1) +
                           " arguments",
                       e);
            if (!isGuardedVar(st, s.args[st.k], false))
                reject("argument " + std::to_string(st.k + 1) + " of recursive call `" + prettyPrint(e) +
                           "` is not a deconstructed variable",
                       e);
            for (const auto& a : s.args) check(st, a);
            return;
        }
    }

    // (5)
    if (const auto* l = e->as<Lam>()) {
        check(st, l->domain);
        under(st, l->binder, l->body);
    } else if (const auto* p = e->as<Pi>()) {
        check(st, p->domain);
        under(st, p->binder, p->body);
    } else if (const auto* a = e->as<App>()) {
        check(st, a->fn);
        check(st, a->arg);
    } else if (const auto* i = e->as<Ind>()) {
        check(st, i->arity);
        for (const auto& c : i->ctors) under(st, i->name, c.type);
    } else if (const auto* c = e->as<Constr>()) {
        check(st, c->inductive);
    } else if (const auto* m = e->as<Match>()) {
        check(st, m->carrier);
        check(st, m->scrutinee);
        for (const auto& b : m->branches) check(st, b.body);
    } else if (const auto* f = e->as<Fix>()) {
        check(st, f->signature);
        under(st, f->name, f->body);
    }
}

std::size_t formalCount(const TermPtr& body) {
    std::size_t n = 0;
    for (const Term* cur = body.get(); const auto* l = cur->as<Lam>(); cur = l->body.get()) ++n;
    return n;
}

} // namespace

void guardCheck(const GuardState& state, const TermPtr& e) { check(state, e); }

void checkGuardedBody(const Name& f, std::size_t k, const TermPtr& body) {
    if (formalCount(body) <= k)
        throw KernelError(Rule::Guard,
                          "`" + f.str() + "` has no formal argument at position " + std::to_string(k + 1),
                          body->span());
    GuardState st{f, k, std::nullopt, {}};
    TermPtr cur = body;
    for (std::size_t i = 0; const auto* l = cur->as<Lam>(); ++i) {
        check(st, l->domain);
        if (!enter(st, l->binder)) return;
        if (i == k) st.xk = l->binder;
        cur = l->body;
    }
    check(st, cur);
}

std::size_t inferFixIndex(const Name& name, const TermPtr&, const TermPtr& body) {
    std::size_t n = formalCount(body);
    if (n == 0)
        throw KernelError(Rule::Guard, "recursive definition `" + name.str() + "` takes no arguments", body->span());
    std::string first;
    SourceSpan at = body->span();
    for (std::size_t k = 0; k < n; ++k) {
        try {
            checkGuardedBody(name, k, body);
            return k;
        } catch (const KernelError& e) {
            if (first.empty()) {
                first = e.diagnostic().message;
                if (!e.diagnostic().span.empty()) at = e.diagnostic().span;
            }
        }
    }
    std::string tried;
    for (std::size_t k = 0; k < n; ++k) tried += (k ? "," : "") + std::to_string(k);
    throw KernelError(Rule::Guard,
                      "no structurally decreasing argument for `" + name.str() + "` (tried k=" + tried + "): " + first,
                      at);
}

TermPtr checkFix(const Name& name, std::size_t k, const TermPtr& signature, const TermPtr& body, const Context& ctx) {
    universeOf(ctx, signature, Rule::TFix, "the signature of");
    auto tb = typeCheck(ctx.extendType(name, signature), body);
    if (!subsumes(tb, signature, ctx))
        throw KernelError(Rule::TFix, "the body of `" + name.str() + "` does not match its signature", body->span(),
                          normalise(signature, ctx), normalise(tb, ctx));
    checkGuardedBody(name, k, body);
    return signature;
}

} // namespace pie
