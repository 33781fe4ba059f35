#include "pie/typecheck.hpp"

#include <algorithm>

#include "internal.hpp"
#include "pie/inductive.hpp"
#include "pie/normalize.hpp"
#include "pie/syntax.hpp"
#include "pie/termination.hpp"

namespace pie {

namespace {

TermPtr infer(const Context& ctx, const TermPtr& e) {
    if (const auto* v = e->as<Var>()) {
        auto t = ctx.lookupType(v->name);
        if (!t) throw KernelError(Rule::TVar, "unbound variable `" + v->name.str() + "`", e->span());
        return t;
    }
    if (const auto* u = e->as<Universe>()) return mk::universe(u->level + 1);
    if (const auto* l = e->as<Lam>()) {
        universeOf(ctx, l->domain, Rule::TAbs, "the domain of a λ");
        auto [x, body] = detail::avoidGlobal(ctx, l->binder, l->body);
        auto tb = typeCheck(ctx.extendType(x, l->domain), body);
        return mk::pi(x, l->domain, tb, e->span());
    }
    if (const auto* p = e->as<Pi>()) {
        auto i = universeOf(ctx, p->domain, Rule::TPi, "the domain of a Π");
        auto [x, body] = detail::avoidGlobal(ctx, p->binder, p->body);
        auto j = universeOf(ctx.extendType(x, p->domain), body, Rule::TPi, "the codomain of a Π");
        return mk::universe(std::max(i, j));
    }
    if (const auto* a = e->as<App>()) {
        auto tf = normalise(typeCheck(ctx, a->fn), ctx);
        const auto* pi = tf->as<Pi>();
        if (!pi)
            throw KernelError(Rule::TApp, "`" + prettyPrint(a->fn) + "` is applied but its type is not a Π type",
                              e->span(), nullptr, tf);
        auto ta = typeCheck(ctx, a->arg);
        if (!subsumes(ta, pi->domain, ctx))
            throw KernelError(Rule::TApp, "argument `" + prettyPrint(a->arg) + "` has the wrong type",
                              a->arg->span().empty() ? e->span() : a->arg->span(), pi->domain, normalise(ta, ctx));
        return subst(pi->binder, a->arg, pi->body);
    }
    if (const auto* i = e->as<Ind>()) {
        if (ctx.isRegisteredInductive(e.get())) return i->arity;
        return checkInductive(i->name, i->arity, i->ctors, ctx);
    }
    if (const auto* c = e->as<Constr>()) return checkConstr(c->index, c->inductive, ctx);
    if (const auto* m = e->as<Match>()) return checkMatch(m->carrier, m->scrutinee, m->branches, ctx);
    const auto& f = *e->as<Fix>();
    return checkFix(f.name, f.decArg, f.signature, f.body, ctx);
}

} // namespace

TermPtr typeCheck(const Context& ctx, const TermPtr& e) {
    try {
        return infer(ctx, e);
    } catch (KernelError& err) {
        throw detail::located(std::move(err), e->span());
    }
}

std::uint32_t universeOf(const Context& ctx, const TermPtr& t, Rule rule, std::string_view what) {
    auto ty = normalise(typeCheck(ctx, t), ctx);
    if (const auto* u = ty->as<Universe>()) return u->level;
    throw KernelError(rule, std::string(what) + " `" + prettyPrint(t) + "` is not a type", t->span(), nullptr, ty);
}

namespace {

struct Elaborator {
    Elaboration out;
    std::size_t preludeCount;
    std::size_t index = 0;

    void duplicate(const Name& n, Rule rule, const SourceSpan& span) {
        if (out.context.lookupType(n))
            throw KernelError(rule, "`" + n.str() + "` is already declared", span);
    }

    void record(const Name& n, const TermPtr& type) {
        out.decls.push_back({n, type, true, index < preludeCount});
    }

    void axiom(const AxiomDecl& d) {
        duplicate(d.name, Rule::TVar, d.span);
        universeOf(out.context, d.type, Rule::TPi, "the type of axiom");
        out.context = out.context.extendType(d.name, d.type, Scope::Global);
        record(d.name, d.type);
    }

    void def(const DefDecl& d) {
        duplicate(d.name, Rule::TVar, d.span);
        auto dd = desugarDef(d);
        const auto& ctx = out.context;
        universeOf(ctx, dd.type, Rule::TPi, "the declared type of");
        if (const auto* f = dd.value->as<Fix>()) {
            checkFix(f->name, f->decArg, f->signature, f->body, ctx);
        } else {
            auto tv = typeCheck(ctx, dd.value);
            if (!subsumes(tv, dd.type, ctx))
                throw KernelError(Rule::TApp, "the body of `" + d.name.str() + "` does not have its declared type",
                                  d.body->span(), normalise(dd.type, ctx), normalise(tv, ctx));
        }
        out.context = ctx.extendTypeValue(dd.name, dd.type, dd.value);
        record(dd.name, dd.type);
    }

    void inductive(const InductiveDeclSrc& d) {
        duplicate(d.name, Rule::TInd, d.span);
        for (const auto& c : d.ctors) {
            if (c.name == d.name) throw KernelError(Rule::TInd, "constructor `" + c.name.str() + "` reuses the type name", d.span);
            duplicate(c.name, Rule::TInd, c.type->span().empty() ? d.span : c.type->span());
        }
        std::vector<Diagnostic> warnings;
        checkInductive(d.name, d.arity, d.ctors, out.context, &warnings);
        auto node = mk::ind(d.name, d.arity, d.ctors, d.span);
        out.context = registerInductive(out.context, node);
        record(d.name, d.arity);
        for (const auto& c : d.ctors) record(c.name, out.context.lookupType(c.name));
        for (auto& w : warnings) {
            if (w.span.empty()) w.span = d.span;
            out.warnings.push_back(std::move(w));
        }
    }
};

} // namespace

Elaboration elaborate(const Program& p, KernelOptions options, std::size_t preludeCount) {
    Elaborator el{Elaboration{Context(options), {}, {}, {}}, preludeCount};
    for (const auto& decl : p.decls) {
        try {
            std::visit(
                [&](const auto& d) {
                    using T = std::decay_t<decltype(d)>;
                    if constexpr (std::is_same_v<T, AxiomDecl>)
                        el.axiom(d);
                    else if constexpr (std::is_same_v<T, DefDecl>)
                        el.def(d);
                    else
                        el.inductive(d);
                },
                decl);
        } catch (KernelError& err) {
            auto diag = err.diagnostic();
            if (diag.span.empty()) diag.span = declSpan(decl);
            el.out.diagnostics.push_back(std::move(diag));
            el.out.decls.push_back({declName(decl), nullptr, false, el.index < preludeCount});
        }
        ++el.index;
    }
    return std::move(el.out);
}

} // namespace pie
