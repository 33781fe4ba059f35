#include "pie/inductive.hpp"

#include "internal.hpp"
#include "pie/normalize.hpp"
#include "pie/syntax.hpp"
#include "pie/typecheck.hpp"

namespace pie {

TermPtr upsilon(const TermPtr& t) {
    const Term* cur = t.get();
    TermPtr last = t;
    while (const auto* p = cur->as<Pi>()) {
        last = p->body;
        cur = p->body.get();
    }
    if (!cur->is<Universe>())
        throw KernelError(Rule::TInd, "arity `" + prettyPrint(t) + "` does not end in a universe", t->span());
    return last;
}

namespace {

// P is strictly positive in X when X occurs only as the head of its final
// codomain, never in a domain or an argument.
bool strictlyPositive(const TermPtr& t, const Name& x) {
    TermPtr cur = t;
    while (const auto* p = cur->as<Pi>()) {
        if (occursFree(x, p->domain)) return false;
        if (p->binder == x) return true;
        cur = p->body;
    }
    auto s = spine(cur);
    for (const auto& a : s.args)
        if (occursFree(x, a)) return false;
    const auto* h = s.head->as<Var>();
    return (h && h->name == x) || !occursFree(x, s.head);
}

} // namespace

void positiveCheck(const TermPtr& ctorType, const Name& indName, std::vector<Diagnostic>* warnings) {
    TermPtr cur = ctorType;
    while (const auto* p = cur->as<Pi>()) {
        if (p->binder == indName)
            throw KernelError(Rule::TInd, "binder `" + p->binder.str() + "` shadows the inductive being defined",
                              cur->span());
        bool dependent = occursFree(p->binder, p->body);
        if (dependent && occursFree(indName, p->domain))
            throw KernelError(Rule::TInd,
                              "the domain of dependent binder `" + p->binder.str() + "` mentions `" + indName.str() + "`",
                              p->domain->span().empty() ? cur->span() : p->domain->span());
        if (!dependent && warnings && !strictlyPositive(p->domain, indName)) {
            Diagnostic w{Rule::TInd,
                         "`" + indName.str() + "` occurs non-strictly-positively in `" + prettyPrint(p->domain) + "`",
                         p->domain->span(), nullptr, nullptr, Severity::Warning};
            warnings->push_back(std::move(w));
        }
        cur = p->body;
    }
    auto s = spine(cur);
    const auto* h = s.head->as<Var>();
    if (!h || h->name != indName)
        throw KernelError(Rule::TInd,
                          "constructor type must end in an application of `" + indName.str() + "`, found `" +
                              prettyPrint(cur) + "`",
                          cur->span().empty() ? ctorType->span() : cur->span());
    for (const auto& a : s.args)
        if (occursFree(indName, a))
            throw KernelError(Rule::TInd, "`" + indName.str() + "` occurs in the index `" + prettyPrint(a) + "`",
                              a->span());
}

TermPtr checkInductive(const Name& name, const TermPtr& arity, const std::vector<CtorDecl>& ctors,
                       const Context& ctx, std::vector<Diagnostic>* warnings) {
    universeOf(ctx, arity, Rule::TInd, "the arity of");
    auto u = upsilon(arity);
    auto level = u->as<Universe>()->level;
    auto inner = ctx.extendType(name, arity);
    for (const auto& c : ctors) {
        try {
            positiveCheck(c.type, name, warnings);
            universeOf(inner, c.type, Rule::TInd, "the type of constructor");
            // Leading binders that repeat the arity's own binders act as
            // parameters and do not raise the constructor's universe.
            Context pctx = inner;
            TermPtr rest = c.type, ar = arity;
            while (rest->is<Pi>() && ar->is<Pi>()) {
                const auto& rp = *rest->as<Pi>();
                const auto& ap = *ar->as<Pi>();
                if (!alphaEq(rp.domain, ap.domain)) break;
                pctx = pctx.extendType(rp.binder, rp.domain);
                ar = subst(ap.binder, mk::var(rp.binder), ap.body);
                rest = rp.body;
            }
            auto l = universeOf(pctx, rest, Rule::TInd, "the type of constructor");
            if (l != level)
                throw KernelError(Rule::TInd,
                                  "constructor `" + c.name.str() + "` lives in a different universe than `" +
                                      name.str() + "`",
                                  c.type->span(), u, mk::universe(l));
        } catch (KernelError& e) {
            if (e.rule() != Rule::TInd) {
                auto d = e.diagnostic();
                d.rule = Rule::TInd;
                d.message = "constructor `" + c.name.str() + "`: " + d.message;
                throw detail::located(KernelError(std::move(d)), c.type->span());
            }
            throw detail::located(std::move(e), c.type->span());
        }
    }
    return arity;
}

Context registerInductive(const Context& ctx, const TermPtr& indNode) {
    const auto& ind = *indNode->as<Ind>();
    Context out = ctx.extendTypeValue(ind.name, ind.arity, indNode);
    for (std::size_t i = 0; i < ind.ctors.size(); ++i) {
        const auto& c = ind.ctors[i];
        out = out.extendTypeValue(c.name, subst(ind.name, indNode, c.type), mk::constr(i + 1, indNode));
    }
    return out;
}

InductiveDecl inductiveInfo(const TermPtr& indNode, const Context&) {
    const auto& ind = *indNode->as<Ind>();
    std::size_t n = 0;
    for (const Term* cur = ind.arity.get(); const auto* p = cur->as<Pi>(); cur = p->body.get()) ++n;
    return InductiveDecl{indNode, n, upsilon(ind.arity)};
}

TermPtr checkConstr(std::size_t index, const TermPtr& inductive, const Context& ctx) {
    TermPtr node = inductive;
    if (!node->is<Ind>()) node = normalise(inductive, ctx);
    const auto* ind = node->as<Ind>();
    if (!ind)
        throw KernelError(Rule::TConstr, "`" + prettyPrint(inductive) + "` is not an inductive type",
                          inductive->span());
    typeCheck(ctx, node);
    if (index < 1 || index > ind->ctors.size())
        throw KernelError(Rule::TConstr,
                          "constructor index " + std::to_string(index) + " is out of bounds for `" + ind->name.str() +
                              "` with " + std::to_string(ind->ctors.size()) + " constructors");
    return subst(ind->name, node, ind->ctors[index - 1].type);
}

TermPtr caseTypeRaw(const TermPtr& ctorType, const TermPtr& carrier, const TermPtr& ctorTerm) {
    if (const auto* p = ctorType->as<Pi>()) {
        Name x = p->binder;
        TermPtr body = p->body;
        if (occursFree(x, carrier) || occursFree(x, ctorTerm)) {
            x = freshName(x, {carrier, ctorTerm, body});
            body = subst(p->binder, mk::var(x), body);
        }
        return mk::pi(x, p->domain, caseTypeRaw(body, carrier, mk::app(ctorTerm, mk::var(x))));
    }
    auto s = spine(ctorType);
    auto args = s.args;
    args.push_back(ctorTerm);
    return mk::apps(carrier, std::span<const TermPtr>(args));
}

TermPtr caseType(const TermPtr& ctorType, const TermPtr& carrier, const TermPtr& ctorTerm, const Context& ctx) {
    return normalise(caseTypeRaw(ctorType, carrier, ctorTerm), ctx);
}

TermPtr carrierFamily(const TermPtr& carrier, std::size_t paramCount) {
    const auto* p = carrier->as<Pi>();
    if (!p) return carrier;
    std::vector<const Pi*> binders;
    TermPtr cur = carrier;
    for (std::size_t i = 0; i <= paramCount; ++i) {
        const auto* q = cur->as<Pi>();
        if (!q) return carrier;
        binders.push_back(q);
        cur = q->body;
    }
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        cur = mk::lam((*it)->binder, (*it)->domain, cur, carrier->span());
    return cur;
}

namespace {

// Πx̄:Ā.Π_:(I x̄).Type_level, with the arity's binders renamed apart.
TermPtr motiveType(const TermPtr& indNode, std::size_t paramCount, std::uint32_t level, const TermPtr& avoid) {
    const auto& ind = *indNode->as<Ind>();
    std::vector<std::pair<Name, TermPtr>> binders;
    TermPtr cur = ind.arity;
    Name base = freshName(Name{"a"}, {ind.arity, avoid});
    for (std::size_t i = 0; i < paramCount; ++i) {
        const auto& p = *cur->as<Pi>();
        Name x{"a", base.tag + static_cast<std::uint32_t>(i)};
        binders.emplace_back(x, p.domain);
        cur = subst(p.binder, mk::var(x), p.body);
    }
    std::vector<TermPtr> vars;
    for (const auto& b : binders) vars.push_back(mk::var(b.first));
    Name self{"_", base.tag + static_cast<std::uint32_t>(paramCount)};
    TermPtr t = mk::pi(self, mk::apps(indNode, std::span<const TermPtr>(vars)), mk::universe(level));
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) t = mk::pi(it->first, it->second, t);
    return t;
}

} // namespace

TermPtr checkMatch(const TermPtr& carrier, const TermPtr& scrutinee, const std::vector<Branch>& branches,
                   const Context& ctx) {
    auto ts = normalise(typeCheck(ctx, scrutinee), ctx);
    auto s = spine(ts);
    if (!s.head->is<Ind>())
        throw KernelError(Rule::TMatch, "the scrutinee `" + prettyPrint(scrutinee) + "` is not of an inductive type",
                          scrutinee->span(), nullptr, ts);
    const auto& indNode = s.head;
    const auto& ind = *indNode->as<Ind>();
    auto info = inductiveInfo(indNode, ctx);
    if (s.args.size() != info.paramCount)
        throw KernelError(Rule::TMatch, "the scrutinee's type `" + prettyPrint(ts) + "` is not fully applied",
                          scrutinee->span());

    auto family = carrierFamily(carrier, info.paramCount);
    auto tc = normalise(typeCheck(ctx, family), ctx);
    const Term* cur = tc.get();
    for (std::size_t i = 0; i <= info.paramCount && cur->is<Pi>(); ++i) cur = cur->as<Pi>()->body.get();
    const auto* lvl = cur->as<Universe>();
    auto expected = motiveType(indNode, info.paramCount, lvl ? lvl->level : 0, tc);
    if (!lvl || !alphaEq(normalise(expected, ctx), tc))
        throw KernelError(Rule::TMatch, "the carrier is not a type family over `" + ind.name.str() + "`",
                          carrier->span(), expected, tc);

    if (branches.size() != ind.ctors.size())
        throw KernelError(Rule::TMatch,
                          "match on `" + ind.name.str() + "` needs " + std::to_string(ind.ctors.size()) +
                              " branches, found " + std::to_string(branches.size()));
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (branches[i].ctor != ind.ctors[i].name)
            throw KernelError(Rule::TMatch,
                              "branch " + std::to_string(i + 1) + " must be `" + ind.ctors[i].name.str() +
                                  "`, found `" + branches[i].ctor.str() + "`",
                              branches[i].body->span());
    }
    for (std::size_t i = 0; i < branches.size(); ++i) {
        auto ctorType = subst(ind.name, indNode, ind.ctors[i].type);
        auto want = caseType(ctorType, family, mk::constr(i + 1, indNode), ctx);
        auto got = typeCheck(ctx, branches[i].body);
        if (!subsumes(got, want, ctx))
            throw KernelError(Rule::TMatch, "branch `" + branches[i].ctor.str() + "` has the wrong type",
                              branches[i].body->span(), want, normalise(got, ctx));
    }
    auto args = s.args;
    args.push_back(scrutinee);
    return normalise(mk::apps(family, std::span<const TermPtr>(args)), ctx);
}

} // namespace pie
