#include "pie/term.hpp"

#include <algorithm>

#include "pie/diagnostic.hpp"

namespace pie {
namespace mk {

TermPtr var(Name name, SourceSpan span) { return std::make_shared<const Term>(Var{std::move(name)}, span); }

TermPtr universe(std::uint32_t level, SourceSpan span) { return std::make_shared<const Term>(Universe{level}, span); }

TermPtr lam(Name binder, TermPtr domain, TermPtr body, SourceSpan span) {
    return std::make_shared<const Term>(Lam{std::move(binder), std::move(domain), std::move(body)}, span);
}

TermPtr pi(Name binder, TermPtr domain, TermPtr body, SourceSpan span) {
    return std::make_shared<const Term>(Pi{std::move(binder), std::move(domain), std::move(body)}, span);
}

TermPtr app(TermPtr fn, TermPtr arg, SourceSpan span) {
    return std::make_shared<const Term>(App{std::move(fn), std::move(arg)}, span);
}

TermPtr apps(TermPtr fn, std::span<const TermPtr> args, SourceSpan span) {
    for (const auto& a : args) fn = app(std::move(fn), a, span);
    return fn;
}

TermPtr ind(Name name, TermPtr arity, std::vector<CtorDecl> ctors, SourceSpan span) {
    return std::make_shared<const Term>(Ind{std::move(name), std::move(arity), std::move(ctors)}, span);
}

TermPtr constr(std::size_t index, TermPtr inductive, SourceSpan span) {
    return std::make_shared<const Term>(Constr{index, std::move(inductive)}, span);
}

TermPtr match(TermPtr carrier, TermPtr scrutinee, std::vector<Branch> branches, SourceSpan span) {
    return std::make_shared<const Term>(Match{std::move(carrier), std::move(scrutinee), std::move(branches)}, span);
}

TermPtr fix(Name name, std::size_t decArg, TermPtr signature, TermPtr body, SourceSpan span) {
    return std::make_shared<const Term>(Fix{std::move(name), decArg, std::move(signature), std::move(body)}, span);
}

} // namespace mk

Spine spine(const TermPtr& t) {
    Spine s;
    TermPtr cur = t;
    while (const auto* a = cur->as<App>()) {
        s.args.push_back(a->arg);
        cur = a->fn;
    }
    std::reverse(s.args.begin(), s.args.end());
    s.head = cur;
    return s;
}

std::string_view ruleTag(Rule rule) {
    switch (rule) {
    case Rule::TVar: return "T-Var";
    case Rule::TAbs: return "T-Abs";
    case Rule::TPi: return "T-PI";
    case Rule::TUniv: return "T-Univ";
    case Rule::TApp: return "T-App";
    case Rule::TInd: return "T-Ind";
    case Rule::TConstr: return "T-Constr";
    case Rule::TMatch: return "T-Match";
    case Rule::TFix: return "T-Fix";
    case Rule::Guard: return "Guard";
    case Rule::Parse: return "Parse";
    case Rule::Budget: return "Budget";
    }
    return "?";
}

} // namespace pie
