#include "pie/normalize.hpp"

#include "internal.hpp"
#include "pie/diagnostic.hpp"
#include "pie/syntax.hpp"

namespace pie {

namespace detail {

std::pair<Name, TermPtr> avoidGlobal(const Context& ctx, const Name& binder, const TermPtr& body) {
    if (!ctx.isGlobal(binder)) return {binder, body};
    Name fresh = freshName(binder, {body});
    return {fresh, subst(binder, mk::var(fresh), body)};
}

} // namespace detail

namespace {

class Normalizer {
public:
    explicit Normalizer(const Context& ctx) : opts_(ctx.options()) {}

    TermPtr run(TermPtr e, const Context& ctx) {
        Depth guard(*this);
        for (;;) {
            if (const auto* v = e->as<Var>()) {
                auto val = ctx.lookupVal(v->name);
                if (!val || val->is<Fix>()) return e;
                tick();
                e = val;
                continue;
            }
            if (const auto* l = e->as<Lam>()) {
                auto dom = run(l->domain, ctx);
                auto [x, body] = detail::avoidGlobal(ctx, l->binder, l->body);
                auto nb = run(body, ctx.extendType(x, l->domain));
                if (dom == l->domain && nb == l->body && x == l->binder) return e;
                return mk::lam(x, dom, nb, e->span());
            }
            if (const auto* p = e->as<Pi>()) {
                auto dom = run(p->domain, ctx);
                auto [x, body] = detail::avoidGlobal(ctx, p->binder, p->body);
                auto nb = run(body, ctx.extendType(x, p->domain));
                if (dom == p->domain && nb == p->body && x == p->binder) return e;
                return mk::pi(x, dom, nb, e->span());
            }
            if (const auto* m = e->as<Match>()) {
                auto scrut = run(m->scrutinee, ctx);
                if (!constructorHeaded(scrut)) {
                    if (scrut == m->scrutinee) return e;
                    return mk::match(m->carrier, scrut, m->branches, e->span());
                }
                auto s = spine(scrut);
                std::size_t i = s.head->as<Constr>()->index;
                if (i == 0 || i > m->branches.size())
                    throw KernelError(Rule::TMatch, "internal: match has no branch for constructor " + std::to_string(i),
                                      e->span());
                tick();
                e = mk::apps(m->branches[i - 1].body, std::span<const TermPtr>(s.args), e->span());
                continue;
            }
            if (e->is<App>()) return app(e, ctx);
            return e; // Universe, Ind, Constr, Fix
        }
    }

private:
    struct Depth {
        explicit Depth(Normalizer& n) : n_(n) {
            if (++n_.depth_ > n_.opts_.depthLimit)
                throw KernelError(Rule::Budget, "normalisation exceeded the depth limit of " +
                                                    std::to_string(n_.opts_.depthLimit));
        }
        ~Depth() { --n_.depth_; }
        Normalizer& n_;
    };

    void tick() {
        if (++steps_ > opts_.stepBudget)
            throw KernelError(Rule::Budget,
                              "normalisation exceeded the step budget of " + std::to_string(opts_.stepBudget));
    }

    // The Fix node behind a head, with the term its self-name unfolds to.
    const Fix* fixOf(const TermPtr& head, const Context& ctx, TermPtr& self) const {
        if (const auto* f = head->as<Fix>()) {
            self = head;
            return f;
        }
        if (const auto* v = head->as<Var>()) {
            auto val = ctx.lookupVal(v->name);
            if (val && val->is<Fix>()) {
                self = head;
                return val->as<Fix>();
            }
        }
        return nullptr;
    }

    TermPtr app(const TermPtr& e, const Context& ctx) {
        auto s = spine(e);
        TermPtr head = run(s.head, ctx);
        std::vector<TermPtr> args;
        args.reserve(s.args.size());
        for (const auto& a : s.args) args.push_back(run(a, ctx));

        std::size_t used = 0;
        for (;;) {
            if (const auto* l = head->as<Lam>()) {
                if (used == args.size()) break;
                tick();
                head = run(subst(l->binder, args[used++], l->body), ctx);
                continue;
            }
            TermPtr self;
            const Fix* f = fixOf(head, ctx, self);
            if (f && args.size() - used > f->decArg && constructorHeaded(args[used + f->decArg])) {
                tick();
                head = run(subst(f->name, self, f->body), ctx);
                continue;
            }
            break;
        }
        if (used == args.size()) return head;
        return mk::apps(head, std::span<const TermPtr>(args.data() + used, args.size() - used), e->span());
    }

    const KernelOptions& opts_;
    std::size_t steps_ = 0;
    std::size_t depth_ = 0;
};

} // namespace

TermPtr normalise(const TermPtr& e, const Context& ctx) { return Normalizer(ctx).run(e, ctx); }

bool checkEqual(const TermPtr& a, const TermPtr& b, const Context& ctx) {
    if (alphaEq(a, b)) return true;
    return alphaEq(normalise(a, ctx), normalise(b, ctx));
}

bool subsumes(const TermPtr& actual, const TermPtr& expected, const Context& ctx) {
    if (alphaLeq(actual, expected)) return true;
    return alphaLeq(normalise(actual, ctx), normalise(expected, ctx));
}

bool constructorHeaded(const TermPtr& t) {
    const Term* cur = t.get();
    while (const auto* a = cur->as<App>()) cur = a->fn.get();
    return cur->is<Constr>();
}

} // namespace pie
