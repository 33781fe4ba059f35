#include "pie/syntax.hpp"

#include <algorithm>
#include <sstream>

namespace pie {
namespace {

bool contains(const std::vector<Name>& v, const Name& n) { return std::find(v.begin(), v.end(), n) != v.end(); }

void collectFree(const TermPtr& t, std::vector<Name>& bound, NameSet& out) {
    auto under = [&](const Name& b, const TermPtr& body) {
        bound.push_back(b);
        collectFree(body, bound, out);
        bound.pop_back();
    };
    if (const auto* v = t->as<Var>()) {
        if (!contains(bound, v->name)) out.insert(v->name);
    } else if (const auto* l = t->as<Lam>()) {
        collectFree(l->domain, bound, out);
        under(l->binder, l->body);
    } else if (const auto* p = t->as<Pi>()) {
        collectFree(p->domain, bound, out);
        under(p->binder, p->body);
    } else if (const auto* a = t->as<App>()) {
        collectFree(a->fn, bound, out);
        collectFree(a->arg, bound, out);
    } else if (const auto* i = t->as<Ind>()) {
        collectFree(i->arity, bound, out);
        bound.push_back(i->name);
        for (const auto& c : i->ctors) collectFree(c.type, bound, out);
        bound.pop_back();
    } else if (const auto* c = t->as<Constr>()) {
        collectFree(c->inductive, bound, out);
    } else if (const auto* m = t->as<Match>()) {
        collectFree(m->carrier, bound, out);
        collectFree(m->scrutinee, bound, out);
        for (const auto& b : m->branches) collectFree(b.body, bound, out);
    } else if (const auto* f = t->as<Fix>()) {
        collectFree(f->signature, bound, out);
        under(f->name, f->body);
    }
}

void maxTag(const TermPtr& t, const std::string& text, std::uint32_t& best) {
    auto see = [&](const Name& n) {
        if (n.text == text) best = std::max(best, n.tag);
    };
    if (const auto* v = t->as<Var>()) {
        see(v->name);
    } else if (const auto* l = t->as<Lam>()) {
        see(l->binder);
        maxTag(l->domain, text, best);
        maxTag(l->body, text, best);
    } else if (const auto* p = t->as<Pi>()) {
        see(p->binder);
        maxTag(p->domain, text, best);
        maxTag(p->body, text, best);
    } else if (const auto* a = t->as<App>()) {
        maxTag(a->fn, text, best);
        maxTag(a->arg, text, best);
    } else if (const auto* i = t->as<Ind>()) {
        see(i->name);
        maxTag(i->arity, text, best);
        for (const auto& c : i->ctors) maxTag(c.type, text, best);
    } else if (const auto* c = t->as<Constr>()) {
        maxTag(c->inductive, text, best);
    } else if (const auto* m = t->as<Match>()) {
        maxTag(m->carrier, text, best);
        maxTag(m->scrutinee, text, best);
        for (const auto& b : m->branches) maxTag(b.body, text, best);
    } else if (const auto* f = t->as<Fix>()) {
        see(f->name);
        maxTag(f->signature, text, best);
        maxTag(f->body, text, best);
    }
}

class Substituter {
public:
    Substituter(const Name& x, const TermPtr& s) : x_(x), s_(s), fvS_(freeVars(s)) {}

    TermPtr go(const TermPtr& t) {
        if (const auto* v = t->as<Var>()) return v->name == x_ ? s_ : t;
        if (const auto* l = t->as<Lam>()) {
            auto dom = go(l->domain);
            auto [b, body] = under(l->binder, l->body);
            if (dom == l->domain && body == l->body && b == l->binder) return t;
            return mk::lam(b, dom, body, t->span());
        }
        if (const auto* p = t->as<Pi>()) {
            auto dom = go(p->domain);
            auto [b, body] = under(p->binder, p->body);
            if (dom == p->domain && body == p->body && b == p->binder) return t;
            return mk::pi(b, dom, body, t->span());
        }
        if (const auto* a = t->as<App>()) {
            auto fn = go(a->fn);
            auto arg = go(a->arg);
            if (fn == a->fn && arg == a->arg) return t;
            return mk::app(fn, arg, t->span());
        }
        if (const auto* i = t->as<Ind>()) {
            auto arity = go(i->arity);
            Name self = i->name;
            std::vector<CtorDecl> ctors = i->ctors;
            bool changed = arity != i->arity;
            if (self != x_) {
                bool needed = std::any_of(ctors.begin(), ctors.end(),
                                          [&](const CtorDecl& c) { return occursFree(x_, c.type); });
                if (needed && fvS_.count(self)) {
                    std::uint32_t best = 0;
                    maxTag(s_, self.text, best);
                    for (const auto& c : ctors) maxTag(c.type, self.text, best);
                    Name renamed{self.text, best + 1};
                    auto rv = mk::var(renamed);
                    for (auto& c : ctors) c.type = subst(self, rv, c.type);
                    self = renamed;
                    changed = true;
                }
                if (needed) {
                    for (auto& c : ctors) {
                        auto nt = go(c.type);
                        changed = changed || nt != c.type;
                        c.type = nt;
                    }
                }
            }
            if (!changed) return t;
            return mk::ind(self, arity, std::move(ctors), t->span());
        }
        if (const auto* c = t->as<Constr>()) {
            auto ind = go(c->inductive);
            if (ind == c->inductive) return t;
            return mk::constr(c->index, ind, t->span());
        }
        if (const auto* m = t->as<Match>()) {
            auto carrier = go(m->carrier);
            auto scrut = go(m->scrutinee);
            bool changed = carrier != m->carrier || scrut != m->scrutinee;
            std::vector<Branch> branches = m->branches;
            for (auto& b : branches) {
                auto nb = go(b.body);
                changed = changed || nb != b.body;
                b.body = nb;
            }
            if (!changed) return t;
            return mk::match(carrier, scrut, std::move(branches), t->span());
        }
        if (const auto* f = t->as<Fix>()) {
            auto sig = go(f->signature);
            auto [b, body] = under(f->name, f->body);
            if (sig == f->signature && body == f->body && b == f->name) return t;
            return mk::fix(b, f->decArg, sig, body, t->span());
        }
        return t; // Universe
    }

private:
    std::pair<Name, TermPtr> under(const Name& y, const TermPtr& body) {
        if (y == x_ || !occursFree(x_, body)) return {y, body};
        if (fvS_.count(y)) {
            Name fresh = freshName(y, {s_, body});
            auto renamed = subst(y, mk::var(fresh), body);
            return {fresh, go(renamed)};
        }
        return {y, go(body)};
    }

    const Name& x_;
    const TermPtr& s_;
    NameSet fvS_;
};

class Alpha {
public:
    bool eq(const TermPtr& a, const TermPtr& b) { return compare(a, b, false); }
    bool leq(const TermPtr& a, const TermPtr& b) { return compare(a, b, true); }

private:
    static long indexOf(const std::vector<Name>& v, const Name& n) {
        for (long i = static_cast<long>(v.size()) - 1; i >= 0; --i)
            if (v[static_cast<std::size_t>(i)] == n) return i;
        return -1;
    }

    void push(const Name& a, const Name& b) {
        left_.push_back(a);
        right_.push_back(b);
        if (a != b) ++mismatches_;
    }
    void pop() {
        if (left_.back() != right_.back()) --mismatches_;
        left_.pop_back();
        right_.pop_back();
    }

    bool binder(const Name& x, const TermPtr& a, const Name& y, const TermPtr& b, bool cumulative) {
        push(x, y);
        bool r = compare(a, b, cumulative);
        pop();
        return r;
    }

    bool compare(const TermPtr& a, const TermPtr& b, bool cumulative) {
        if (a == b && mismatches_ == 0) return true;
        if (a->node().index() != b->node().index()) return false;
        if (const auto* va = a->as<Var>()) {
            const auto& vb = *b->as<Var>();
            long ia = indexOf(left_, va->name), ib = indexOf(right_, vb.name);
            if (ia != ib) return false;
            return ia >= 0 || va->name == vb.name;
        }
        if (const auto* ua = a->as<Universe>()) {
            auto lb = b->as<Universe>()->level;
            return cumulative ? ua->level <= lb : ua->level == lb;
        }
        if (const auto* la = a->as<Lam>()) {
            const auto& lb = *b->as<Lam>();
            return compare(la->domain, lb.domain, false) && binder(la->binder, la->body, lb.binder, lb.body, false);
        }
        if (const auto* pa = a->as<Pi>()) {
            const auto& pb = *b->as<Pi>();
            return compare(pa->domain, pb.domain, false) &&
                   binder(pa->binder, pa->body, pb.binder, pb.body, cumulative);
        }
        if (const auto* aa = a->as<App>()) {
            const auto& ab = *b->as<App>();
            return compare(aa->fn, ab.fn, false) && compare(aa->arg, ab.arg, false);
        }
        if (const auto* ia = a->as<Ind>()) {
            const auto& ib = *b->as<Ind>();
            if (ia->name != ib.name || ia->ctors.size() != ib.ctors.size()) return false;
            if (!compare(ia->arity, ib.arity, false)) return false;
            push(ia->name, ib.name);
            bool ok = true;
            for (std::size_t i = 0; ok && i < ia->ctors.size(); ++i)
                ok = ia->ctors[i].name == ib.ctors[i].name && compare(ia->ctors[i].type, ib.ctors[i].type, false);
            pop();
            return ok;
        }
        if (const auto* ca = a->as<Constr>()) {
            const auto& cb = *b->as<Constr>();
            return ca->index == cb.index && compare(ca->inductive, cb.inductive, false);
        }
        if (const auto* ma = a->as<Match>()) {
            const auto& mb = *b->as<Match>();
            if (ma->branches.size() != mb.branches.size()) return false;
            if (!compare(ma->carrier, mb.carrier, false) || !compare(ma->scrutinee, mb.scrutinee, false))
                return false;
            for (std::size_t i = 0; i < ma->branches.size(); ++i)
                if (ma->branches[i].ctor != mb.branches[i].ctor ||
                    !compare(ma->branches[i].body, mb.branches[i].body, false))
                    return false;
            return true;
        }
        if (const auto* fa = a->as<Fix>()) {
            const auto& fb = *b->as<Fix>();
            return fa->decArg == fb.decArg && compare(fa->signature, fb.signature, false) &&
                   binder(fa->name, fa->body, fb.name, fb.body, false);
        }
        return false;
    }

    std::vector<Name> left_, right_;
    int mismatches_ = 0;
};

enum class Pos { Top, Arg, ArrowLeft, Domain };

class Printer {
public:
    std::string run(const TermPtr& t) {
        print(t, Pos::Top);
        return out_.str();
    }

private:
    void print(const TermPtr& t, Pos pos) {
        if (const auto* v = t->as<Var>()) {
            out_ << v->name.str();
        } else if (const auto* u = t->as<Universe>()) {
            if (u->level == 0)
                out_ << "Set";
            else
                out_ << "(Type " << u->level << ")";
        } else if (const auto* l = t->as<Lam>()) {
            binder("λ", l->binder, l->domain, l->body, pos);
        } else if (const auto* p = t->as<Pi>()) {
            if (p->binder.generated() && !occursFree(p->binder, p->body)) {
                bool paren = pos != Pos::Top;
                if (paren) out_ << '(';
                print(p->domain, Pos::ArrowLeft);
                out_ << " -> ";
                print(p->body, Pos::Top);
                if (paren) out_ << ')';
            } else {
                binder("Π", p->binder, p->domain, p->body, pos);
            }
        } else if (t->is<App>()) {
            auto s = spine(t);
            out_ << '(';
            print(s.head, Pos::Arg);
            for (const auto& a : s.args) {
                out_ << ' ';
                print(a, Pos::Arg);
            }
            out_ << ')';
        } else if (const auto* i = t->as<Ind>()) {
            out_ << i->name.str();
        } else if (const auto* c = t->as<Constr>()) {
            const auto* ind = c->inductive->as<Ind>();
            if (ind && c->index >= 1 && c->index <= ind->ctors.size()) {
                out_ << ind->ctors[c->index - 1].name.str();
            } else {
                out_ << "Constr(";
                print(c->inductive, Pos::Top);
                out_ << ", " << c->index << ')';
            }
        } else if (const auto* m = t->as<Match>()) {
            bool paren = pos != Pos::Top;
            if (paren) out_ << '(';
            out_ << '<';
            print(m->carrier, Pos::Top);
            out_ << "> match ";
            print(m->scrutinee, Pos::Top);
            out_ << " with { ";
            for (std::size_t i = 0; i < m->branches.size(); ++i) {
                if (i) out_ << "; ";
                out_ << m->branches[i].ctor.str() << " => ";
                print(m->branches[i].body, Pos::Top);
            }
            out_ << (m->branches.empty() ? "}" : " }");
            if (paren) out_ << ')';
        } else if (const auto* f = t->as<Fix>()) {
            out_ << "(Fix_" << f->decArg << ' ' << f->name.str() << " : ";
            print(f->signature, Pos::Top);
            out_ << " { ";
            print(f->body, Pos::Top);
            out_ << " })";
        }
    }

    void binder(const char* sym, const Name& x, const TermPtr& dom, const TermPtr& body, Pos pos) {
        bool paren = pos != Pos::Top;
        if (paren) out_ << '(';
        out_ << sym << x.str() << ':';
        print(dom, Pos::Domain);
        out_ << '.';
        print(body, Pos::Top);
        if (paren) out_ << ')';
    }

    std::ostringstream out_;
};

} // namespace

NameSet freeVars(const TermPtr& t) {
    NameSet out;
    std::vector<Name> bound;
    collectFree(t, bound, out);
    return out;
}

bool occursFree(const Name& x, const TermPtr& t) {
    if (const auto* v = t->as<Var>()) return v->name == x;
    if (const auto* l = t->as<Lam>()) return occursFree(x, l->domain) || (l->binder != x && occursFree(x, l->body));
    if (const auto* p = t->as<Pi>()) return occursFree(x, p->domain) || (p->binder != x && occursFree(x, p->body));
    if (const auto* a = t->as<App>()) return occursFree(x, a->fn) || occursFree(x, a->arg);
    if (const auto* i = t->as<Ind>()) {
        if (occursFree(x, i->arity)) return true;
        if (i->name == x) return false;
        return std::any_of(i->ctors.begin(), i->ctors.end(), [&](const CtorDecl& c) { return occursFree(x, c.type); });
    }
    if (const auto* c = t->as<Constr>()) return occursFree(x, c->inductive);
    if (const auto* m = t->as<Match>()) {
        return occursFree(x, m->carrier) || occursFree(x, m->scrutinee) ||
               std::any_of(m->branches.begin(), m->branches.end(),
                           [&](const Branch& b) { return occursFree(x, b.body); });
    }
    if (const auto* f = t->as<Fix>()) return occursFree(x, f->signature) || (f->name != x && occursFree(x, f->body));
    return false;
}

Name freshName(const Name& base, std::initializer_list<TermPtr> avoid) {
    std::uint32_t best = base.tag;
    for (const auto& t : avoid)
        if (t) maxTag(t, base.text, best);
    return Name{base.text, best + 1};
}

TermPtr subst(const Name& x, const TermPtr& s, const TermPtr& t) {
    if (!occursFree(x, t)) return t;
    Substituter sub(x, s);
    return sub.go(t);
}

bool alphaEq(const TermPtr& a, const TermPtr& b) { return Alpha{}.eq(a, b); }

bool alphaLeq(const TermPtr& a, const TermPtr& b) { return Alpha{}.leq(a, b); }

std::string prettyPrint(const TermPtr& t) { return Printer{}.run(t); }

} // namespace pie
