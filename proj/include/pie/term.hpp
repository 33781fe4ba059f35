#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "pie/name.hpp"

namespace pie {

/// 1-based line/column range in a source file. All zeros means "no location".
struct SourceSpan {
    std::uint32_t startLine = 0;
    std::uint32_t startCol = 0;
    std::uint32_t endLine = 0;
    std::uint32_t endCol = 0;

    bool empty() const { return startLine == 0; }
    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
    Name name;
};

struct Universe {
    std::uint32_t level;
};

struct Lam {
    Name binder;
    TermPtr domain;
    TermPtr body;
};

struct Pi {
    Name binder;
    TermPtr domain;
    TermPtr body;
};

struct App {
    TermPtr fn;
    TermPtr arg;
};

struct CtorDecl {
    Name name;
    TermPtr type;
};

/// Inductive definition. `name` is bound inside the constructor types.
struct Ind {
    Name name;
    TermPtr arity;
    std::vector<CtorDecl> ctors;
};

/// The `index`-th constructor (1-based) of `inductive`.
struct Constr {
    std::size_t index;
    TermPtr inductive;
};

struct Branch {
    Name ctor;
    TermPtr body;
};

/// Dependent case analysis. `carrier` is the return type family.
struct Match {
    TermPtr carrier;
    TermPtr scrutinee;
    std::vector<Branch> branches;
};

/// Recursive function. `name` is bound in `body`; `decArg` is the 0-based
/// position of the structurally decreasing λ-formal.
struct Fix {
    Name name;
    std::size_t decArg;
    TermPtr signature;
    TermPtr body;
};

/// Immutable expression node. Shared freely via TermPtr.
class Term {
public:
    using Node = std::variant<Var, Universe, Lam, Pi, App, Ind, Constr, Match, Fix>;

    explicit Term(Node node, SourceSpan span = {}) : node_(std::move(node)), span_(span) {}

    const Node& node() const { return node_; }
    const SourceSpan& span() const { return span_; }

    template <class T>
    const T* as() const {
        return std::get_if<T>(&node_);
    }
    template <class T>
    bool is() const {
        return std::holds_alternative<T>(node_);
    }

private:
    Node node_;
    SourceSpan span_;
};

namespace mk {

TermPtr var(Name name, SourceSpan span = {});
TermPtr universe(std::uint32_t level, SourceSpan span = {});
TermPtr lam(Name binder, TermPtr domain, TermPtr body, SourceSpan span = {});
TermPtr pi(Name binder, TermPtr domain, TermPtr body, SourceSpan span = {});
TermPtr app(TermPtr fn, TermPtr arg, SourceSpan span = {});
TermPtr apps(TermPtr fn, std::span<const TermPtr> args, SourceSpan span = {});
TermPtr ind(Name name, TermPtr arity, std::vector<CtorDecl> ctors, SourceSpan span = {});
TermPtr constr(std::size_t index, TermPtr inductive, SourceSpan span = {});
TermPtr match(TermPtr carrier, TermPtr scrutinee, std::vector<Branch> branches, SourceSpan span = {});
TermPtr fix(Name name, std::size_t decArg, TermPtr signature, TermPtr body, SourceSpan span = {});

inline TermPtr apps(TermPtr fn, std::initializer_list<TermPtr> args, SourceSpan span = {}) {
    return apps(std::move(fn), std::span<const TermPtr>(args.begin(), args.size()), span);
}

} // namespace mk

/// Head and arguments of a left-nested application `(h a1 ... an)`.
struct Spine {
    TermPtr head;
    std::vector<TermPtr> args;
};

Spine spine(const TermPtr& t);

} // namespace pie
