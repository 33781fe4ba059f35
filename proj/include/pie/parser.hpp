#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pie/term.hpp"

namespace pie {

struct AxiomDecl {
    Name name;
    TermPtr type;
    SourceSpan span;
};

struct Param {
    Name name;
    TermPtr type;
};

struct DefDecl {
    Name name;
    std::vector<Param> params;
    TermPtr resultType;
    TermPtr body;
    SourceSpan span;
};

struct InductiveDeclSrc {
    Name name;
    TermPtr arity;
    std::vector<CtorDecl> ctors;
    SourceSpan span;
};

using Decl = std::variant<AxiomDecl, DefDecl, InductiveDeclSrc>;

const Name& declName(const Decl& d);
const SourceSpan& declSpan(const Decl& d);

struct Program {
    std::vector<Decl> decls;
    std::string sourceName;
};

/// Parses a `.pie` file. Throws KernelError(Parse) on the first lexical or
/// grammatical error. Never crashes on malformed input.
Program parseProgram(std::string_view source, std::string sourceName = "<input>");

/// Parses a single expression (the whole input must be consumed).
TermPtr parseTerm(std::string_view source);

/// `Axiom Void : Set; Axiom Null : Void;`
Program prelude();

/// Prelude declarations followed by those of `p`.
Program withPrelude(const Program& p);

struct DesugaredDef {
    Name name;
    TermPtr type;
    TermPtr value;
};

/// Turns `def f(x1:T1, ..., xn:Tn) : R { b }` into the type Πx1:T1...R and
/// the value λx1:T1...b. A def whose name occurs free in its own value is
/// wrapped in a Fix node whose decreasing index is the smallest one that
/// passes the guard check; throws KernelError(Guard) when none does.
DesugaredDef desugarDef(const DefDecl& d);

} // namespace pie
