#pragma once

#include <initializer_list>
#include <set>
#include <string>

#include "pie/term.hpp"

namespace pie {

using NameSet = std::set<Name>;

/// Names with a free occurrence in `t`. Lam/Pi/Fix binders scope over the
/// body only; an Ind name scopes over its constructor types.
NameSet freeVars(const TermPtr& t);

bool occursFree(const Name& x, const TermPtr& t);

/// A name with the text of `base` that occurs nowhere (free or bound) in
/// any of `avoid`.
Name freshName(const Name& base, std::initializer_list<TermPtr> avoid);

/// Capture-avoiding substitution [x := s] t. Binders that would capture a
/// free variable of `s` are renamed to a fresh name first. Subterms that do
/// not change are shared with the input.
TermPtr subst(const Name& x, const TermPtr& s, const TermPtr& t);

/// Equality up to consistent renaming of bound names.
bool alphaEq(const TermPtr& a, const TermPtr& b);

/// Like alphaEq, but a universe in covariant position (the codomain chain
/// of Π types) may be lower on the left: `Type i <= Type j` when i <= j.
bool alphaLeq(const TermPtr& a, const TermPtr& b);

/// Surface rendering. Level 0 prints as `Set`; applications are always
/// parenthesised; Π types whose generated binder is unused print as arrows.
/// Inductive and constructor nodes print by name.
std::string prettyPrint(const TermPtr& t);

} // namespace pie
