#pragma once

#include "pie/context.hpp"
#include "pie/term.hpp"

namespace pie {

/// Big-step normalisation.
///
/// - Applications reduce their head first; a λ head is applied to the
///   normalised argument, anything else yields a neutral application.
/// - Binder domains and bodies are normalised, bodies under the binder.
/// - Variables bound to a non-recursive value are unfolded.
/// - A match on a constructor-headed scrutinee selects its branch and applies
///   it to the constructor's arguments; otherwise only the scrutinee is
///   normalised.
/// - A recursive function (a Fix node, or a variable bound to one) unfolds
///   only when applied to at least k+1 arguments and argument k is
///   constructor-headed.
///
/// Throws KernelError(Budget) when the context's step budget or depth limit
/// is exhausted.
TermPtr normalise(const TermPtr& e, const Context& ctx);

/// Definitional equality: alphaEq of both normal forms.
bool checkEqual(const TermPtr& a, const TermPtr& b, const Context& ctx);

/// Cumulative variant of checkEqual used where a term of type `actual` is
/// placed where `expected` is required.
bool subsumes(const TermPtr& actual, const TermPtr& expected, const Context& ctx);

/// True when the head of `t`'s application spine is a Constr node.
bool constructorHeaded(const TermPtr& t);

} // namespace pie
