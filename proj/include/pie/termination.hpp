#pragma once

#include <optional>
#include <set>

#include "pie/context.hpp"
#include "pie/term.hpp"

namespace pie {

/// State of the structural guard predicate.
struct GuardState {
    Name f;                   // the recursive function
    std::size_t k = 0;        // decreasing argument position, 0-based
    std::optional<Name> xk;   // the k-th formal; unset once shadowed
    std::set<Name> guarded;   // variables obtained by deconstructing xk
};

/// The guard predicate. Accepts `e` when every occurrence of `f` is a call
/// whose k-th argument is a guarded variable, where a variable becomes
/// guarded by being bound in a branch of a match on `xk` or on another
/// guarded variable. Any other occurrence of `f` (passed as an argument,
/// returned, partially applied) is rejected. Throws KernelError(Guard).
void guardCheck(const GuardState& state, const TermPtr& e);

/// Runs the guard predicate on a Fix body: strips its leading λ formals and
/// checks the rest with xk = formal k.
void checkGuardedBody(const Name& f, std::size_t k, const TermPtr& body);

/// Smallest k for which the guard predicate accepts `body`. Throws
/// KernelError(Guard) listing the attempted indices when none does.
std::size_t inferFixIndex(const Name& name, const TermPtr& signature, const TermPtr& body);

/// T-Fix. Returns the signature.
TermPtr checkFix(const Name& name, std::size_t k, const TermPtr& signature, const TermPtr& body,
                 const Context& ctx);

} // namespace pie
