#pragma once

#include <vector>

#include "pie/context.hpp"
#include "pie/diagnostic.hpp"
#include "pie/term.hpp"

namespace pie {

/// Derived data of an inductive definition.
struct InductiveDecl {
    TermPtr node;            // the Ind term
    std::size_t paramCount;  // Π binders of the arity before its universe
    TermPtr universe;        // terminal universe of the arity
};

/// Terminal universe of a Π chain. Throws T-Ind when the chain ends in
/// something else.
TermPtr upsilon(const TermPtr& t);

/// Checks that `ctorType` is a well-formed constructor type for `indName`:
/// it ends in `(indName e1 ... en)` with indName not free in any ei, and the
/// domains of dependent Π binders do not mention indName. Domains of
/// non-dependent binders are unrestricted; a non-strictly-positive occurrence
/// there is appended to `warnings` (when given) instead of rejected.
void positiveCheck(const TermPtr& ctorType, const Name& indName, std::vector<Diagnostic>* warnings = nullptr);

/// T-Ind. Returns the arity.
TermPtr checkInductive(const Name& name, const TermPtr& arity, const std::vector<CtorDecl>& ctors,
                       const Context& ctx, std::vector<Diagnostic>* warnings = nullptr);

/// Binds the type name to its Ind node and every constructor to its Constr
/// node, with the self-name in constructor types replaced by the Ind node.
Context registerInductive(const Context& ctx, const TermPtr& indNode);

InductiveDecl inductiveInfo(const TermPtr& indNode, const Context& ctx);

/// T-Constr.
TermPtr checkConstr(std::size_t index, const TermPtr& inductive, const Context& ctx);

/// The S meta-function, unnormalised:
///   S(Πx:A.R, ct, c) = Πx:A.S(R, ct, (c x))
///   S((X e1..en), ct, c) = (ct e1..en c)
TermPtr caseTypeRaw(const TermPtr& ctorType, const TermPtr& carrier, const TermPtr& ctorTerm);

/// caseTypeRaw followed by normalisation in `ctx`.
TermPtr caseType(const TermPtr& ctorType, const TermPtr& carrier, const TermPtr& ctorTerm, const Context& ctx);

/// A carrier written as a Π type is read as the type family with the same
/// binders: its leading `paramCount + 1` Π binders become λ binders.
TermPtr carrierFamily(const TermPtr& carrier, std::size_t paramCount);

/// T-Match.
TermPtr checkMatch(const TermPtr& carrier, const TermPtr& scrutinee, const std::vector<Branch>& branches,
                   const Context& ctx);

} // namespace pie
