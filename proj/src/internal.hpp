#pragma once

#include <utility>

#include "pie/context.hpp"
#include "pie/diagnostic.hpp"
#include "pie/term.hpp"

namespace pie::detail {

/// Renames `binder` when it would shadow a global name, so that unfolding a
/// global definition underneath it cannot be captured.
std::pair<Name, TermPtr> avoidGlobal(const Context& ctx, const Name& binder, const TermPtr& body);

/// Fills in the span of a diagnostic that does not have one yet.
inline KernelError located(KernelError e, const SourceSpan& span) {
    if (e.diagnostic().span.empty()) e.diagnostic().span = span;
    return e;
}

} // namespace pie::detail
