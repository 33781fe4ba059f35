#pragma once

#include <vector>

#include "pie/context.hpp"
#include "pie/diagnostic.hpp"
#include "pie/parser.hpp"

namespace pie {

/// Infers the type of `e` in `ctx`. Throws KernelError tagged with the rule
/// whose premise failed.
TermPtr typeCheck(const Context& ctx, const TermPtr& e);

/// Returns the level of the universe `t` lives in; throws `rule` when the
/// type of `t` does not normalise to a universe.
std::uint32_t universeOf(const Context& ctx, const TermPtr& t, Rule rule, std::string_view what);

struct DeclResult {
    Name name;
    TermPtr type; // null when the declaration failed
    bool ok = false;
    bool fromPrelude = false;
};

struct Elaboration {
    Context context;
    std::vector<DeclResult> decls;
    std::vector<Diagnostic> diagnostics;
    std::vector<Diagnostic> warnings;

    bool ok() const { return diagnostics.empty(); }
};

/// Checks the declarations of `p` in order. A failing declaration yields one
/// diagnostic and is skipped; later declarations see only the successful
/// ones. `preludeCount` leading declarations are flagged as prelude.
Elaboration elaborate(const Program& p, KernelOptions options = {}, std::size_t preludeCount = 0);

} // namespace pie
