#include "pie/parser.hpp"
#include "pie/syntax.hpp"
#include "pie/termination.hpp"

namespace pie {

DesugaredDef desugarDef(const DefDecl& d) {
    TermPtr type = d.resultType;
    TermPtr value = d.body;
    for (auto it = d.params.rbegin(); it != d.params.rend(); ++it) {
        type = mk::pi(it->name, it->type, type, d.span);
        value = mk::lam(it->name, it->type, value, d.span);
    }
    if (occursFree(d.name, value)) {
        std::size_t k = inferFixIndex(d.name, type, value);
        value = mk::fix(d.name, k, type, value, d.span);
    }
    return {d.name, type, value};
}

} // namespace pie
