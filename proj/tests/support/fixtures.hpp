#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pie/parser.hpp"
#include "pie/typecheck.hpp"

namespace fixtures {

inline std::string corpusPath(const std::string& name) { return std::string(PIE_CORPUS_DIR) + "/" + name; }

inline std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline pie::Elaboration elaborateSource(const std::string& src, pie::KernelOptions opts = {}) {
    auto p = pie::withPrelude(pie::parseProgram(src));
    return pie::elaborate(p, opts, pie::prelude().decls.size());
}

inline pie::Elaboration elaborateCorpus(const std::string& name, pie::KernelOptions opts = {}) {
    return elaborateSource(readFile(corpusPath(name)), opts);
}

/// Extends `ctx` with local binders given as (name, type source) pairs.
inline pie::Context withLocals(pie::Context ctx, const std::vector<std::pair<std::string, std::string>>& locals) {
    for (const auto& [n, t] : locals) ctx = ctx.extendType(pie::Name{n}, pie::parseTerm(t));
    return ctx;
}

inline pie::TermPtr term(const std::string& src) { return pie::parseTerm(src); }

/// Every corpus file expected to check cleanly.
inline const std::vector<std::string>& positiveCorpus() {
    static const std::vector<std::string> files = {
        "fol.pie",        "fol_proof.pie", "peano.pie",      "nat.pie",        "add.pie",        "nat_ind.pie",
        "eq.pie",         "nat_proofs.pie", "printf.pie",    "weekdays_rewrite.pie", "plus_relation.pie",
    };
    return files;
}

} // namespace fixtures
