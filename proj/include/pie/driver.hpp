#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pie/diagnostic.hpp"

namespace pie {

struct CheckOptions {
    bool prelude = true;
    bool dumpTypes = false;
    std::optional<std::string> normalizeName;
    std::size_t budget = 100'000;
};

struct DeclReport {
    std::string name;
    std::string type; // pretty-printed checked type; empty when failed
    bool ok = false;
};

struct CheckReport {
    std::string file;
    std::vector<DeclReport> decls;
    std::vector<Diagnostic> diagnostics;
    std::vector<Diagnostic> warnings;
    std::optional<std::string> normalized; // rendering of --normalize NAME
    int exitCode = 0;
};

/// Parses and elaborates one source text.
CheckReport checkSource(const std::string& source, const std::string& file, const CheckOptions& options);

/// Checks each file independently; reports are in input order.
std::vector<CheckReport> runCheck(const std::vector<std::string>& paths, const CheckOptions& options);

/// Stable line-oriented rendering:
///   NAME : TYPE                           (with dumpTypes)
///   NAME ⇓ TERM                           (with normalizeName)
///   error[RULE] file:line:col: message
///   warning[RULE] file:line:col: message
std::string formatReport(const CheckReport& report, const CheckOptions& options);

std::string formatDiagnostic(const Diagnostic& d, const std::string& file);

struct CorpusEntry {
    std::filesystem::path path;
    bool expectAccept = true;
    std::optional<Rule> expectedRule; // for negative entries
};

/// Files directly under `root` are expected to check. Files under
/// `root/negative` are expected to fail; their first line reads
/// `-- expect: RULE`.
std::vector<CorpusEntry> loadCorpus(const std::filesystem::path& root);

std::optional<Rule> parseRuleTag(std::string_view tag);

} // namespace pie
