#include "pie/driver.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pie/normalize.hpp"
#include "pie/parser.hpp"
#include "pie/syntax.hpp"
#include "pie/typecheck.hpp"

namespace pie {

namespace fs = std::filesystem;

CheckReport checkSource(const std::string& source, const std::string& file, const CheckOptions& options) {
    CheckReport report;
    report.file = file;
    Program program;
    try {
        program = parseProgram(source, file);
    } catch (const KernelError& e) {
        report.diagnostics.push_back(e.diagnostic());
        report.exitCode = 1;
        return report;
    }
    std::size_t preludeCount = 0;
    if (options.prelude) {
        preludeCount = prelude().decls.size();
        program = withPrelude(program);
    }
    KernelOptions kopts;
    kopts.stepBudget = options.budget;
    auto el = elaborate(program, kopts, preludeCount);

    for (const auto& d : el.decls) {
        if (d.fromPrelude) continue;
        report.decls.push_back({d.name.str(), d.ok ? prettyPrint(d.type) : std::string{}, d.ok});
    }
    report.diagnostics = std::move(el.diagnostics);
    report.warnings = std::move(el.warnings);

    if (options.normalizeName) {
        Name n{*options.normalizeName};
        if (!el.context.lookupType(n)) {
            report.diagnostics.push_back(
                {Rule::TVar, "no checked declaration named `" + n.str() + "` to normalise", {}, nullptr, nullptr});
        } else {
            try {
                auto v = el.context.lookupVal(n);
                report.normalized = prettyPrint(normalise(v ? v : mk::var(n), el.context));
            } catch (const KernelError& e) {
                report.diagnostics.push_back(e.diagnostic());
            }
        }
    }
    report.exitCode = report.diagnostics.empty() ? 0 : 1;
    return report;
}

std::vector<CheckReport> runCheck(const std::vector<std::string>& paths, const CheckOptions& options) {
    std::vector<CheckReport> out;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            CheckReport r;
            r.file = path;
            r.diagnostics.push_back({Rule::Parse, "cannot read file", {}, nullptr, nullptr});
            r.exitCode = 1;
            out.push_back(std::move(r));
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        out.push_back(checkSource(buf.str(), path, options));
    }
    return out;
}

std::string formatDiagnostic(const Diagnostic& d, const std::string& file) {
    std::ostringstream o;
    o << (d.severity == Severity::Warning ? "warning[" : "error[") << ruleTag(d.rule) << "] " << file;
    if (!d.span.empty()) o << ':' << d.span.startLine << ':' << d.span.startCol;
    o << ": " << d.message << '\n';
    if (d.expected) o << "  expected: " << prettyPrint(d.expected) << '\n';
    if (d.actual) o << "  actual:   " << prettyPrint(d.actual) << '\n';
    return o.str();
}

std::string formatReport(const CheckReport& report, const CheckOptions& options) {
    std::ostringstream o;
    if (options.dumpTypes)
        for (const auto& d : report.decls) o << d.name << " : " << (d.ok ? d.type : "<failed>") << '\n';
    if (report.normalized && options.normalizeName) o << *options.normalizeName << " ⇓ " << *report.normalized << '\n';
    for (const auto& w : report.warnings) o << formatDiagnostic(w, report.file);
    for (const auto& d : report.diagnostics) o << formatDiagnostic(d, report.file);
    if (report.diagnostics.empty())
        o << report.file << ": ok, " << report.decls.size() << " declarations\n";
    else
        o << report.file << ": " << report.diagnostics.size() << " error(s)\n";
    return o.str();
}

std::optional<Rule> parseRuleTag(std::string_view tag) {
    for (auto r : {Rule::TVar, Rule::TAbs, Rule::TPi, Rule::TUniv, Rule::TApp, Rule::TInd, Rule::TConstr, Rule::TMatch,
                   Rule::TFix, Rule::Guard, Rule::Parse, Rule::Budget})
        if (ruleTag(r) == tag) return r;
    return std::nullopt;
}

namespace {

std::vector<fs::path> pieFiles(const fs::path& dir) {
    std::vector<fs::path> out;
    if (!fs::is_directory(dir)) return out;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".pie") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<CorpusEntry> loadCorpus(const fs::path& root) {
    std::vector<CorpusEntry> out;
    for (const auto& p : pieFiles(root)) out.push_back({p, true, std::nullopt});
    for (const auto& p : pieFiles(root / "negative")) {
        std::ifstream in(p);
        std::string first;
        std::getline(in, first);
        std::optional<Rule> rule;
        constexpr std::string_view prefix = "-- expect:";
        if (first.rfind(prefix, 0) == 0) {
            std::string tag = first.substr(prefix.size());
            tag.erase(0, tag.find_first_not_of(" \t"));
            tag.erase(tag.find_last_not_of(" \t\r") + 1);
            rule = parseRuleTag(tag);
        }
        out.push_back({p, false, rule});
    }
    return out;
}

} // namespace pie
