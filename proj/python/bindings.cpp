#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pie/driver.hpp"
#include "pie/normalize.hpp"
#include "pie/parser.hpp"
#include "pie/syntax.hpp"
#include "pie/typecheck.hpp"

namespace py = pybind11;
using namespace pie;

namespace {

py::dict diagnosticDict(const Diagnostic& d) {
    py::dict out;
    out["rule"] = std::string(ruleTag(d.rule));
    out["message"] = d.message;
    out["line"] = d.span.startLine;
    out["column"] = d.span.startCol;
    out["expected"] = d.expected ? py::cast(prettyPrint(d.expected)) : py::none();
    out["actual"] = d.actual ? py::cast(prettyPrint(d.actual)) : py::none();
    out["warning"] = d.severity == Severity::Warning;
    return out;
}

py::dict reportDict(const CheckReport& r, const CheckOptions& o) {
    py::list decls, diags, warnings;
    for (const auto& d : r.decls) {
        py::dict e;
        e["name"] = d.name;
        e["type"] = d.ok ? py::cast(d.type) : py::none();
        e["ok"] = d.ok;
        decls.append(e);
    }
    for (const auto& d : r.diagnostics) diags.append(diagnosticDict(d));
    for (const auto& d : r.warnings) warnings.append(diagnosticDict(d));
    py::dict out;
    out["file"] = r.file;
    out["ok"] = r.exitCode == 0;
    out["exit_code"] = r.exitCode;
    out["decls"] = decls;
    out["diagnostics"] = diags;
    out["warnings"] = warnings;
    out["normalized"] = r.normalized ? py::cast(*r.normalized) : py::none();
    out["text"] = formatReport(r, o);
    return out;
}

CheckOptions options(bool prelude, std::optional<std::string> normalize, std::size_t budget) {
    CheckOptions o;
    o.prelude = prelude;
    o.dumpTypes = true;
    o.normalizeName = std::move(normalize);
    o.budget = budget;
    return o;
}

// Elaborates `source` and returns the context for term-level helpers.
Context contextOf(const std::string& source) {
    auto el = elaborate(withPrelude(parseProgram(source)), {}, prelude().decls.size());
    if (!el.ok()) throw KernelError(el.diagnostics.front());
    return el.context;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dependently typed kernel with inductive types and structural recursion.";

    static py::exception<KernelError> kernelError(m, "KernelError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const KernelError& e) {
            const auto& d = e.diagnostic();
            std::string msg = std::string(ruleTag(d.rule)) + ": " + d.message;
            py::object exc = py::reinterpret_borrow<py::object>(kernelError.ptr())(msg);
            exc.attr("rule") = std::string(ruleTag(d.rule));
            PyErr_SetObject(kernelError.ptr(), exc.ptr());
        }
    });

    m.def(
        "check_source",
        [](const std::string& source, const std::string& file, bool prelude, std::optional<std::string> normalize,
           std::size_t budget) {
            auto o = options(prelude, std::move(normalize), budget);
            return reportDict(checkSource(source, file, o), o);
        },
        py::arg("source"), py::arg("file") = "<input>", py::arg("prelude") = true, py::arg("normalize") = py::none(),
        py::arg("budget") = 100'000, "Parse and check a program; returns a report dict.");

    m.def(
        "check_files",
        [](const std::vector<std::string>& paths, bool prelude, std::optional<std::string> normalize,
           std::size_t budget) {
            auto o = options(prelude, std::move(normalize), budget);
            py::list out;
            for (const auto& r : runCheck(paths, o)) out.append(reportDict(r, o));
            return out;
        },
        py::arg("paths"), py::arg("prelude") = true, py::arg("normalize") = py::none(), py::arg("budget") = 100'000);

    m.def(
        "normalize",
        [](const std::string& term, const std::string& program) {
            auto ctx = contextOf(program);
            return prettyPrint(normalise(parseTerm(term), ctx));
        },
        py::arg("term"), py::arg("program") = "", "Normal form of `term` under the declarations of `program`.");

    m.def(
        "type_of",
        [](const std::string& term, const std::string& program) {
            auto ctx = contextOf(program);
            return prettyPrint(normalise(typeCheck(ctx, parseTerm(term)), ctx));
        },
        py::arg("term"), py::arg("program") = "");

    m.def(
        "equal",
        [](const std::string& a, const std::string& b, const std::string& program) {
            return checkEqual(parseTerm(a), parseTerm(b), contextOf(program));
        },
        py::arg("a"), py::arg("b"), py::arg("program") = "", "Definitional equality.");

    m.def(
        "alpha_eq", [](const std::string& a, const std::string& b) { return alphaEq(parseTerm(a), parseTerm(b)); },
        py::arg("a"), py::arg("b"));

    m.def(
        "pretty", [](const std::string& term) { return prettyPrint(parseTerm(term)); }, py::arg("term"));
}
