#pragma once

#include <exception>
#include <string>
#include <string_view>

#include "pie/term.hpp"

namespace pie {

/// The judgment (or pipeline stage) a diagnostic is attributed to.
enum class Rule {
    TVar,
    TAbs,
    TPi,
    TUniv,
    TApp,
    TInd,
    TConstr,
    TMatch,
    TFix,
    Guard,
    Parse,
    Budget,
};

std::string_view ruleTag(Rule rule);

enum class Severity { Error, Warning };

struct Diagnostic {
    Rule rule = Rule::Parse;
    std::string message;
    SourceSpan span;
    TermPtr expected;
    TermPtr actual;
    Severity severity = Severity::Error;
};

/// Thrown by every kernel operation that can reject its input.
class KernelError : public std::exception {
public:
    explicit KernelError(Diagnostic d) : diag_(std::move(d)) {}
    KernelError(Rule rule, std::string message, SourceSpan span = {}, TermPtr expected = nullptr,
                TermPtr actual = nullptr)
        : diag_{rule, std::move(message), span, std::move(expected), std::move(actual)} {}

    const char* what() const noexcept override { return diag_.message.c_str(); }
    const Diagnostic& diagnostic() const { return diag_; }
    Diagnostic& diagnostic() { return diag_; }
    Rule rule() const { return diag_.rule; }

private:
    Diagnostic diag_;
};

} // namespace pie
