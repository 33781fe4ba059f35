#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "pie/term.hpp"

namespace pie {

/// Limits applied to every normalisation run under a context.
struct KernelOptions {
    /// Maximum number of reduction steps (beta, delta, match, fix unfoldings)
    /// per call to normalise.
    std::size_t stepBudget = 100'000;
    /// Maximum recursion depth of the normaliser.
    std::size_t depthLimit = 4'000;
};

enum class Scope { Local, Global };

struct Binding {
    Name name;
    TermPtr type;
    TermPtr value; // null for axioms and local binders
    Scope scope = Scope::Local;
};

/// Persistent typing environment: an ordered list of bindings, innermost last.
/// Extending returns a new context and never touches the original, so
/// contexts can be shared between sibling branches of a derivation.
class Context {
public:
    Context() : Context(KernelOptions{}) {}
    explicit Context(KernelOptions options);

    Context extendType(Name x, TermPtr type, Scope scope = Scope::Local) const;
    /// Value bindings are always top-level (defs and inductive registrations).
    Context extendTypeValue(Name x, TermPtr type, TermPtr value) const;

    /// Innermost type bound to `x`, or null.
    TermPtr lookupType(const Name& x) const;
    /// Value of the innermost binding of `x`, or null when that binding has
    /// no value (or `x` is unbound).
    TermPtr lookupVal(const Name& x) const;

    bool isGlobal(const Name& x) const;
    /// True when `ind` is the very node registered by an Inductive declaration.
    bool isRegisteredInductive(const Term* ind) const;

    const KernelOptions& options() const { return *options_; }
    Context withOptions(KernelOptions options) const;

    /// Bindings outermost first.
    std::vector<Binding> bindings() const;
    std::size_t size() const { return size_; }

private:
    struct Node {
        Binding binding;
        std::shared_ptr<const Node> next;
    };

    Context push(Binding b) const;

    std::shared_ptr<const Node> head_;
    std::shared_ptr<const KernelOptions> options_;
    std::size_t size_ = 0;
};

} // namespace pie
