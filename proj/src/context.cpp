#include "pie/context.hpp"

namespace pie {

Context::Context(KernelOptions options) : options_(std::make_shared<const KernelOptions>(options)) {}

Context Context::push(Binding b) const {
    Context c = *this;
    c.head_ = std::make_shared<const Node>(Node{std::move(b), head_});
    ++c.size_;
    return c;
}

Context Context::extendType(Name x, TermPtr type, Scope scope) const {
    return push(Binding{std::move(x), std::move(type), nullptr, scope});
}

Context Context::extendTypeValue(Name x, TermPtr type, TermPtr value) const {
    return push(Binding{std::move(x), std::move(type), std::move(value), Scope::Global});
}

TermPtr Context::lookupType(const Name& x) const {
    for (const Node* n = head_.get(); n; n = n->next.get())
        if (n->binding.name == x) return n->binding.type;
    return nullptr;
}

TermPtr Context::lookupVal(const Name& x) const {
    for (const Node* n = head_.get(); n; n = n->next.get())
        if (n->binding.name == x) return n->binding.value;
    return nullptr;
}

bool Context::isGlobal(const Name& x) const {
    for (const Node* n = head_.get(); n; n = n->next.get())
        if (n->binding.name == x) return n->binding.scope == Scope::Global;
    return false;
}

bool Context::isRegisteredInductive(const Term* ind) const {
    for (const Node* n = head_.get(); n; n = n->next.get())
        if (n->binding.value.get() == ind) return true;
    return false;
}

Context Context::withOptions(KernelOptions options) const {
    Context c = *this;
    c.options_ = std::make_shared<const KernelOptions>(options);
    return c;
}

std::vector<Binding> Context::bindings() const {
    std::vector<Binding> out(size_);
    std::size_t i = size_;
    for (const Node* n = head_.get(); n; n = n->next.get()) out[--i] = n->binding;
    return out;
}

} // namespace pie
