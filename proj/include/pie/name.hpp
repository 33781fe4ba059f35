#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace pie {

/// A variable name.
///
/// Names written in source carry tag 0. Names produced by the kernel (arrow
/// binders, alpha-renamed binders) carry a positive tag, so they can never
/// collide with a source-level name of the same text.
struct Name {
    std::string text;
    std::uint32_t tag = 0;

    Name() = default;
    Name(std::string t, std::uint32_t g = 0) : text(std::move(t)), tag(g) {}
    Name(const char* t) : text(t) {}

    bool generated() const { return tag != 0; }

    /// `x` for source names, `x'3` for generated ones.
    std::string str() const { return tag == 0 ? text : text + "'" + std::to_string(tag); }

    friend bool operator==(const Name&, const Name&) = default;
    friend auto operator<=>(const Name&, const Name&) = default;
};

struct NameHash {
    std::size_t operator()(const Name& n) const noexcept {
        return std::hash<std::string>{}(n.text) ^ (std::size_t{n.tag} * 0x9e3779b97f4a7c15ULL);
    }
};

} // namespace pie
