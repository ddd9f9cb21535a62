#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wangbars {

// An edge color: an interned symbolic token. Equality is exact string
// equality (interning is bijective, so comparing ids is enough). Ordering
// compares tokens lexicographically so that results never depend on
// interning order.
//
// Tokens from input files match [A-Za-z0-9_]+. Tokens starting with '@' are
// reserved for machine-generated colors (bar splitting seams, encoder
// markers) and are rejected by the parser, which guarantees freshness.
class Color {
public:
    explicit Color(std::string_view token) : id_(intern(token)) {}

    const std::string& str() const { return table()[id_]; }
    std::uint32_t id() const { return id_; }

    bool operator==(const Color& o) const { return id_ == o.id_; }
    bool operator!=(const Color& o) const { return id_ != o.id_; }
    // Lexicographic on the token, not on the intern id.
    std::strong_ordering operator<=>(const Color& o) const {
        if (id_ == o.id_) return std::strong_ordering::equal;
        return str() <=> o.str();
    }

    static bool valid_token(std::string_view t) {
        if (t.empty()) return false;
        std::string_view body = t;
        if (body.front() == '@') {
            body.remove_prefix(1);
            if (body.empty()) return false;
        }
        for (char c : body) {
            const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                            (c >= '0' && c <= '9') || c == '_';
            if (!ok) return false;
        }
        return true;
    }

    bool reserved() const { return str().front() == '@'; }

private:
    std::uint32_t id_;

    static std::vector<std::string>& table() {
        static std::vector<std::string> t;
        return t;
    }

    static std::uint32_t intern(std::string_view token) {
        if (!valid_token(token))
            throw std::invalid_argument("invalid color token: '" + std::string(token) + "'");
        static std::unordered_map<std::string, std::uint32_t> index;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto it = index.find(std::string(token));
        if (it != index.end()) return it->second;
        auto id = static_cast<std::uint32_t>(table().size());
        table().emplace_back(token);
        index.emplace(std::string(token), id);
        return id;
    }
};

struct ColorHash {
    std::size_t operator()(const Color& c) const { return c.id(); }
};

} // namespace wangbars
