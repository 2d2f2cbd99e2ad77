#pragma once

// Recursive-descent check of the DOT grammar subset the emitter can
// produce: digraph ID { stmt... } with node and edge statements carrying
// optional attribute lists, plus graph-level attribute assignments.
// Test-only; independent of the emitter.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace testutil {

struct DotChecker {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(std::string_view token) {
        skip_ws();
        if (s.substr(pos, token.size()) != token) return false;
        pos += token.size();
        return true;
    }
    bool identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return pos > start;
    }
    bool quoted_string() {
        skip_ws();
        if (pos >= s.size() || s[pos] != '"') return false;
        ++pos;
        while (pos < s.size() && s[pos] != '"') {
            if (s[pos] == '\\') ++pos;
            ++pos;
        }
        if (pos >= s.size()) return false;
        ++pos;
        return true;
    }
    bool value() { return quoted_string() || identifier(); }
    bool attr_list() {
        if (!eat("[")) return false;
        while (true) {
            if (!identifier()) return false;
            if (!eat("=")) return false;
            if (!value()) return false;
            if (eat(",")) continue;
            break;
        }
        return eat("]");
    }
    bool statement() {
        // graph attribute: ID = value ;
        // node:            ID attr_list? ;
        // edge:            ID -> ID attr_list? ;
        if (!identifier()) return false;
        if (eat("=")) {
            if (!value()) return false;
        } else if (eat("->")) {
            if (!identifier()) return false;
            skip_ws();
            if (pos < s.size() && s[pos] == '[' && !attr_list()) return false;
        } else {
            skip_ws();
            if (pos < s.size() && s[pos] == '[' && !attr_list()) return false;
        }
        return eat(";");
    }
    bool parse() {
        if (!eat("digraph")) return false;
        if (!identifier()) return false;
        if (!eat("{")) return false;
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '}') break;
            if (pos >= s.size()) return false;
            if (!statement()) return false;
        }
        if (!eat("}")) return false;
        skip_ws();
        return pos == s.size();
    }
};

inline bool valid_dot(const std::string& text) {
    DotChecker checker{text};
    return checker.parse();
}

} // namespace testutil
