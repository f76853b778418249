#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace defrev {

// Base class of every error this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Digit-aware ordering: "r2" < "r10". Equal numeric runs fall back to plain
// comparison so the order stays total ("r01" != "r1").
inline int natural_compare(std::string_view a, std::string_view b) {
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (is_digit(a[i]) && is_digit(b[j])) {
            std::size_t si = i, sj = j;
            while (si < a.size() && a[si] == '0') ++si;
            while (sj < b.size() && b[sj] == '0') ++sj;
            std::size_t ei = si, ej = sj;
            while (ei < a.size() && is_digit(a[ei])) ++ei;
            while (ej < b.size() && is_digit(b[ej])) ++ej;
            if (ei - si != ej - sj) return ei - si < ej - sj ? -1 : 1;
            if (int c = a.substr(si, ei - si).compare(b.substr(sj, ej - sj)); c != 0)
                return c < 0 ? -1 : 1;
            i = ei;
            j = ej;
        } else {
            if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
            ++i;
            ++j;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    int c = a.compare(b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

struct NaturalLess {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const { return natural_compare(a, b) < 0; }
};

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    if (!head(s[0])) return false;
    for (char c : s.substr(1))
        if (!head(c) && !(c >= '0' && c <= '9')) return false;
    return true;
}

struct Literal {
    std::string atom;
    bool negative = false;

    Literal() = default;
    Literal(std::string a, bool neg = false) : atom(std::move(a)), negative(neg) {}

    // Accepts "a" or "~a"; throws on anything else.
    static Literal parse(std::string_view text) {
        bool neg = false;
        if (!text.empty() && text[0] == '~') {
            neg = true;
            text.remove_prefix(1);
        }
        if (!is_identifier(text)) throw Error("malformed literal '" + std::string(text) + "'");
        return Literal(std::string(text), neg);
    }

    std::string str() const { return negative ? "~" + atom : atom; }

    friend bool operator==(const Literal&, const Literal&) = default;
    // Atom order first, positive before negative.
    friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
        int c = natural_compare(a.atom, b.atom);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.negative <=> b.negative;
    }
    friend std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << l.str(); }
};

inline Literal complement(const Literal& l) { return Literal(l.atom, !l.negative); }

}  // namespace defrev

template <>
struct std::hash<defrev::Literal> {
    std::size_t operator()(const defrev::Literal& l) const noexcept {
        return std::hash<std::string>{}(l.atom) * 2 + (l.negative ? 1 : 0);
    }
};
