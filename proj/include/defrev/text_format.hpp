#pragma once

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "theory.hpp"

namespace defrev {

struct ParseError : Error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& msg)
        : Error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}
};

namespace detail {

enum class Tok { ident, tilde, comma, dot, colon, gt, strict_arrow, def_arrow, defeater_arrow, end };

struct Token {
    Tok kind;
    std::string text;
    int line, column;
};

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto word_char = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || (c >= '0' && c <= '9');
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        int l = line, cl = col;
        char n = i + 1 < src.size() ? src[i + 1] : '\0';
        if (c == '-' && n == '>') { out.push_back({Tok::strict_arrow, "->", l, cl}); advance(2); continue; }
        if (c == '=' && n == '>') { out.push_back({Tok::def_arrow, "=>", l, cl}); advance(2); continue; }
        if (c == '~' && n == '>') { out.push_back({Tok::defeater_arrow, "~>", l, cl}); advance(2); continue; }
        switch (c) {
            case '~': out.push_back({Tok::tilde, "~", l, cl}); advance(1); continue;
            case ',': out.push_back({Tok::comma, ",", l, cl}); advance(1); continue;
            case '.': out.push_back({Tok::dot, ".", l, cl}); advance(1); continue;
            case ':': out.push_back({Tok::colon, ":", l, cl}); advance(1); continue;
            case '>': out.push_back({Tok::gt, ">", l, cl}); advance(1); continue;
            default: break;
        }
        if (word_char(c)) {
            std::size_t s = i;
            while (i < src.size() && word_char(src[i])) advance(1);
            std::string w(src.substr(s, i - s));
            if (!is_identifier(w)) throw ParseError(l, cl, "identifier may not start with a digit: '" + w + "'");
            out.push_back({Tok::ident, std::move(w), l, cl});
            continue;
        }
        throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Theory run() {
        std::set<Literal> facts;
        std::vector<Rule> rules;
        std::set<std::string> labels;
        std::vector<std::pair<Tuple, Token>> sups;
        while (peek().kind != Tok::end) {
            Token head = expect(Tok::ident, "statement");
            if (peek().kind == Tok::gt) {
                next();
                Token loser = expect(Tok::ident, "rule label after '>'");
                expect(Tok::dot, "'.'");
                sups.push_back({{head.text, loser.text}, head});
                continue;
            }
            expect(Tok::colon, "':' or '>'");
            if (head.text == "facts") {
                if (peek().kind != Tok::dot) {
                    for (auto& l : literal_list()) facts.insert(std::move(l));
                }
                expect(Tok::dot, "'.'");
                continue;
            }
            std::vector<Literal> body;
            if (!is_arrow(peek().kind)) body = literal_list();
            Token a = next();
            if (!is_arrow(a.kind)) fail(a, "expected '->', '=>' or '~>'");
            Literal h = literal();
            expect(Tok::dot, "'.'");
            RuleKind k = a.kind == Tok::strict_arrow ? RuleKind::strict
                         : a.kind == Tok::def_arrow  ? RuleKind::defeasible
                                                     : RuleKind::defeater;
            if (!labels.insert(head.text).second) fail(head, "duplicate rule label '" + head.text + "'");
            rules.emplace_back(head.text, std::move(body), k, std::move(h));
        }
        for (const auto& f : facts)
            if (facts.count(complement(f))) throw TheoryError("inconsistent facts: " + f.atom + " and ~" + f.atom);
        Superiority sup;
        for (const auto& [t, tok] : sups) {
            if (!labels.count(t.first)) fail(tok, "superiority names unknown rule '" + t.first + "'");
            if (!labels.count(t.second)) fail(tok, "superiority names unknown rule '" + t.second + "'");
            sup.tuples.insert(t);
        }
        return Theory(std::move(facts), std::move(rules), std::move(sup));
    }

private:
    static bool is_arrow(Tok k) { return k == Tok::strict_arrow || k == Tok::def_arrow || k == Tok::defeater_arrow; }
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }
    Token expect(Tok k, const char* what) {
        Token t = next();
        if (t.kind != k) fail(t, std::string("expected ") + what + (t.kind == Tok::end ? ", found end of input" : ", found '" + t.text + "'"));
        return t;
    }
    Literal literal() {
        bool neg = false;
        if (peek().kind == Tok::tilde) {
            next();
            neg = true;
        }
        return Literal(expect(Tok::ident, "literal").text, neg);
    }
    std::vector<Literal> literal_list() {
        std::vector<Literal> out{literal()};
        while (peek().kind == Tok::comma) {
            next();
            out.push_back(literal());
        }
        return out;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Theory parse_theory(std::string_view text) { return detail::Parser(text).run(); }

inline std::string join_literals(const std::set<Literal>& ls, const char* sep = ", ") {
    std::string out;
    for (const auto& l : ls) {
        if (!out.empty()) out += sep;
        out += l.str();
    }
    return out;
}

inline std::string format_rule(const Rule& r) {
    std::string out = r.label + ":";
    for (std::size_t i = 0; i < r.antecedent.size(); ++i) out += (i ? ", " : " ") + r.antecedent[i].str();
    out += std::string(" ") + arrow(r.kind) + " " + r.consequent.str() + ".";
    return out;
}

// "{r1>r4,r5>r3}"
inline std::string format_superiority(const Superiority& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& [w, l] : s.tuples) {
        if (!first) out += ",";
        first = false;
        out += w + ">" + l;
    }
    return out + "}";
}

inline std::string serialize_theory(const Theory& t) {
    std::string out = "facts:";
    if (!t.facts().empty()) out += " " + join_literals(t.facts());
    out += ".\n";
    for (const auto& r : t.rules()) out += format_rule(r) + "\n";
    for (const auto& [w, l] : t.superiority().tuples) out += w + " > " + l + ".\n";
    return out;
}

}  // namespace defrev
