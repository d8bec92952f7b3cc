#ifndef SEMDIFF_LEXER_HPP
#define SEMDIFF_LEXER_HPP

#include <cctype>
#include <string>
#include <vector>

#include "semdiff/errors.hpp"

namespace semdiff {

// Shared tokenizer for the .cd and .od formats.
enum class TokKind {
    Ident,
    Number,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Comma,
    Colon,
    Equals,
    Star,
    DotDot,
    Arrow,     // ->
    BidiArrow, // <->
    Less,      // <
    Greater,   // >
    ColonColon,
    End,
};

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    SourcePos pos;
};

inline const char* tok_kind_name(TokKind k) {
    switch (k) {
    case TokKind::Ident: return "identifier";
    case TokKind::Number: return "number";
    case TokKind::LBrace: return "'{'";
    case TokKind::RBrace: return "'}'";
    case TokKind::LParen: return "'('";
    case TokKind::RParen: return "')'";
    case TokKind::Semi: return "';'";
    case TokKind::Comma: return "','";
    case TokKind::Colon: return "':'";
    case TokKind::Equals: return "'='";
    case TokKind::Star: return "'*'";
    case TokKind::DotDot: return "'..'";
    case TokKind::Arrow: return "'->'";
    case TokKind::BidiArrow: return "'<->'";
    case TokKind::Less: return "'<'";
    case TokKind::Greater: return "'>'";
    case TokKind::ColonColon: return "'::'";
    case TokKind::End: return "end of input";
    }
    return "?";
}

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1, col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i < src.size() && src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        SourcePos pos{line, col};
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
            advance(2);
            while (i + 1 < src.size() && !(src[i] == '*' && src[i + 1] == '/'))
                advance(1);
            if (i + 1 >= src.size())
                throw SyntaxError(pos, "unterminated block comment");
            advance(2);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) ||
                    src[i] == '_'))
                advance(1);
            out.push_back({TokKind::Ident, src.substr(start, i - start), pos});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[i])))
                advance(1);
            out.push_back({TokKind::Number, src.substr(start, i - start), pos});
            continue;
        }
        auto two = src.substr(i, 2);
        auto three = src.substr(i, 3);
        if (three == "<->") {
            advance(3);
            out.push_back({TokKind::BidiArrow, "<->", pos});
            continue;
        }
        if (two == "->") {
            advance(2);
            out.push_back({TokKind::Arrow, "->", pos});
            continue;
        }
        if (two == "..") {
            advance(2);
            out.push_back({TokKind::DotDot, "..", pos});
            continue;
        }
        if (two == "::") {
            advance(2);
            out.push_back({TokKind::ColonColon, "::", pos});
            continue;
        }
        TokKind k;
        switch (c) {
        case '{': k = TokKind::LBrace; break;
        case '}': k = TokKind::RBrace; break;
        case '(': k = TokKind::LParen; break;
        case ')': k = TokKind::RParen; break;
        case ';': k = TokKind::Semi; break;
        case ',': k = TokKind::Comma; break;
        case ':': k = TokKind::Colon; break;
        case '=': k = TokKind::Equals; break;
        case '*': k = TokKind::Star; break;
        case '<': k = TokKind::Less; break;
        case '>': k = TokKind::Greater; break;
        default:
            throw SyntaxError(pos, std::string("unexpected character '") + c +
                                       "'");
        }
        advance(1);
        out.push_back({k, std::string(1, c), pos});
    }
    out.push_back({TokKind::End, "", {line, col}});
    return out;
}

// Small cursor over a token stream, shared by both parsers.
class TokenCursor {
public:
    explicit TokenCursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek() const { return toks_[idx_]; }
    const Token& peek2() const {
        return toks_[idx_ + 1 < toks_.size() ? idx_ + 1 : toks_.size() - 1];
    }
    Token next() { return toks_[idx_ < toks_.size() - 1 ? idx_++ : idx_]; }

    bool at(TokKind k) const { return peek().kind == k; }
    bool at_kw(const std::string& kw) const {
        return peek().kind == TokKind::Ident && peek().text == kw;
    }
    bool accept(TokKind k) {
        if (at(k)) {
            next();
            return true;
        }
        return false;
    }
    bool accept_kw(const std::string& kw) {
        if (at_kw(kw)) {
            next();
            return true;
        }
        return false;
    }
    Token expect(TokKind k, const std::string& what) {
        if (!at(k))
            throw SyntaxError(peek().pos, "expected " + what + " (" +
                                              tok_kind_name(k) + "), found '" +
                                              peek().text + "'");
        return next();
    }
    void expect_kw(const std::string& kw) {
        if (!at_kw(kw))
            throw SyntaxError(peek().pos, "expected '" + kw + "', found '" +
                                              peek().text + "'");
        next();
    }

private:
    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

} // namespace semdiff

#endif
