#include "ltlf/formula.hpp"

#include <cctype>
#include <utility>

namespace ltlf {

ParseError::ParseError(const std::string& message, std::size_t position,
                       std::vector<std::string> expected)
    : std::runtime_error(message + " at offset " + std::to_string(position)),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
    Ident,
    True,
    False,
    End,
    LParen,
    RParen,
    Bang,
    Amp,
    Pipe,
    Arrow,
    Iff,
    Next,
    WkNext,
    Always,
    Eventually,
    WeakUntil,
    Until,
    Eof,
};

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;  // Ident only
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j])) ++j;
            std::string word(text.substr(i, j - i));
            i = j;
            if (word == "true") out.push_back({Tok::True, start, {}});
            else if (word == "false") out.push_back({Tok::False, start, {}});
            else if (word == "end") out.push_back({Tok::End, start, {}});
            else if (word == "X") out.push_back({Tok::Next, start, {}});
            else if (word == "N") out.push_back({Tok::WkNext, start, {}});
            else if (word == "G") out.push_back({Tok::Always, start, {}});
            else if (word == "F") out.push_back({Tok::Eventually, start, {}});
            else if (word == "W") out.push_back({Tok::WeakUntil, start, {}});
            else if (word == "U") out.push_back({Tok::Until, start, {}});
            else out.push_back({Tok::Ident, start, std::move(word)});
            continue;
        }
        switch (c) {
            case '(': out.push_back({Tok::LParen, start, {}}); ++i; break;
            case ')': out.push_back({Tok::RParen, start, {}}); ++i; break;
            case '!': out.push_back({Tok::Bang, start, {}}); ++i; break;
            case '&': out.push_back({Tok::Amp, start, {}}); ++i; break;
            case '|': out.push_back({Tok::Pipe, start, {}}); ++i; break;
            case '-':
                if (i + 1 < text.size() && text[i + 1] == '>') {
                    out.push_back({Tok::Arrow, start, {}});
                    i += 2;
                    break;
                }
                throw ParseError("expected '->'", start, {"->"});
            case '<':
                if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
                    out.push_back({Tok::Iff, start, {}});
                    i += 3;
                    break;
                }
                throw ParseError("expected '<->'", start, {"<->"});
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start,
                                 {"formula"});
        }
    }
    out.push_back({Tok::Eof, text.size(), {}});
    return out;
}

const std::vector<std::string> kAtomExpected = {
    "identifier", "true", "false", "end", "(", "!", "X", "N", "G", "F"};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    Formula run() {
        Formula f = parse_iff();
        if (peek().kind != Tok::Eof) {
            throw ParseError("unexpected trailing input", peek().pos,
                             {"end of input", "binary operator"});
        }
        return f;
    }

private:
    const Token& peek() const { return tokens_[index_]; }

    Token take() { return tokens_[index_++]; }

    bool accept(Tok kind) {
        if (peek().kind == kind) {
            ++index_;
            return true;
        }
        return false;
    }

    // <-> and -> associate to the right.
    Formula parse_iff() {
        Formula lhs = parse_implies();
        if (accept(Tok::Iff)) return iff(lhs, parse_iff());
        return lhs;
    }

    Formula parse_implies() {
        Formula lhs = parse_or();
        if (accept(Tok::Arrow)) return Formula::implies(lhs, parse_implies());
        return lhs;
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (accept(Tok::Pipe)) lhs = disj(lhs, parse_and());
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_until();
        while (accept(Tok::Amp)) lhs = conj(lhs, parse_until());
        return lhs;
    }

    Formula parse_until() {
        Formula lhs = parse_unary();
        if (accept(Tok::WeakUntil)) return Formula::weak_until(lhs, parse_until());
        if (accept(Tok::Until)) return until(lhs, parse_until());
        return lhs;
    }

    Formula parse_unary() {
        switch (peek().kind) {
            case Tok::Next: ++index_; return Formula::next(parse_unary());
            case Tok::WkNext: ++index_; return weak_next(parse_unary());
            case Tok::Always: ++index_; return always(parse_unary());
            case Tok::Eventually: ++index_; return eventually(parse_unary());
            case Tok::Bang: ++index_; return neg(parse_unary());
            default: return parse_atom();
        }
    }

    Formula parse_atom() {
        Token tok = take();
        switch (tok.kind) {
            case Tok::Ident: return Formula::var(tok.text);
            case Tok::True: return top();
            case Tok::False: return Formula::bottom();
            case Tok::End: return end_of_time();
            case Tok::LParen: {
                Formula inner = parse_iff();
                if (!accept(Tok::RParen)) {
                    throw ParseError("expected ')'", peek().pos, {")"});
                }
                return inner;
            }
            default:
                throw ParseError("expected a formula", tok.pos, kAtomExpected);
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

}  // namespace ltlf
