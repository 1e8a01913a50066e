#include "lojex/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "lojex/error.hpp"

namespace lojex {

namespace {

constexpr int kExponentCap = 1000000;
constexpr int kMaxNestingDepth = 8000;

enum class TokKind { Number, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::size_t pos;
    Rational value;       // Number
    int var = 0;          // Var: 1 or 2
    bool is_integer = false;
    Integer int_value;    // Number, when is_integer
};

class Lexer {
  public:
    Lexer(const std::string& text, const VariableNames& vars) : text_(text), vars_(vars) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) {
                out.push_back({TokKind::End, pos_});
                return out;
            }
            char c = text_[pos_];
            switch (c) {
                case '+': out.push_back({TokKind::Plus, pos_++}); break;
                case '-': out.push_back({TokKind::Minus, pos_++}); break;
                case '*': out.push_back({TokKind::Star, pos_++}); break;
                case '/': out.push_back({TokKind::Slash, pos_++}); break;
                case '^': out.push_back({TokKind::Caret, pos_++}); break;
                case '(': out.push_back({TokKind::LParen, pos_++}); break;
                case ')': out.push_back({TokKind::RParen, pos_++}); break;
                default:
                    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                        out.push_back(lex_number());
                    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                        out.push_back(lex_identifier());
                    } else {
                        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
                    }
            }
        }
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Token lex_number() {
        std::size_t start = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::string frac;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                frac += text_[pos_++];
            if (digits.empty() && frac.empty())
                throw ParseError("malformed number", start);
            // Finite decimal converted exactly: a.b -> (a*10^k + b) / 10^k.
            Integer scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            Integer whole = digits.empty() ? Integer(0) : Integer(digits);
            Integer fpart = frac.empty() ? Integer(0) : Integer(frac);
            Token t{TokKind::Number, start};
            t.value = Rational(whole * scale + fpart, scale);
            return t;
        }
        Token t{TokKind::Number, start};
        t.is_integer = true;
        t.int_value = Integer(digits);
        t.value = Rational(t.int_value);
        return t;
    }

    Token lex_identifier() {
        std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        Token t{TokKind::Var, start};
        if (name == vars_.first || name == "x1")
            t.var = 1;
        else if (name == vars_.second || name == "x2")
            t.var = 2;
        else
            throw ParseError("unknown variable '" + name + "'", start);
        return t;
    }

    const std::string& text_;
    const VariableNames& vars_;
    std::size_t pos_ = 0;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    BiPoly run() {
        BiPoly p = parse_expr(0);
        expect(TokKind::End, "unexpected trailing input");
        return p;
    }

  private:
    const Token& peek() const { return toks_[idx_]; }
    const Token& advance() { return toks_[idx_++]; }

    void expect(TokKind k, const char* msg) {
        if (peek().kind != k) throw ParseError(msg, peek().pos);
        advance();
    }

    bool starts_factor(TokKind k) const {
        return k == TokKind::Number || k == TokKind::Var || k == TokKind::LParen;
    }

    BiPoly parse_expr(int depth) {
        bool negate = false;
        if (peek().kind == TokKind::Minus) {
            advance();
            negate = true;
        }
        BiPoly acc = parse_term(depth);
        if (negate) acc = -acc;
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            bool sub = advance().kind == TokKind::Minus;
            BiPoly rhs = parse_term(depth);
            acc = sub ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    BiPoly parse_term(int depth) {
        Factor acc = parse_factor(depth);
        while (true) {
            TokKind k = peek().kind;
            if (k == TokKind::Star) {
                advance();
                acc = Factor{acc.poly * parse_factor(depth).poly, false};
            } else if (k == TokKind::Slash) {
                std::size_t pos = advance().pos;
                Factor rhs = parse_factor(depth);
                if (!rhs.numeric)
                    throw ParseError("division is only allowed by a numeric literal", pos);
                Rational divisor = rhs.poly.coeff(0, 0);
                if (divisor == 0) throw ParseError("division by zero", pos);
                acc = Factor{acc.poly.scaled(Rational(1) / divisor), acc.numeric};
            } else if (starts_factor(k)) {
                acc = Factor{acc.poly * parse_factor(depth).poly, false};
            } else {
                return acc.poly;
            }
        }
    }

    struct Factor {
        BiPoly poly;
        bool numeric;  // built purely from a number literal (divisor candidate)
    };

    Factor parse_factor(int depth) {
        Factor base = parse_base(depth);
        if (peek().kind != TokKind::Caret) return base;
        advance();
        const Token& e = peek();
        if (e.kind != TokKind::Number || !e.is_integer)
            throw ParseError("exponent must be a nonnegative integer", e.pos);
        if (e.int_value > kExponentCap)
            throw ParseError("exponent exceeds cap of 10^6", e.pos);
        advance();
        int n = e.int_value.template convert_to<int>();
        return Factor{base.poly.pow(n), base.numeric};
    }

    Factor parse_base(int depth) {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::Number:
                advance();
                return Factor{BiPoly::constant(t.value), true};
            case TokKind::Var:
                advance();
                return Factor{t.var == 1 ? BiPoly::monomial(1, 0, Rational(1))
                                         : BiPoly::monomial(0, 1, Rational(1)),
                              false};
            case TokKind::LParen: {
                if (depth + 1 > kMaxNestingDepth)
                    throw ParseError("expression too deeply nested", t.pos);
                advance();
                BiPoly inner = parse_expr(depth + 1);
                expect(TokKind::RParen, "expected ')'");
                return Factor{inner, false};
            }
            default:
                throw ParseError("expected a number, variable, or '('", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

std::string monomial_text(const ExponentPair& e, const Rational& mag, const VariableNames& vars) {
    std::string out;
    bool coeff_shown = (mag != 1) || (e.first == 0 && e.second == 0);
    if (coeff_shown) out += rational_to_string(mag);
    auto append_var = [&](const std::string& name, int exp) {
        if (exp == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (exp > 1) out += "^" + std::to_string(exp);
    };
    append_var(vars.first, e.first);
    append_var(vars.second, e.second);
    return out;
}

}  // namespace

BiPoly parse_polynomial(const std::string& text, const VariableNames& vars) {
    if (text.empty()) throw ParseError("empty input", 0);
    return Parser(Lexer(text, vars).run()).run();
}

std::string format_polynomial(const BiPoly& p, const VariableNames& vars) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<ExponentPair, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        if (l.first.first != r.first.first) return l.first.first > r.first.first;
        return l.first.second > r.first.second;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += monomial_text(e, mag, vars);
    }
    return out;
}

}  // namespace lojex
