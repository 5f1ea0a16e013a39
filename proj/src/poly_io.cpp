#include "jetvpa/poly_io.hpp"

#include <cctype>

namespace jetvpa {

namespace {

class Lexer {
  public:
    Lexer(std::string_view text, int line_offset)
        : text_(text), line_(1 + line_offset) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_base_ = pos_ + 1;
            }
            ++pos_;
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char take() {
        char c = peek();
        ++pos_;
        return c;
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, static_cast<int>(pos_ - col_base_) + 1, message);
    }

    mpz_class integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return mpz_class(digits);
    }

    std::string identifier() {
        skip_ws();
        std::string id;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            id += text_[pos_++];
        if (id.empty()) fail("expected an identifier");
        return id;
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_;
    size_t col_base_ = 0;
};

// Accepts x{digits}_{digits}; returns false when `id` has another shape.
bool builtin_var(const std::string& id, VarId& out) {
    if (id.size() < 4 || id[0] != 'x') return false;
    size_t us = id.find('_');
    if (us == std::string::npos || us < 2 || us + 1 >= id.size()) return false;
    for (size_t i = 1; i < id.size(); ++i)
        if (i != us && !std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    try {
        int gen = std::stoi(id.substr(1, us - 1));
        int level = std::stoi(id.substr(us + 1));
        if (gen < 1 || level < 1) return false;
        out = jet_var(gen, level);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

class Parser {
  public:
    Parser(std::string_view text, int line_offset, const std::map<std::string, VarId>* names)
        : lex_(text, line_offset), names_(names) {}

    Polynomial run() {
        Polynomial p = expression();
        if (!lex_.eof()) lex_.fail("unexpected trailing input");
        return p;
    }

  private:
    Lexer lex_;
    const std::map<std::string, VarId>* names_;

    Polynomial expression() {
        Polynomial acc = term();
        while (true) {
            if (lex_.accept('+'))
                acc += term();
            else if (lex_.accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        if (lex_.accept('-')) return -factor();
        Polynomial base = atom();
        if (lex_.accept('^')) {
            mpz_class e = lex_.integer();
            if (e > 64) lex_.fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Polynomial atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.take();
            Polynomial inner = expression();
            if (!lex_.accept(')')) lex_.fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = lex_.integer();
            if (lex_.accept('/')) {
                mpz_class den = lex_.integer();
                if (den == 0) lex_.fail("zero denominator");
                Scalar q(num, den);
                q.canonicalize();
                return Polynomial(q);
            }
            return Polynomial(Scalar(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id = lex_.identifier();
            VarId v;
            if (builtin_var(id, v)) return Polynomial::variable(v);
            if (names_) {
                auto it = names_->find(id);
                if (it != names_->end()) return Polynomial::variable(it->second);
            }
            lex_.fail("unknown variable '" + id + "'");
        }
        if (c == '\0') lex_.fail("unexpected end of input");
        lex_.fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::map<std::string, VarId>* names) {
    return Parser(text, 0, names).run();
}

Polynomial parse_polynomial_at(std::string_view text, int line_offset,
                               const std::map<std::string, VarId>* names) {
    return Parser(text, line_offset, names).run();
}

Scalar parse_scalar(std::string_view text) {
    Polynomial p = parse_polynomial(text, nullptr);
    if (!p.is_constant()) {
        throw ParseError(1, 1, "expected a rational constant");
    }
    return p.constant_term();
}

}  // namespace jetvpa
