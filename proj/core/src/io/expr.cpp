#include "qadhm/io/expr.hpp"

#include <cctype>

#include "qadhm/io/json.hpp"

namespace qadhm::io {

const char* const kExprGrammar =
    "EXPR grammar (chart I, noncommutative, products keep their order):\n"
    "  expr   := ['+'|'-'] term (('+'|'-') term)*\n"
    "  term   := factor (['*'] factor)*\n"
    "  factor := atom ['^' int]      (negative powers only for q)\n"
    "  atom   := int | q | x11 | x12 | x21 | x22 | det | '(' expr ')'\n"
    "example: \"x11*x22 - q^2*x12*x21 + 3*det^2\"";

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NCPoly run() {
        NCPoly f = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw SchemaError("expression: " + what + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'x' || c == 'd' || c == '(';
    }

    long integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        std::size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000000L) fail("integer too large");
        }
        if (pos_ == start) fail("expected an integer");
        return neg ? -v : v;
    }

    NCPoly expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        NCPoly f = term();
        if (neg) f = -f;
        for (;;) {
            if (eat('+')) f += term();
            else if (eat('-')) f -= term();
            else return f;
        }
    }

    NCPoly term() {
        NCPoly f = factor();
        for (;;) {
            if (eat('*')) f = f * factor();
            else if (at_atom()) f = f * factor();
            else return f;
        }
    }

    NCPoly factor() {
        bool is_q = false;
        NCPoly a = atom(is_q);
        if (!eat('^')) return a;
        long n = integer();
        if (is_q) return NCPoly::scalar(Chart::I, QLaurent::q(static_cast<int>(n)));
        if (n < 0) fail("negative power of a non-scalar");
        if (n > 64) fail("power too large");
        return a.pow(static_cast<unsigned>(n));
    }

    NCPoly atom(bool& is_q) {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return NCPoly::scalar(Chart::I, QLaurent(integer()));
        if (eat('(')) {
            NCPoly f = expr();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        auto word = [&](std::string_view w) {
            if (s_.substr(pos_, w.size()) != w) return false;
            std::size_t end = pos_ + w.size();
            if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
            pos_ = end;
            return true;
        };
        if (word("q")) {
            is_q = true;
            return NCPoly::scalar(Chart::I, QLaurent::q(1));
        }
        if (word("det")) return NCPoly::det(Chart::I);
        static const char* gens[] = {"x11", "x12", "x21", "x22"};
        for (int g = 0; g < 4; ++g)
            if (word(gens[g])) return NCPoly::gen(Chart::I, g);
        fail("unknown symbol");
    }
};

}  // namespace

NCPoly parse_expr(std::string_view src) { return Parser(src).run(); }

}  // namespace qadhm::io
