#include "wd/expr.hpp"

#include <cctype>

namespace wd {

namespace {

struct Token {
    enum class Kind { ident, number, lparen, rparen, comma, end };
    Kind kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::size_t at = pos_;
        if (pos_ >= src_.size()) return {Token::Kind::end, "", at};
        char c = src_[pos_];
        if (c == '(') return ++pos_, Token{Token::Kind::lparen, "(", at};
        if (c == ')') return ++pos_, Token{Token::Kind::rparen, ")", at};
        if (c == ',') return ++pos_, Token{Token::Kind::comma, ",", at};
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::ident, src_.substr(start, pos_ - start), at};
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            if (c == '-') ++pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ExprParseError(at, "malformed number");
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '/') {
                ++pos_;
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw ExprParseError(pos_, "malformed rational");
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
            return {Token::Kind::number, src_.substr(start, pos_ - start), at};
        }
        throw ExprParseError(at, std::string("unexpected character '") + c + "'");
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src), cur_(lex_.next()) {}

    Expr parse() {
        Expr e = expr();
        expect(Token::Kind::end, "trailing input");
        return e;
    }

private:
    Lexer lex_;
    Token cur_;

    void advance() { cur_ = lex_.next(); }

    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k) throw ExprParseError(cur_.offset, "syntax error: expected " + what);
        if (k != Token::Kind::end) advance();
    }

    Rational number() {
        if (cur_.kind != Token::Kind::number)
            throw ExprParseError(cur_.offset, "syntax error: expected number");
        Rational r = rational_from_string(cur_.text);
        advance();
        return r;
    }

    long integer(bool non_negative) {
        std::size_t at = cur_.offset;
        Rational r = number();
        if (!is_integer(r)) throw ExprParseError(at, "expected integer, got rational");
        long v = to_long(r.get_num());
        if (non_negative && v < 0) throw ExprParseError(at, "expected non-negative integer");
        return v;
    }

    Expr expr() {
        if (cur_.kind != Token::Kind::ident)
            throw ExprParseError(cur_.offset, "syntax error: expected expression");
        std::string name = cur_.text;
        std::size_t at = cur_.offset;
        advance();
        expect(Token::Kind::lparen, "'('");
        Expr e;
        if (name == "ind") {
            e.kind = Expr::Kind::ind;
            e.e = number();
            expect(Token::Kind::comma, "','");
            e.zeta = number();
            expect(Token::Kind::comma, "','");
            e.t = integer(true);
        } else if (name == "sum") {
            e.kind = Expr::Kind::sum;
            if (cur_.kind != Token::Kind::rparen) {
                e.children.push_back(expr());
                while (cur_.kind == Token::Kind::comma) {
                    advance();
                    e.children.push_back(expr());
                }
            }
        } else if (name == "tensor") {
            e.kind = Expr::Kind::tensor;
            e.children.push_back(expr());
            expect(Token::Kind::comma, "','");
            e.children.push_back(expr());
        } else if (name == "dual" || name == "ext2") {
            e.kind = name == "dual" ? Expr::Kind::dual : Expr::Kind::ext2;
            e.children.push_back(expr());
        } else if (name == "twist" || name == "restrict") {
            e.kind = name == "twist" ? Expr::Kind::twist : Expr::Kind::restrict_scalars;
            e.children.push_back(expr());
            expect(Token::Kind::comma, "','");
            e.arg = integer(false);
        } else {
            throw ExprParseError(at, "unknown constructor '" + name + "'");
        }
        expect(Token::Kind::rparen, "')'");
        return e;
    }
};

} // namespace

Expr parse_expr(const std::string& src) { return Parser(src).parse(); }

std::string print_expr(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::ind:
        return "ind(" + rational_to_string(e.e) + "," + rational_to_string(e.zeta) + "," +
               std::to_string(e.t) + ")";
    case Expr::Kind::sum: {
        std::string s = "sum(";
        for (std::size_t i = 0; i < e.children.size(); ++i)
            s += (i ? "," : "") + print_expr(e.children[i]);
        return s + ")";
    }
    case Expr::Kind::tensor:
        return "tensor(" + print_expr(e.children[0]) + "," + print_expr(e.children[1]) + ")";
    case Expr::Kind::dual: return "dual(" + print_expr(e.children[0]) + ")";
    case Expr::Kind::ext2: return "ext2(" + print_expr(e.children[0]) + ")";
    case Expr::Kind::twist:
        return "twist(" + print_expr(e.children[0]) + "," + std::to_string(e.arg) + ")";
    case Expr::Kind::restrict_scalars:
        return "restrict(" + print_expr(e.children[0]) + "," + std::to_string(e.arg) + ")";
    }
    throw Error("unreachable");
}

SSModule eval_expr(const Expr& e, const ResidueCard& q) {
    switch (e.kind) {
    case Expr::Kind::ind: return SSModule::block(q, WeilMonomial(e.e, e.zeta), e.t);
    case Expr::Kind::sum: {
        SSModule acc(q);
        for (const auto& c : e.children) acc = direct_sum(acc, eval_expr(c, q));
        return acc;
    }
    case Expr::Kind::tensor: return tensor(eval_expr(e.children[0], q), eval_expr(e.children[1], q));
    case Expr::Kind::dual: return dual(eval_expr(e.children[0], q));
    case Expr::Kind::ext2: return exterior_square_2dim(eval_expr(e.children[0], q));
    case Expr::Kind::twist: return tate_twist(eval_expr(e.children[0], q), e.arg);
    case Expr::Kind::restrict_scalars: return restrict(eval_expr(e.children[0], q), e.arg);
    }
    throw Error("unreachable");
}

} // namespace wd
