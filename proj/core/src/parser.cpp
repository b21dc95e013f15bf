#include "qseries/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace qseries {

namespace {

enum class Tok {
    Integer, Ident,
    Plus, Minus, Star, Slash, Caret,
    LParen, RParen, Comma, Semicolon, Percent, At,
    OpenDissect, CloseDissect, Arrow,
    End
};

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto at = [&](std::size_t j) -> unsigned char {
        return j < src.size() ? static_cast<unsigned char>(src[j]) : 0;
    };
    while (i < src.size()) {
        const unsigned char c = at(i);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c)) {
            while (std::isdigit(at(i))) ++i;
            out.push_back({Tok::Integer, start, std::string(src.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            while (std::isalnum(at(i)) || at(i) == '_') ++i;
            out.push_back({Tok::Ident, start, std::string(src.substr(start, i - start))});
            continue;
        }
        switch (c) {
            case '+': out.push_back({Tok::Plus, i++, "+"}); break;
            case '*': out.push_back({Tok::Star, i++, "*"}); break;
            case '/': out.push_back({Tok::Slash, i++, "/"}); break;
            case '^': out.push_back({Tok::Caret, i++, "^"}); break;
            case '(': out.push_back({Tok::LParen, i++, "("}); break;
            case ')': out.push_back({Tok::RParen, i++, ")"}); break;
            case ',': out.push_back({Tok::Comma, i++, ","}); break;
            case ';': out.push_back({Tok::Semicolon, i++, ";"}); break;
            case '%': out.push_back({Tok::Percent, i++, "%"}); break;
            case '@': out.push_back({Tok::At, i++, "@"}); break;
            case '-':
                if (at(i + 1) == '>') {
                    out.push_back({Tok::Arrow, i, "->"});
                    i += 2;
                } else {
                    out.push_back({Tok::Minus, i++, "-"});
                }
                break;
            case '[':
                if (at(i + 1) == '[') {
                    out.push_back({Tok::OpenDissect, i, "[["});
                    i += 2;
                } else {
                    throw SyntaxError("single '[' (dissection uses '[[r]]%m')", i);
                }
                break;
            case ']':
                if (at(i + 1) == ']') {
                    out.push_back({Tok::CloseDissect, i, "]]"});
                    i += 2;
                } else {
                    throw SyntaxError("single ']' (dissection uses '[[r]]%m')", i);
                }
                break;
            default:
                throw SyntaxError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", i);
        }
    }
    out.push_back({Tok::End, src.size(), ""});
    return out;
}

bool is_known_symbol(const std::string& name) {
    if (name == "X" || name == "Y" || name == "R" || name == "Rcal" || name == "Phi" ||
        name == "phi" || name == "alpha" || name == "beta" || name == "gamma" ||
        name == "delta")
        return true;
    for (std::string_view prefix : {"phi_", "u_dag_", "udag_", "u_", "U_"}) {
        if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0) {
            const std::string digits = name.substr(prefix.size());
            if (digits.find_first_not_of("0123456789") == std::string::npos) return true;
        }
    }
    return false;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    int depth_ = 0;

    static constexpr int kMaxDepth = 2000;

    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++index_;
        return true;
    }

    const Token& expect(Tok kind, const std::string& what) {
        if (peek().kind != kind)
            throw SyntaxError("expected " + what, peek().pos);
        return advance();
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxDepth)
                throw SyntaxError("expression nested too deeply", parser.peek().pos);
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    static ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

    long integer_token_as_long(const Token& tok) {
        mpz_class v(tok.text, 10);
        if (!v.fits_slong_p())
            throw SyntaxError("integer too large here", tok.pos);
        return v.get_si();
    }

    // Signed integer used as an exponent / residue / modulus.
    long parse_small_integer(const std::string& what) {
        bool negative = false;
        while (accept(Tok::Minus)) negative = !negative;
        const Token& tok = expect(Tok::Integer, what);
        const long v = integer_token_as_long(tok);
        return negative ? -v : v;
    }

    ExprPtr parse_expr() {
        DepthGuard guard(*this);
        ExprPtr lhs = parse_term();
        for (;;) {
            if (accept(Tok::Plus)) {
                Expr e{Expr::Kind::Add};
                e.a = lhs;
                e.b = parse_term();
                lhs = node(std::move(e));
            } else if (accept(Tok::Minus)) {
                Expr e{Expr::Kind::Sub};
                e.a = lhs;
                e.b = parse_term();
                lhs = node(std::move(e));
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        DepthGuard guard(*this);
        ExprPtr lhs = parse_unary();
        for (;;) {
            if (accept(Tok::Star)) {
                Expr e{Expr::Kind::Mul};
                e.a = lhs;
                e.b = parse_unary();
                lhs = node(std::move(e));
            } else if (accept(Tok::Slash)) {
                Expr e{Expr::Kind::Div};
                e.a = lhs;
                e.b = parse_unary();
                lhs = node(std::move(e));
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_unary() {
        DepthGuard guard(*this);
        if (accept(Tok::Minus)) {
            Expr e{Expr::Kind::Neg};
            e.a = parse_unary();
            return node(std::move(e));
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        DepthGuard guard(*this);
        ExprPtr base = parse_postfix();
        if (accept(Tok::Caret)) {
            Expr e{Expr::Kind::Pow};
            e.a = base;
            e.k = parse_small_integer("integer exponent");
            return node(std::move(e));
        }
        return base;
    }

    ExprPtr parse_postfix() {
        DepthGuard guard(*this);
        ExprPtr base = parse_atom();
        for (;;) {
            if (accept(Tok::OpenDissect)) {
                Expr e{Expr::Kind::Dissect};
                e.a = base;
                e.k = parse_small_integer("dissection residue");
                expect(Tok::CloseDissect, "']]'");
                expect(Tok::Percent, "'%' and the dissection modulus");
                e.m = parse_small_integer("dissection modulus");
                base = node(std::move(e));
            } else if (accept(Tok::At)) {
                expect(Tok::LParen, "'(' after '@'");
                const Token& var = expect(Tok::Ident, "'q'");
                if (var.text != "q") throw SyntaxError("substitution must map q", var.pos);
                expect(Tok::Arrow, "'->'");
                const Token& target = expect(Tok::Ident, "'q'");
                if (target.text != "q") throw SyntaxError("substitution target must be a power of q", target.pos);
                long m = 1;
                if (accept(Tok::Caret)) m = parse_small_integer("substitution power");
                if (m < 1) throw SyntaxError("substitution power must be >= 1", target.pos);
                expect(Tok::RParen, "')'");
                Expr e{Expr::Kind::Substitute};
                e.a = base;
                e.k = m;
                base = node(std::move(e));
            } else {
                return base;
            }
        }
    }

    ExprPtr parse_atom() {
        DepthGuard guard(*this);
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::Integer: {
                advance();
                Expr e{Expr::Kind::Integer};
                e.value = mpz_class(tok.text, 10);
                return node(std::move(e));
            }
            case Tok::Ident: {
                advance();
                if (tok.text == "q") {
                    Expr e{Expr::Kind::Monomial};
                    return node(std::move(e));
                }
                if (!is_known_symbol(tok.text)) throw UnknownSymbol(tok.text, tok.pos);
                Expr e{Expr::Kind::Symbol};
                e.symbol = tok.text;
                return node(std::move(e));
            }
            case Tok::LParen:
                return parse_paren_or_pochhammer();
            default:
                throw SyntaxError("expected a value", tok.pos);
        }
    }

    // '(' already peeked: either a parenthesized expression or a Pochhammer
    // list "(t1,...,tk; q^b)". Disambiguated by the delimiter after the first
    // element.
    ExprPtr parse_paren_or_pochhammer() {
        expect(Tok::LParen, "'('");
        const std::size_t first_pos = peek().pos;
        ExprPtr first = parse_expr();
        if (accept(Tok::RParen)) return first;
        if (peek().kind != Tok::Comma && peek().kind != Tok::Semicolon)
            throw SyntaxError("expected ')', ',' or ';'", peek().pos);

        ProductSpec spec;
        std::vector<std::pair<int, long>> entries;  // (sign, offset)
        entries.push_back(entry_of(first, first_pos));
        while (accept(Tok::Comma)) {
            const std::size_t pos = peek().pos;
            entries.push_back(entry_of(parse_expr(), pos));
        }
        expect(Tok::Semicolon, "';' before the Pochhammer modulus");
        const long b = parse_modulus_monomial();
        expect(Tok::RParen, "')'");
        for (auto [sign, offset] : entries)
            spec.factors.push_back({sign, offset, b});
        Expr e{Expr::Kind::Pochhammer};
        e.product = std::move(spec);
        return node(std::move(e));
    }

    // A Pochhammer entry must denote +/- q^a (with 1 standing for q^0).
    std::pair<int, long> entry_of(const ExprPtr& e, std::size_t pos) {
        int sign = +1;
        const Expr* p = e.get();
        while (p->kind == Expr::Kind::Neg) {
            sign = -sign;
            p = p->a.get();
        }
        switch (p->kind) {
            case Expr::Kind::Monomial:
                return {sign, 1};
            case Expr::Kind::Integer:
                if (p->value == 1) return {sign, 0};
                break;
            case Expr::Kind::Pow:
                if (p->a->kind == Expr::Kind::Monomial && p->k >= 0) return {sign, p->k};
                break;
            default:
                break;
        }
        throw SyntaxError("Pochhammer entry must be +/- q^a or +/- 1", pos);
    }

    long parse_modulus_monomial() {
        const Token& var = expect(Tok::Ident, "'q'");
        if (var.text != "q")
            throw SyntaxError("Pochhammer modulus must be a power of q", var.pos);
        long b = 1;
        if (accept(Tok::Caret)) b = parse_small_integer("modulus exponent");
        if (b < 1) throw SyntaxError("Pochhammer modulus must be >= q^1", var.pos);
        return b;
    }
};

} // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

TruncatedSeries evaluate(const ExprPtr& e, long order) {
    if (order < 0) throw Error("negative truncation order");
    switch (e->kind) {
        case Expr::Kind::Integer:
            return TruncatedSeries::monomial(e->value, 0, order);
        case Expr::Kind::Monomial:
            return TruncatedSeries::monomial(1, 1, order);
        case Expr::Kind::Symbol:
            return named(e->symbol, order);
        case Expr::Kind::Pochhammer:
            return expand_product(e->product, order);
        case Expr::Kind::Add:
            return evaluate(e->a, order) + evaluate(e->b, order);
        case Expr::Kind::Sub:
            return evaluate(e->a, order) - evaluate(e->b, order);
        case Expr::Kind::Mul:
            return evaluate(e->a, order) * evaluate(e->b, order);
        case Expr::Kind::Div: {
            const TruncatedSeries numerator = evaluate(e->a, order);
            const TruncatedSeries denominator = evaluate(e->b, order);
            try {
                return numerator * invert(denominator);
            } catch (const NonUnitConstantTerm& ex) {
                throw NonUnitDivision(ex.what());
            }
        }
        case Expr::Kind::Pow:
            return pow(evaluate(e->a, order), e->k);
        case Expr::Kind::Neg:
            return -evaluate(e->a, order);
        case Expr::Kind::Substitute: {
            const long m = e->k;
            if (m > order) {
                // Only the constant term survives below the truncation order.
                const TruncatedSeries constant = evaluate(e->a, 0);
                return TruncatedSeries::monomial(constant.coeff(0), 0, order);
            }
            const long inner_order = (order + m - 1) / m;
            return truncate(substitute_power(evaluate(e->a, inner_order), m), order);
        }
        case Expr::Kind::Dissect: {
            const long r = e->k, m = e->m;
            if (m < 1 || r < 0 || r >= m)
                throw DissectionIndexOutOfRange(
                    "dissection residue " + std::to_string(r) + " outside [0, " +
                    std::to_string(m) + ")");
            const TruncatedSeries component = dissect(evaluate(e->a, order + r), m, r);
            // The component lives on exponents = 0 mod m; padding up to the
            // requested order only adds exactly-known zeros.
            std::vector<mpz_class> out(static_cast<std::size_t>(order) + 1);
            for (long i = 0; i <= std::min(order, component.order()); ++i)
                out[i] = component.coeff(i);
            return TruncatedSeries(std::move(out));
        }
    }
    throw Error("unreachable expression kind");
}

TruncatedSeries evaluate(std::string_view text, long order) {
    return evaluate(parse(text), order);
}

} // namespace qseries
