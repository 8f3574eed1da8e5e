#include <cctype>
#include <sstream>

#include "pellforge/mpoly.hpp"

namespace pellforge {

namespace {

bool coef_is_negative(const DomainOps& ops, const Coef& c) {
    switch (ops.dom.kind()) {
        case DomainKind::Integer:
            return std::get<Int>(c) < 0;
        case DomainKind::Rational:
            return std::get<Rat>(c) < 0;
        default:
            return false;  // no meaningful sign for residues / field elements
    }
}

// coefficient magnitude string plus whether it should be printed even with a
// monomial present (|c| != 1)
std::string coef_body(const DomainOps& ops, const Coef& c, bool* print_one) {
    *print_one = true;
    switch (ops.dom.kind()) {
        case DomainKind::Integer: {
            Int a = abs(std::get<Int>(c));
            *print_one = a != 1;
            return a.get_str();
        }
        case DomainKind::Rational: {
            Rat r = abs(std::get<Rat>(c));
            *print_one = r != 1;
            if (r.get_den() == 1) return r.get_num().get_str();
            return r.get_num().get_str() + "/" + r.get_den().get_str();
        }
        case DomainKind::ModPrimePower:
        case DomainKind::PrimeField: {
            const Int& a = std::get<Int>(c);
            *print_one = a != 1;
            return a.get_str();
        }
        case DomainKind::NumberFieldK: {
            const NFElem& e = std::get<NFElem>(c);
            if (e.is_rational()) {
                Rat r = abs(e.rational_part());
                *print_one = r != 1;
                if (r.get_den() == 1) return r.get_num().get_str();
                return r.get_num().get_str() + "/" + r.get_den().get_str();
            }
            std::string s = e.to_string();
            if (s.front() != '(') s = "(" + s + ")";
            return s;
        }
    }
    return "?";
}

}  // namespace

std::string MPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t t = 0; t < nterms(); ++t) {
        Coef c = coefs_[t];
        bool neg = coef_is_negative(ops_, c);
        if (ops_.dom.kind() == DomainKind::NumberFieldK) {
            const NFElem& e = std::get<NFElem>(c);
            if (e.is_rational() && e.rational_part() < 0) neg = true;
        }
        if (t == 0) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = ops_.neg(c);
        bool print_coef = true;
        std::string body = coef_body(ops_, c, &print_coef);
        auto e = exps(t);
        bool any_var = false;
        for (uint32_t x : e)
            if (x) any_var = true;
        if (!any_var) {
            os << body;
            continue;
        }
        bool star = false;
        if (print_coef) {
            os << body;
            star = true;
        }
        for (size_t v = 0; v < nvars(); ++v) {
            if (!e[v]) continue;
            if (star) os << "*";
            os << (*vars_)[v];
            if (e[v] > 1) os << "^" << e[v];
            star = true;
        }
    }
    return os.str();
}

namespace {

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, ""};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Num, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+"}; return;
            case '-': tok_ = {Token::Minus, "-"}; return;
            case '*': tok_ = {Token::Star, "*"}; return;
            case '/': tok_ = {Token::Slash, "/"}; return;
            case '^': tok_ = {Token::Caret, "^"}; return;
            case '(': tok_ = {Token::LParen, "("}; return;
            case ')': tok_ = {Token::RParen, ")"}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }
    const std::string& s_;
    size_t i_ = 0;
    Token tok_;
};

// Parses over Rational coefficients with an extended variable list; '/' is
// accepted whenever the divisor is a nonzero constant.
class PolyParser {
public:
    PolyParser(const std::string& text, const VarList& vars)
        : lex_(text),
          dom_(CoefDomain::rationals()),
          vars_(vars),
          ops_(dom_) {}

    MPoly parse_expr() {
        MPoly acc = parse_term_signed();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Plus) {
                lex_.next();
                acc = acc + parse_term();
            } else if (k == Token::Minus) {
                lex_.next();
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    void expect_end() {
        if (lex_.peek().kind != Token::End) throw ParseError("trailing input: " + lex_.peek().text);
    }

private:
    MPoly parse_term_signed() {
        bool neg = false;
        while (lex_.peek().kind == Token::Minus || lex_.peek().kind == Token::Plus) {
            if (lex_.next().kind == Token::Minus) neg = !neg;
        }
        MPoly t = parse_term();
        return neg ? -t : t;
    }

    MPoly parse_term() {
        MPoly acc = parse_factor();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Star) {
                lex_.next();
                acc = acc * parse_factor();
            } else if (k == Token::Slash) {
                lex_.next();
                MPoly d = parse_factor();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("division only by nonzero constants in polynomial context");
                acc = acc.mul_coef(ops_.inv(d.constant_value()));
            } else if (k == Token::Num || k == Token::Ident || k == Token::LParen) {
                acc = acc * parse_factor();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    MPoly parse_factor() {
        MPoly base = parse_primary();
        if (lex_.peek().kind == Token::Caret) {
            lex_.next();
            bool neg = false;
            if (lex_.peek().kind == Token::Minus) {
                lex_.next();
                neg = true;
            }
            Token e = lex_.next();
            if (e.kind != Token::Num) throw ParseError("expected exponent after '^'");
            unsigned long n = std::stoul(e.text);
            if (neg) {
                if (!base.is_constant() || base.is_zero())
                    throw ParseError("negative exponent on non-constant");
                return MPoly::constant(dom_, vars_,
                                       ops_.pow(ops_.inv(base.constant_value()), n));
            }
            return base.pow(n);
        }
        return base;
    }

    MPoly parse_primary() {
        Token t = lex_.next();
        switch (t.kind) {
            case Token::Num:
                return MPoly::constant(dom_, vars_, Coef(Rat(int_from_string(t.text))));
            case Token::Ident:
                return MPoly::variable(dom_, vars_, t.text);
            case Token::LParen: {
                MPoly e = parse_expr();
                if (lex_.next().kind != Token::RParen) throw ParseError("missing ')'");
                return e;
            }
            case Token::Minus:
                return -parse_primary();
            default:
                throw ParseError("unexpected token '" + t.text + "'");
        }
    }

    Lexer lex_;
    CoefDomain dom_;
    VarList vars_;
    DomainOps ops_;
};

}  // namespace

MPoly MPoly::parse(const CoefDomain& dom, const VarList& vars, const std::string& text) {
    // For number-field domains the generator is one more parse variable whose
    // powers fold into the coefficients afterwards.
    VarList pvars = vars;
    size_t zidx = SIZE_MAX;
    if (dom.kind() == DomainKind::NumberFieldK) {
        std::vector<std::string> names(*vars);
        names.push_back(dom.field()->var());
        zidx = names.size() - 1;
        pvars = make_vars(std::move(names));
    }
    PolyParser parser(text, pvars);
    MPoly q = parser.parse_expr();
    parser.expect_end();

    DomainOps ops{dom};
    std::vector<std::pair<std::vector<uint32_t>, Coef>> terms;
    for (size_t t = 0; t < q.nterms(); ++t) {
        auto e = q.exps(t);
        const Rat& r = std::get<Rat>(q.coef(t));
        if (dom.kind() == DomainKind::NumberFieldK) {
            std::vector<uint32_t> ne(e.begin(), e.end() - 1);
            NFElem theta = NFElem::generator(dom.field());
            NFElem c = theta.pow(static_cast<long>(e[zidx])) * r;
            terms.emplace_back(std::move(ne), Coef(std::move(c)));
        } else {
            terms.emplace_back(std::vector<uint32_t>(e.begin(), e.end()), ops.from_rat(r));
        }
    }
    return MPoly::from_terms(dom, vars, std::move(terms));
}

RatFunc RatFunc::parse(const CoefDomain& dom, const VarList& vars, const std::string& text) {
    // Accept "num / den" at top level; fall back to polynomial parse.
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0) {
            // try splitting here; only valid if both sides parse standalone
            try {
                MPoly n = MPoly::parse(dom, vars, text.substr(0, i));
                MPoly d = MPoly::parse(dom, vars, text.substr(i + 1));
                return RatFunc(std::move(n), std::move(d));
            } catch (const ParseError&) {
                break;
            }
        }
    }
    return RatFunc::from_poly(MPoly::parse(dom, vars, text));
}

std::string RatFunc::to_string() const {
    if (is_poly()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    if (num_.nterms() > 1) n = "(" + n + ")";
    if (den_.nterms() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace pellforge
