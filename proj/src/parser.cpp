#include "diffrad/parser.hpp"

#include <cctype>
#include <istream>

#include "diffrad/error.hpp"

namespace diffrad {

namespace {

constexpr std::size_t kMaxDepth = 200;
constexpr unsigned long kMaxExponent = 4096;

enum class Tok { Integer, Ident, Plus, Minus, Star, Pow, Slash, LParen, RParen, Comma, Semicolon, End };

struct Token {
    Tok kind;
    std::size_t position;
    std::string text;
};

std::string describe(Tok t) {
    switch (t) {
    case Tok::Integer: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Pow: return "'^'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semicolon: return "';'";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < src.size()) {
        const unsigned char ch = static_cast<unsigned char>(src[k]);
        if (std::isspace(ch)) {
            ++k;
            continue;
        }
        const std::size_t start = k;
        if (std::isdigit(ch)) {
            while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
            out.push_back({Tok::Integer, start, std::string(src.substr(start, k - start))});
            continue;
        }
        if (std::isalpha(ch) || ch == '_') {
            while (k < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) {
                ++k;
            }
            out.push_back({Tok::Ident, start, std::string(src.substr(start, k - start))});
            continue;
        }
        Tok kind;
        switch (ch) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*':
            if (k + 1 < src.size() && src[k + 1] == '*') {
                out.push_back({Tok::Pow, start, "**"});
                k += 2;
                continue;
            }
            kind = Tok::Star;
            break;
        case '^': kind = Tok::Pow; break;
        case '/': kind = Tok::Slash; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case ';': kind = Tok::Semicolon; break;
        default:
            throw ParseError(ErrorCode::SyntaxError, start, {}, "unexpected character '" + std::string(1, src[k]) + "'");
        }
        out.push_back({kind, start, std::string(1, src[k])});
        ++k;
    }
    out.push_back({Tok::End, src.size(), ""});
    return out;
}

ExprPtr make(ExprNode::Kind kind, std::size_t pos, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->position = pos;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    const Token& peek() const { return tokens_[pos_]; }
    bool at(Tok t) const { return peek().kind == t; }
    Token take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what = "") const {
        const Token& t = peek();
        std::string msg = what.empty() ? "unexpected " + (t.kind == Tok::End ? describe(t.kind) : "'" + t.text + "'")
                                       : what;
        throw ParseError(ErrorCode::SyntaxError, t.position, std::move(expected), msg);
    }

    Token expect(Tok t) {
        if (!at(t)) fail({describe(t)});
        return take();
    }

    void expect_end(std::vector<std::string> expected) {
        if (!at(Tok::End)) fail(std::move(expected));
    }

    ExprPtr expr() {
        Guard g(*this);
        ExprPtr lhs = term();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            Token op = take();
            ExprPtr rhs = term();
            lhs = make(op.kind == Tok::Plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub, op.position, std::move(lhs),
                       std::move(rhs));
        }
        return lhs;
    }

    Integer integer() {
        Token t = expect(Tok::Integer);
        return Integer(t.text);
    }

private:
    struct Guard {
        Parser& p;
        explicit Guard(Parser& parser) : p(parser) {
            if (++p.depth_ > kMaxDepth) p.fail({}, "expression nested too deeply");
        }
        ~Guard() { --p.depth_; }
    };

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (at(Tok::Star) || at(Tok::Slash)) {
            Token op = take();
            ExprPtr rhs = unary();
            lhs = make(op.kind == Tok::Star ? ExprNode::Kind::Mul : ExprNode::Kind::Div, op.position, std::move(lhs),
                       std::move(rhs));
        }
        return lhs;
    }

    ExprPtr unary() {
        Guard g(*this);
        if (at(Tok::Minus)) {
            Token op = take();
            return make(ExprNode::Kind::Neg, op.position, unary());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (!at(Tok::Pow)) return base;
        Token op = take();
        if (at(Tok::Minus)) {
            throw ParseError(ErrorCode::NegativeExponent, peek().position, {"integer"},
                             "exponents must be non-negative integers");
        }
        if (!at(Tok::Integer)) fail({"integer"});
        Token e = take();
        if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponent) {
            throw ParseError(ErrorCode::SyntaxError, e.position, {}, "exponent exceeds " + std::to_string(kMaxExponent));
        }
        ExprPtr n = make(ExprNode::Kind::Pow, op.position, std::move(base));
        n->exponent = std::stoul(e.text);
        return n;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Integer: {
            Token tok = take();
            auto n = make(ExprNode::Kind::Integer, tok.position);
            n->value = Integer(tok.text);
            return n;
        }
        case Tok::LParen: {
            Token open = take();
            ExprPtr inner = expr();
            expect(Tok::RParen);
            return make(ExprNode::Kind::Group, open.position, std::move(inner));
        }
        case Tok::Ident: {
            Token tok = take();
            if (tok.text == "z") return make(ExprNode::Kind::Variable, tok.position);
            if (tok.text == "i") return make(ExprNode::Kind::Imaginary, tok.position);
            if (tok.text == "sqrt") {
                expect(Tok::LParen);
                bool negative = false;
                if (at(Tok::Minus)) {
                    take();
                    negative = true;
                }
                if (!at(Tok::Integer)) fail({negative ? "integer" : "'-'", "integer"});
                auto n = make(ExprNode::Kind::Sqrt, tok.position);
                n->value = integer();
                if (negative) n->value = -n->value;
                expect(Tok::RParen);
                return n;
            }
            throw ParseError(ErrorCode::UnknownConstant, tok.position, {"z", "i", "sqrt"},
                             "unknown symbol '" + tok.text + "'");
        }
        default:
            fail({"integer", "'i'", "'sqrt'", "'z'", "'('", "'-'"});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

const std::vector<std::string> kAfterExpr{"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"};

FieldElement constant_of(const Polynomial& p, std::size_t position) {
    if (p.degree() > 0) throw ParseError(ErrorCode::SyntaxError, position, {}, "expected a constant, got a polynomial in z");
    return p.coeff(0);
}

FieldElement sqrt_constant(const Integer& n, const TowerPtr& tower, std::size_t position) {
    if (sgn(n) == 0) return FieldElement::rational(tower, 0);
    auto r = principal_sqrt(FieldElement::rational(tower, Rational(n)));
    if (!r) {
        throw ParseError(ErrorCode::UnknownConstant, position, {},
                         "sqrt(" + n.get_str() + ") is not in " + tower->describe());
    }
    return *r;
}

}  // namespace

ExprPtr parse_expr(std::string_view src) {
    Parser p(src);
    ExprPtr e = p.expr();
    p.expect_end(kAfterExpr);
    return e;
}

Polynomial evaluate(const ExprNode& node, const TowerPtr& tower) {
    using K = ExprNode::Kind;
    switch (node.kind) {
    case K::Integer: return Polynomial::constant(FieldElement::rational(tower, Rational(node.value)));
    case K::Imaginary: return Polynomial::constant(sqrt_constant(Integer(-1), tower, node.position));
    case K::Sqrt: return Polynomial::constant(sqrt_constant(node.value, tower, node.position));
    case K::Variable: return Polynomial::monomial(FieldElement::rational(tower, 1), 1);
    case K::Neg: return -evaluate(*node.lhs, tower);
    case K::Group: return evaluate(*node.lhs, tower);
    case K::Add: return evaluate(*node.lhs, tower) + evaluate(*node.rhs, tower);
    case K::Sub: return evaluate(*node.lhs, tower) - evaluate(*node.rhs, tower);
    case K::Mul: return evaluate(*node.lhs, tower) * evaluate(*node.rhs, tower);
    case K::Div: {
        Polynomial den = evaluate(*node.rhs, tower);
        if (den.degree() > 0) {
            throw ParseError(ErrorCode::NonConstantDivisor, node.position, {}, "division by a non-constant polynomial");
        }
        if (den.is_zero()) throw ParseError(ErrorCode::DivisionByZero, node.position, {}, "division by zero");
        return scale(evaluate(*node.lhs, tower), den.coeff(0).inverse());
    }
    case K::Pow: return pow(evaluate(*node.lhs, tower), static_cast<unsigned>(node.exponent));
    }
    throw Error(ErrorCode::InvalidArgument, "corrupt expression tree");
}

Polynomial parse_poly(std::string_view src, const TowerPtr& tower) { return evaluate(*parse_expr(src), tower); }

FieldElement parse_constant(std::string_view src, const TowerPtr& tower) {
    return constant_of(parse_poly(src, tower), 0).lifted_to(tower);
}

namespace {

std::pair<FieldElement, long> root_pair(Parser& p, const TowerPtr& tower) {
    p.expect(Tok::LParen);
    const std::size_t at = p.peek().position;
    FieldElement root = constant_of(evaluate(*p.expr(), tower), at).lifted_to(tower);
    p.expect(Tok::Comma);
    bool negative = false;
    if (p.at(Tok::Minus)) {
        p.take();
        negative = true;
    }
    const std::size_t mult_at = p.peek().position;
    Integer m = p.integer();
    if (negative) m = -m;
    p.expect(Tok::RParen);
    if (sgn(m) <= 0) {
        throw ParseError(ErrorCode::NonPositiveMultiplicity, mult_at, {}, "multiplicity must be positive");
    }
    if (!m.fits_slong_p()) throw ParseError(ErrorCode::SyntaxError, mult_at, {}, "multiplicity too large");
    return {std::move(root), m.get_si()};
}

}  // namespace

FactoredPoly parse_factored(std::string_view src, const TowerPtr& tower) {
    Parser p(src);
    const std::size_t at = p.peek().position;
    FieldElement gamma = constant_of(evaluate(*p.expr(), tower), at).lifted_to(tower);
    if (gamma.is_zero()) throw ParseError(ErrorCode::ZeroLeading, at, {}, "leading coefficient is zero");
    std::vector<FactoredPoly::Factor> factors;
    if (p.at(Tok::Semicolon)) {
        p.take();
        if (!p.at(Tok::End)) {
            factors.push_back(root_pair(p, tower));
            while (p.at(Tok::Comma)) {
                p.take();
                factors.push_back(root_pair(p, tower));
            }
        }
    }
    p.expect_end({"';'", "','", "end of input"});
    return FactoredPoly(std::move(gamma), std::move(factors));
}

std::pair<FieldElement, long> parse_root_pair(std::string_view src, const TowerPtr& tower) {
    Parser p(src);
    auto out = root_pair(p, tower);
    p.expect_end({"end of input"});
    return out;
}

std::string print_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    auto emit = [&](bool negative, const std::string& body) {
        if (first) {
            out += negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    };
    for (long k = p.degree(); k >= 0; --k) {
        const FieldElement& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const std::string zpow = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        auto terms = signed_terms(c);
        if (k == 0) {
            for (const auto& [neg, body] : terms) emit(neg, body);
        } else if (terms.size() == 1) {
            const auto& [neg, body] = terms.front();
            emit(neg, body == "1" ? zpow : body + "*" + zpow);
        } else {
            emit(false, "(" + to_string(c) + ")*" + zpow);
        }
    }
    return out;
}

std::string print_factored(const FactoredPoly& f) {
    std::string out = to_string(f.leading()) + " ;";
    bool first = true;
    for (const auto& [root, mult] : f.factors()) {
        out += first ? " " : ", ";
        out += "(" + to_string(root) + ", " + std::to_string(mult) + ")";
        first = false;
    }
    return out;
}

std::vector<std::string> read_object_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r\n");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace diffrad
