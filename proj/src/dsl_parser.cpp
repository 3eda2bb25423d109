#include "opalg/dsl/parser.hpp"

#include "opalg/dsl/runner.hpp"

#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace opalg::dsl {

namespace {

enum class Tok {
    Ident, Number,
    LParen, RParen, LBracket, RBracket, LBrace, RBrace,
    Comma, Semi, Colon, Assign, EqEq, Plus, Minus, Star, Caret, Slash,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceSpan span;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::Colon: return "':'";
        case Tok::Assign: return "'='";
        case Tok::EqEq: return "'=='";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::Slash: return "'/'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') { bump(text[i]); ++i; }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump(c);
            ++i;
            continue;
        }
        SourceSpan span{line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                s += text[i];
                bump(text[i]);
                ++i;
            }
            out.push_back({Tok::Ident, s, span});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                s += text[i];
                bump(text[i]);
                ++i;
            }
            out.push_back({Tok::Number, s, span});
            continue;
        }
        auto push1 = [&](Tok k) {
            out.push_back({k, std::string(1, c), span});
            bump(c);
            ++i;
        };
        switch (c) {
            case '(': push1(Tok::LParen); break;
            case ')': push1(Tok::RParen); break;
            case '[': push1(Tok::LBracket); break;
            case ']': push1(Tok::RBracket); break;
            case '{': push1(Tok::LBrace); break;
            case '}': push1(Tok::RBrace); break;
            case ',': push1(Tok::Comma); break;
            case ';': push1(Tok::Semi); break;
            case ':': push1(Tok::Colon); break;
            case '+': push1(Tok::Plus); break;
            case '-': push1(Tok::Minus); break;
            case '*': push1(Tok::Star); break;
            case '^': push1(Tok::Caret); break;
            case '/': push1(Tok::Slash); break;
            case '=':
                if (i + 1 < text.size() && text[i + 1] == '=') {
                    out.push_back({Tok::EqEq, "==", span});
                    bump('=');
                    bump('=');
                    i += 2;
                } else {
                    push1(Tok::Assign);
                }
                break;
            default:
                throw ParseError(span, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", {line, col}});
    return out;
}

bool is_reserved(const std::string& s) {
    static const std::set<std::string> kReserved = {
        "axioms", "comm", "def", "commuting", "let", "assert", "forall", "under",
        "ddt", "sum", "hbar", "c", "i", "Id", "Q", "P", "V", "H",
    };
    return kReserved.count(s) > 0;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Script parse_script() {
        Script s;
        while (peek().kind != Tok::End) s.statements.push_back(parse_statement());
        return s;
    }

    NodePtr parse_single_expr() {
        NodePtr e = parse_expr();
        expect(Tok::End);
        return e;
    }

private:
    const Token& peek(int ahead = 0) const {
        std::size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const Token& t, const std::string& expected) {
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.span, "expected " + expected + ", got " + got);
    }

    Token expect(Tok k) {
        if (peek().kind != k) fail(peek(), tok_name(k));
        return next();
    }

    Token expect_keyword(const std::string& kw) {
        if (peek().kind != Tok::Ident || peek().text != kw) fail(peek(), "'" + kw + "'");
        return next();
    }

    bool at_keyword(const std::string& kw) const {
        return peek().kind == Tok::Ident && peek().text == kw;
    }

    // ----- statements -----

    Statement parse_statement() {
        const Token& t = peek();
        if (t.kind != Tok::Ident) fail(t, "a statement ('axioms', 'let', 'assert' or 'forall')");
        if (t.text == "axioms") return parse_axiom_decl();
        if (t.text == "let") return parse_let();
        if (t.text == "assert") return parse_assert({});
        if (t.text == "forall") return parse_forall();
        fail(t, "a statement ('axioms', 'let', 'assert' or 'forall')");
    }

    Statement parse_axiom_decl() {
        Token kw = expect_keyword("axioms");
        Token name = expect(Tok::Ident);
        if (is_reserved(name.text))
            throw ParseError(name.span, "'" + name.text + "' is reserved");
        expect(Tok::LBrace);
        AxiomDeclStmt decl;
        decl.name = name.text;
        decl.span = kw.span;
        while (peek().kind != Tok::RBrace) {
            if (at_keyword("comm")) {
                decl.rules.push_back(parse_comm_rule());
            } else if (at_keyword("def")) {
                decl.rules.push_back(parse_def_rule());
            } else if (at_keyword("commuting")) {
                decl.rules.push_back(parse_family_rule());
            } else {
                fail(peek(), "'comm', 'def', 'commuting' or '}'");
            }
        }
        expect(Tok::RBrace);
        axiom_sets_.insert(decl.name);
        return decl;
    }

    RuleDecl parse_comm_rule() {
        RuleDecl r;
        r.kind = RuleDecl::Kind::Comm;
        r.span = expect_keyword("comm").span;
        expect(Tok::LParen);
        r.a = parse_concrete_atom();
        expect(Tok::Comma);
        r.b = parse_concrete_atom();
        expect(Tok::RParen);
        expect(Tok::Assign);
        Token at = peek();
        NodePtr value = parse_expr();
        expect(Tok::Semi);
        r.value = eval_rule_expr(value, at.span);
        return r;
    }

    RuleDecl parse_def_rule() {
        RuleDecl r;
        r.kind = RuleDecl::Kind::Def;
        r.span = expect_keyword("def").span;
        r.def_atom = parse_concrete_atom();
        expect(Tok::Assign);
        Token at = peek();
        NodePtr value = parse_expr();
        expect(Tok::Semi);

        Expr e = eval_rule_expr(value, at.span);
        auto terms = e.terms();
        if (terms.size() != 1)
            throw ParseError(at.span, "a definition must be a single product term");
        const Term& t = terms.front();
        Scalar coeff = t.coeff;
        int hpow = 0;
        const Atom* target = nullptr;
        for (const auto& a : t.monomial) {
            if (a.kind == AtomKind::Hpow) {
                hpow += a.power;
            } else if (target == nullptr) {
                target = &a;
            } else {
                throw ParseError(at.span, "a definition must name exactly one non-H atom");
            }
        }
        if (target == nullptr || !target->is_indexed())
            throw ParseError(at.span, "a definition must name exactly one indexed atom");
        if (r.def_atom == *target)
            throw ParseError(at.span, "a definition cannot be self-referential");
        r.def_coeff = coeff;
        r.def_hpow = hpow;
        r.def_target = *target;
        return r;
    }

    RuleDecl parse_family_rule() {
        RuleDecl r;
        r.kind = RuleDecl::Kind::Family;
        r.span = expect_keyword("commuting").span;
        expect(Tok::LBrace);
        while (true) {
            Token k = expect(Tok::Ident);
            if (k.text == "H") r.family.push_back(AtomKind::Hpow);
            else if (k.text == "P") r.family.push_back(AtomKind::P);
            else if (k.text == "V") r.family.push_back(AtomKind::V);
            else if (k.text == "Q") r.family.push_back(AtomKind::Q);
            else throw ParseError(k.span, "expected an atom kind (H, P, V or Q)");
            if (peek().kind == Tok::Comma) { next(); continue; }
            break;
        }
        expect(Tok::RBrace);
        expect(Tok::Semi);
        return r;
    }

    Statement parse_let() {
        Token kw = expect_keyword("let");
        Token name = expect(Tok::Ident);
        if (is_reserved(name.text))
            throw ParseError(name.span, "'" + name.text + "' is reserved");
        if (lets_.count(name.text))
            throw ParseError(name.span, "'" + name.text + "' is already defined");
        expect(Tok::Assign);
        NodePtr value = parse_expr();
        expect(Tok::Semi);
        lets_.insert(name.text);
        return LetStmt{name.text, value, kw.span};
    }

    Statement parse_forall() {
        Token kw = expect_keyword("forall");
        std::vector<std::string> vars;
        while (true) {
            Token v = expect(Tok::Ident);
            if (bound_.count(v.text))
                throw ParseError(v.span, "index '" + v.text + "' is already bound");
            vars.push_back(v.text);
            bound_.insert(v.text);
            if (peek().kind == Tok::Comma) { next(); continue; }
            break;
        }
        expect(Tok::Colon);
        Statement inner = parse_assert(vars);
        for (const auto& v : vars) bound_.erase(v);
        auto st = std::get<AssertStmt>(inner);
        st.span = kw.span;
        return st;
    }

    Statement parse_assert(std::vector<std::string> vars) {
        Token kw = expect_keyword("assert");
        AssertStmt st;
        st.span = kw.span;
        st.forall_vars = std::move(vars);
        st.lhs = parse_expr();
        expect(Tok::EqEq);
        st.rhs = parse_expr();
        expect_keyword("under");
        Token set = expect(Tok::Ident);
        if (!axiom_sets_.count(set.text))
            throw ParseError(set.span, "axiom set '" + set.text + "' has not been declared");
        st.set_name = set.text;
        expect(Tok::Semi);
        return st;
    }

    // ----- expressions -----

    NodePtr parse_expr() {
        SourceSpan span = peek().span;
        std::vector<NodePtr> kids;
        std::vector<int> signs;
        int sign = 1;
        if (peek().kind == Tok::Minus) {
            next();
            sign = -1;
        }
        kids.push_back(parse_term());
        signs.push_back(sign);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            signs.push_back(next().kind == Tok::Plus ? 1 : -1);
            kids.push_back(parse_term());
        }
        if (kids.size() == 1 && signs[0] == 1) return kids[0];
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Sum;
        n->span = span;
        n->kids = std::move(kids);
        n->signs = std::move(signs);
        return n;
    }

    NodePtr parse_term() {
        SourceSpan span = peek().span;
        std::vector<NodePtr> kids{parse_factor()};
        while (peek().kind == Tok::Star) {
            next();
            kids.push_back(parse_factor());
        }
        if (kids.size() == 1) return kids[0];
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Prod;
        n->span = span;
        n->kids = std::move(kids);
        return n;
    }

    NodePtr parse_factor() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            next();
            NodePtr e = parse_expr();
            expect(Tok::RParen);
            return e;
        }
        if (t.kind == Tok::Number) return parse_rational();
        if (t.kind != Tok::Ident) fail(t, "an expression factor");

        if (t.text == "comm") {
            Token kw = next();
            expect(Tok::LParen);
            NodePtr a = parse_expr();
            expect(Tok::Comma);
            NodePtr b = parse_expr();
            expect(Tok::RParen);
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Comm;
            n->span = kw.span;
            n->kids = {a, b};
            return n;
        }
        if (t.text == "ddt") {
            Token kw = next();
            expect(Tok::LParen);
            NodePtr a = parse_expr();
            expect(Tok::RParen);
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Ddt;
            n->span = kw.span;
            n->kids = {a};
            return n;
        }
        if (t.text == "sum") {
            Token kw = next();
            expect(Tok::LParen);
            Token var = expect(Tok::Ident);
            if (bound_.count(var.text))
                throw ParseError(var.span, "index '" + var.text + "' is already bound");
            expect(Tok::Comma);
            bound_.insert(var.text);
            NodePtr body = parse_expr();
            bound_.erase(var.text);
            expect(Tok::RParen);
            // Eager three-term expansion; the engine never sees a binder.
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Sum;
            n->span = kw.span;
            for (int v = 1; v <= 3; ++v) {
                auto bind = std::make_shared<Node>();
                bind->kind = Node::Kind::IdxBind;
                bind->span = kw.span;
                bind->name = var.text;
                bind->bind_value = v;
                bind->kids = {body};
                n->kids.push_back(bind);
                n->signs.push_back(1);
            }
            return n;
        }
        if (t.text == "Q" || t.text == "P" || t.text == "V") return parse_indexed_atom();
        if (t.text == "H") {
            Token kw = next();
            int pow = 1;
            if (peek().kind == Tok::Caret) {
                next();
                pow = parse_signed_int();
            }
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::AtomLit;
            n->span = kw.span;
            n->atom.kind = AtomKind::Hpow;
            n->atom.power = pow;
            return n;
        }
        if (t.text == "Id") {
            Token kw = next();
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::AtomLit;
            n->span = kw.span;
            n->atom.kind = AtomKind::Id;
            return n;
        }
        if (t.text == "i") return scalar_factor(Scalar::i_unit());
        if (t.text == "hbar") {
            Token kw = next();
            int pow = 1;
            if (peek().kind == Tok::Caret) { next(); pow = parse_signed_int(); }
            return scalar_node(Scalar::hbar(pow), kw.span);
        }
        if (t.text == "c") {
            Token kw = next();
            int pow = 1;
            if (peek().kind == Tok::Caret) { next(); pow = parse_signed_int(); }
            return scalar_node(Scalar::c(pow), kw.span);
        }

        // Anything else must be a let-bound name.
        Token name = next();
        if (!lets_.count(name.text))
            throw ParseError(name.span, "undeclared name '" + name.text + "'");
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::NameRef;
        n->span = name.span;
        n->name = name.text;
        return n;
    }

    NodePtr scalar_factor(const Scalar& s) {
        Token kw = next();
        return scalar_node(s, kw.span);
    }

    NodePtr scalar_node(const Scalar& s, SourceSpan span) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::ScalarLit;
        n->span = span;
        n->scalar = s;
        return n;
    }

    NodePtr parse_indexed_atom() {
        Token kw = next();
        AtomKind kind = kw.text == "Q"   ? AtomKind::Q
                        : kw.text == "P" ? AtomKind::P
                                         : AtomKind::V;
        expect(Tok::LBracket);
        IdxRef idx = parse_index();
        expect(Tok::RBracket);
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::AtomLit;
        n->span = kw.span;
        n->atom.kind = kind;
        n->atom.index = idx;
        return n;
    }

    IdxRef parse_index() {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            Token num = next();
            int v = std::stoi(num.text);
            if (v < 1 || v > 3)
                throw ParseError(num.span, "index must be 1, 2 or 3");
            return IdxRef{v, ""};
        }
        if (t.kind == Tok::Ident) {
            Token var = next();
            if (!bound_.count(var.text))
                throw ParseError(var.span, "unbound index '" + var.text + "'");
            return IdxRef{0, var.text};
        }
        fail(t, "an index (digit or bound variable)");
    }

    NodePtr parse_rational() {
        Token num = expect(Tok::Number);
        BigInt n(num.text);
        BigInt d(1);
        if (peek().kind == Tok::Slash) {
            next();
            Token den = expect(Tok::Number);
            d = BigInt(den.text);
            if (d == 0) throw ParseError(den.span, "zero denominator");
        }
        return scalar_node(Scalar::rational(Rational(n, d)), num.span);
    }

    int parse_signed_int() {
        int sign = 1;
        if (peek().kind == Tok::Minus) {
            next();
            sign = -1;
        }
        Token num = expect(Tok::Number);
        return sign * std::stoi(num.text);
    }

    // Atom with a concrete digit index, as required inside axiom declarations.
    Atom parse_concrete_atom() {
        const Token& t = peek();
        if (t.kind != Tok::Ident) fail(t, "an atom");
        if (t.text == "Q" || t.text == "P" || t.text == "V") {
            Token kw = next();
            expect(Tok::LBracket);
            Token num = expect(Tok::Number);
            int v = std::stoi(num.text);
            if (v < 1 || v > 3) throw ParseError(num.span, "index must be 1, 2 or 3");
            expect(Tok::RBracket);
            if (kw.text == "Q") return Atom::Qi(v);
            if (kw.text == "P") return Atom::Pi(v);
            return Atom::Vi(v);
        }
        if (t.text == "H") {
            next();
            int pow = 1;
            if (peek().kind == Tok::Caret) { next(); pow = parse_signed_int(); }
            return Atom::H(pow);
        }
        if (t.text == "Id") {
            next();
            return Atom::id();
        }
        fail(t, "an atom");
    }

    // Axiom rule right-hand sides are plain operator polynomials.
    Expr eval_rule_expr(const NodePtr& n, SourceSpan span) {
        try {
            return eval_pure(n, {});
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& ex) {
            throw ParseError(span, std::string("invalid axiom value: ") + ex.what());
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::set<std::string> axiom_sets_;
    std::set<std::string> lets_;
    std::set<std::string> bound_;
};

}  // namespace

Script parse(const std::string& text) {
    Parser p(text);
    return p.parse_script();
}

NodePtr parse_expr_text(const std::string& text) {
    Parser p(text);
    return p.parse_single_expr();
}

}  // namespace opalg::dsl
