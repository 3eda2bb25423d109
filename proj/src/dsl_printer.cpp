#include "opalg/dsl/printer.hpp"

#include <map>
#include <sstream>
#include <variant>

namespace opalg::dsl {

namespace {

// One printable piece: a real or imaginary component of a term's coefficient.
struct Piece {
    bool negative = false;
    std::string body;
};

void append_unit_factors(std::vector<std::string>& factors, bool imag, int hbar_exp,
                         int c_exp) {
    if (imag) factors.push_back("i");
    if (hbar_exp != 0)
        factors.push_back(hbar_exp == 1 ? "hbar" : "hbar^" + std::to_string(hbar_exp));
    if (c_exp != 0) factors.push_back(c_exp == 1 ? "c" : "c^" + std::to_string(c_exp));
}

Piece make_piece(const Rational& r, bool imag, int hbar_exp, int c_exp,
                 const Monomial& mono) {
    Piece piece;
    piece.negative = r.is_negative();
    Rational mag = r.abs();

    std::vector<std::string> factors;
    if (!mag.is_one()) factors.push_back(mag.str());
    append_unit_factors(factors, imag, hbar_exp, c_exp);
    if (mono.empty()) {
        factors.push_back("Id");
    } else {
        for (const auto& a : mono) factors.push_back(atom_text(a));
    }

    std::ostringstream os;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) os << "*";
        os << factors[k];
    }
    piece.body = os.str();
    return piece;
}

std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k == 0) {
            if (pieces[k].negative) os << "-";
        } else {
            os << (pieces[k].negative ? " - " : " + ");
        }
        os << pieces[k].body;
    }
    return os.str();
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::vector<Piece> pieces;
    for (const auto& t : e.terms()) {
        const Scalar& s = t.coeff;
        if (!s.q.re.is_zero())
            pieces.push_back(make_piece(s.q.re, false, s.hbar_exp, s.c_exp, t.monomial));
        if (!s.q.im.is_zero())
            pieces.push_back(make_piece(s.q.im, true, s.hbar_exp, s.c_exp, t.monomial));
    }
    return join_pieces(pieces);
}

namespace {

using Env = std::map<std::string, int>;

std::string fmt(const NodePtr& n, const Env& env);

std::string fmt_scalar(const Scalar& s) {
    if (!s.q.re.is_zero() && !s.q.im.is_zero())
        return "(" + print_expr(Expr::from_scalar(s)) + ")";
    std::vector<std::string> factors;
    Rational mag = s.q.re.is_zero() ? s.q.im.abs() : s.q.re.abs();
    bool neg = s.q.re.is_zero() ? s.q.im.is_negative() : s.q.re.is_negative();
    bool imag = s.q.re.is_zero() && !s.q.im.is_zero();
    if (s.is_zero()) return "0";
    if (!mag.is_one() || (s.hbar_exp == 0 && s.c_exp == 0 && !imag))
        factors.push_back(mag.str());
    append_unit_factors(factors, imag, s.hbar_exp, s.c_exp);
    std::ostringstream os;
    if (neg) os << "-";
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) os << "*";
        os << factors[k];
    }
    return os.str();
}

std::string fmt_atom_spec(const AtomSpec& a, const Env& env) {
    switch (a.kind) {
        case AtomKind::Q:
        case AtomKind::P:
        case AtomKind::V: {
            const char* k = a.kind == AtomKind::Q ? "Q" : a.kind == AtomKind::P ? "P" : "V";
            std::string idx;
            if (a.index.is_var()) {
                auto it = env.find(a.index.var);
                idx = it != env.end() ? std::to_string(it->second) : a.index.var;
            } else {
                idx = std::to_string(a.index.value);
            }
            return std::string(k) + "[" + idx + "]";
        }
        case AtomKind::Hpow:
            return a.power == 1 ? "H" : "H^" + std::to_string(a.power);
        case AtomKind::Id:
            return "Id";
        default:
            return "?";
    }
}

std::string fmt_child(const NodePtr& n, const Env& env) {
    std::string s = fmt(n, env);
    if (n->kind == Node::Kind::Sum) return "(" + s + ")";
    return s;
}

std::string fmt(const NodePtr& n, const Env& env) {
    switch (n->kind) {
        case Node::Kind::ScalarLit:
            return fmt_scalar(n->scalar);
        case Node::Kind::AtomLit:
            return fmt_atom_spec(n->atom, env);
        case Node::Kind::NameRef:
            return n->name;
        case Node::Kind::Sum: {
            std::ostringstream os;
            for (std::size_t k = 0; k < n->kids.size(); ++k) {
                int sign = n->signs.empty() ? 1 : n->signs[k];
                if (k == 0) {
                    if (sign < 0) os << "-";
                } else {
                    os << (sign < 0 ? " - " : " + ");
                }
                os << fmt_child(n->kids[k], env);
            }
            return os.str();
        }
        case Node::Kind::Prod: {
            std::ostringstream os;
            for (std::size_t k = 0; k < n->kids.size(); ++k) {
                if (k) os << "*";
                os << fmt_child(n->kids[k], env);
            }
            return os.str();
        }
        case Node::Kind::Comm:
            return "comm(" + fmt(n->kids[0], env) + ", " + fmt(n->kids[1], env) + ")";
        case Node::Kind::Ddt:
            return "ddt(" + fmt(n->kids[0], env) + ")";
        case Node::Kind::IdxBind: {
            Env inner = env;
            inner[n->name] = n->bind_value;
            return fmt_child(n->kids[0], inner);
        }
    }
    return "?";
}

std::string fmt_def_rule(const RuleDecl& r) {
    Expr rhs = Expr::from_scalar(r.def_coeff);
    if (r.def_hpow != 0) rhs = rhs * Expr::from_atom(Atom::H(r.def_hpow));
    rhs = rhs * Expr::from_atom(r.def_target);
    return "def " + atom_text(r.def_atom) + " = " + print_expr(rhs) + ";";
}

}  // namespace

std::string format_node(const NodePtr& n) { return fmt(n, {}); }

std::string format_script(const Script& s) {
    std::ostringstream os;
    for (const auto& st : s.statements) {
        if (const auto* decl = std::get_if<AxiomDeclStmt>(&st)) {
            os << "axioms " << decl->name << " {\n";
            for (const auto& r : decl->rules) {
                switch (r.kind) {
                    case RuleDecl::Kind::Comm:
                        os << "  comm(" << atom_text(r.a) << ", " << atom_text(r.b)
                           << ") = " << print_expr(r.value) << ";\n";
                        break;
                    case RuleDecl::Kind::Def:
                        os << "  " << fmt_def_rule(r) << "\n";
                        break;
                    case RuleDecl::Kind::Family: {
                        os << "  commuting {";
                        for (std::size_t k = 0; k < r.family.size(); ++k) {
                            if (k) os << ", ";
                            switch (r.family[k]) {
                                case AtomKind::Hpow: os << "H"; break;
                                case AtomKind::P: os << "P"; break;
                                case AtomKind::V: os << "V"; break;
                                case AtomKind::Q: os << "Q"; break;
                                default: break;
                            }
                        }
                        os << "};\n";
                        break;
                    }
                }
            }
            os << "}\n";
        } else if (const auto* let = std::get_if<LetStmt>(&st)) {
            os << "let " << let->name << " = " << format_node(let->value) << ";\n";
        } else if (const auto* as = std::get_if<AssertStmt>(&st)) {
            if (!as->forall_vars.empty()) {
                os << "forall ";
                for (std::size_t k = 0; k < as->forall_vars.size(); ++k) {
                    if (k) os << ",";
                    os << as->forall_vars[k];
                }
                os << ": ";
            }
            os << "assert " << format_node(as->lhs) << " == " << format_node(as->rhs)
               << " under " << as->set_name << ";\n";
        }
    }
    return os.str();
}

}  // namespace opalg::dsl
