#include "opalg/dsl/runner.hpp"

#include "opalg/dsl/printer.hpp"
#include "opalg/engine.hpp"

#include <sstream>
#include <stdexcept>

namespace opalg::dsl {

namespace {

int resolve_index(const IdxRef& idx, const IndexEnv& env, SourceSpan span) {
    if (!idx.is_var()) return idx.value;
    auto it = env.find(idx.var);
    if (it == env.end())
        throw ParseError(span, "unbound index '" + idx.var + "'");
    return it->second;
}

Atom make_atom(const AtomSpec& spec, const IndexEnv& env, SourceSpan span) {
    switch (spec.kind) {
        case AtomKind::Q: return Atom::Qi(resolve_index(spec.index, env, span));
        case AtomKind::P: return Atom::Pi(resolve_index(spec.index, env, span));
        case AtomKind::V: return Atom::Vi(resolve_index(spec.index, env, span));
        case AtomKind::Hpow: return Atom::H(spec.power);
        case AtomKind::Id: return Atom::id();
        default: throw std::logic_error("unexpected atom spec");
    }
}

}  // namespace

Expr eval_node(const NodePtr& n, const IndexEnv& env, const AxiomSet* ax,
               const LetMap* lets) {
    switch (n->kind) {
        case Node::Kind::ScalarLit:
            return Expr::from_scalar(n->scalar);
        case Node::Kind::AtomLit:
            return Expr::from_atom(make_atom(n->atom, env, n->span));
        case Node::Kind::NameRef: {
            if (lets == nullptr)
                throw std::runtime_error("name reference without a script context");
            auto it = lets->find(n->name);
            if (it == lets->end())
                throw ParseError(n->span, "undeclared name '" + n->name + "'");
            return eval_node(it->second, env, ax, lets);
        }
        case Node::Kind::Sum: {
            Expr r = Expr::zero();
            for (std::size_t k = 0; k < n->kids.size(); ++k) {
                Expr e = eval_node(n->kids[k], env, ax, lets);
                r += n->signs.empty() || n->signs[k] > 0 ? e : -e;
            }
            return r;
        }
        case Node::Kind::Prod: {
            Expr r = Expr::identity();
            for (const auto& kid : n->kids) r = r * eval_node(kid, env, ax, lets);
            return r;
        }
        case Node::Kind::Comm: {
            if (ax == nullptr)
                throw std::runtime_error("commutator outside an axiom context");
            return expand_comm(eval_node(n->kids[0], env, ax, lets),
                               eval_node(n->kids[1], env, ax, lets), *ax);
        }
        case Node::Kind::Ddt: {
            if (ax == nullptr)
                throw std::runtime_error("ddt outside an axiom context");
            return ddt(eval_node(n->kids[0], env, ax, lets), *ax);
        }
        case Node::Kind::IdxBind: {
            IndexEnv inner = env;
            inner[n->name] = n->bind_value;
            return eval_node(n->kids[0], inner, ax, lets);
        }
    }
    throw std::logic_error("unhandled node kind");
}

Expr eval_pure(const NodePtr& n, const IndexEnv& env) {
    switch (n->kind) {
        case Node::Kind::Comm:
        case Node::Kind::Ddt:
            throw std::runtime_error("commutators are not allowed here");
        case Node::Kind::NameRef:
            throw std::runtime_error("name references are not allowed here");
        default:
            return eval_node(n, env, nullptr, nullptr);
    }
}

namespace {

AxiomSet build_axiom_set(const AxiomDeclStmt& decl) {
    AxiomSet ax;
    ax.name = decl.name;
    for (const auto& r : decl.rules) {
        switch (r.kind) {
            case RuleDecl::Kind::Comm:
                ax.add_comm(r.a, r.b, r.value, "user");
                break;
            case RuleDecl::Kind::Def:
                ax.add_def(r.def_atom, r.def_coeff, r.def_hpow, r.def_target, "user");
                break;
            case RuleDecl::Kind::Family: {
                std::set<AtomKind> kinds(r.family.begin(), r.family.end());
                ax.add_family(std::move(kinds), "user");
                break;
            }
        }
    }
    return ax;
}

void run_assert(const AssertStmt& st, const std::map<std::string, AxiomSet>& sets,
                const LetMap& lets, RunReport& report) {
    const AxiomSet& ax = sets.at(st.set_name);

    std::vector<IndexEnv> envs;
    if (st.forall_vars.empty()) {
        envs.push_back({});
    } else {
        std::size_t total = 1;
        for (std::size_t k = 0; k < st.forall_vars.size(); ++k) total *= 3;
        for (std::size_t a = 0; a < total; ++a) {
            IndexEnv env;
            std::size_t rest = a;
            for (std::size_t k = st.forall_vars.size(); k-- > 0;) {
                env[st.forall_vars[k]] = static_cast<int>(rest % 3) + 1;
                rest /= 3;
            }
            envs.push_back(env);
        }
    }

    for (const auto& env : envs) {
        AssertOutcome out;
        out.span = st.span;
        std::ostringstream idx;
        for (std::size_t k = 0; k < st.forall_vars.size(); ++k) {
            if (k) idx << ",";
            idx << env.at(st.forall_vars[k]);
        }
        out.index_assignment = idx.str();
        try {
            Expr lhs = eval_node(st.lhs, env, &ax, &lets);
            Expr rhs = eval_node(st.rhs, env, &ax, &lets);
            if (lhs == rhs) {
                out.status = AssertOutcome::Status::Pass;
            } else {
                out.status = AssertOutcome::Status::Fail;
                out.detail = "lhs = " + print_expr(lhs) + " ; rhs = " + print_expr(rhs);
            }
        } catch (const UnresolvedCommutator& ex) {
            out.status = AssertOutcome::Status::Error;
            out.detail = ex.what();
        } catch (const ParseError& ex) {
            out.status = AssertOutcome::Status::Error;
            out.detail = ex.what();
        } catch (const std::exception& ex) {
            out.status = AssertOutcome::Status::Error;
            out.detail = ex.what();
        }
        report.outcomes.push_back(std::move(out));
    }
}

}  // namespace

RunReport run_script(const Script& script) {
    RunReport report;
    std::map<std::string, AxiomSet> sets;
    LetMap lets;
    for (const auto& st : script.statements) {
        if (const auto* decl = std::get_if<AxiomDeclStmt>(&st)) {
            sets[decl->name] = build_axiom_set(*decl);
        } else if (const auto* let = std::get_if<LetStmt>(&st)) {
            lets[let->name] = let->value;
        } else if (const auto* as = std::get_if<AssertStmt>(&st)) {
            run_assert(*as, sets, lets, report);
        }
    }
    return report;
}

}  // namespace opalg::dsl
