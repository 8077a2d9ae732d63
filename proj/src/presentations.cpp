#include "genring/presentations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "genring/egraph.hpp"

namespace genring {

Relation make_relation(Term lhs, Term rhs) {
    const std::size_t n = std::max(lhs.max_var(), rhs.max_var());
    return Relation{std::move(lhs), std::move(rhs), n};
}

std::optional<std::size_t> Presentation::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i].name == name) return i;
    return std::nullopt;
}

std::vector<OpSymbol> Presentation::generators() const {
    return {symbols.begin() + static_cast<std::ptrdiff_t>(first_generator()), symbols.end()};
}

std::size_t Presentation::add_generator(std::string name, std::size_t arity) {
    if (find(name)) throw std::invalid_argument("duplicate generator '" + name + "'");
    symbols.push_back(OpSymbol{std::move(name), arity});
    return symbols.size() - 1;
}

std::size_t Presentation::base_constant() const {
    if (base != Base::F1) throw std::invalid_argument("no base constant over F_empty");
    return 0;
}

Relation commutation_relation(std::size_t a, std::size_t n, std::size_t b, std::size_t m) {
    auto x = [&](std::size_t i, std::size_t j) { return Term::var(i * m + j + 1); };  // 0-based i, j
    std::vector<Term> outer;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> row;
        for (std::size_t j = 0; j < m; ++j) row.push_back(x(i, j));
        outer.push_back(Term::app(b, std::move(row)));
    }
    Term lhs = Term::app(a, std::move(outer));
    std::vector<Term> cols;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Term> col;
        for (std::size_t i = 0; i < n; ++i) col.push_back(x(i, j));
        cols.push_back(Term::app(a, std::move(col)));
    }
    Term rhs = Term::app(b, std::move(cols));
    return make_relation(std::move(lhs), std::move(rhs));
}

std::vector<Relation> effective_relations(const Presentation& p) {
    std::vector<Relation> out = p.relations;
    if (!p.commutative) return out;
    for (std::size_t i = 0; i < p.symbols.size(); ++i)
        for (std::size_t j = i; j < p.symbols.size(); ++j) {
            Relation r = commutation_relation(i, p.symbols[i].arity, j, p.symbols[j].arity);
            if (r.lhs != r.rhs) out.push_back(std::move(r));
        }
    return out;
}

namespace {

void collect_vars(const Term& t, std::set<std::size_t>& out) {
    if (t.is_var) {
        out.insert(t.id);
        return;
    }
    for (const auto& a : t.args) collect_vars(a, out);
}

bool vars_within(const Term& target, const Term& source) {
    std::set<std::size_t> a, b;
    collect_vars(target, a);
    collect_vars(source, b);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct Rule {
    Term from, to;
};

std::vector<Rule> oriented_rules(const std::vector<Relation>& rels) {
    std::vector<Rule> out;
    for (const auto& r : rels) {
        if (!r.lhs.is_var && vars_within(r.rhs, r.lhs)) out.push_back({r.lhs, r.rhs});
        if (!r.rhs.is_var && vars_within(r.lhs, r.rhs)) out.push_back({r.rhs, r.lhs});
    }
    return out;
}

Term normalize_with(const Term& t, const std::vector<Rule>& rules) {
    Term cur = t;
    if (!cur.is_var)
        for (auto& a : cur.args) a = normalize_with(a, rules);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rules) {
            auto sigma = match(r.from, cur);
            if (!sigma) continue;
            Term cand = instantiate(r.to, *sigma);
            if (compare(cand, cur) < 0) {
                cur = normalize_with(cand, rules);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

void collect_subterms(const Term& t, std::set<Term, TermLess>& out) {
    out.insert(t);
    for (const auto& a : t.args) collect_subterms(a, out);
}

}  // namespace

Term normalize(const Term& t, const std::vector<Relation>& rels) { return normalize_with(t, oriented_rules(rels)); }

FreeTerms free_terms(const Presentation& p, std::size_t n, std::size_t depth, const FreeTermsOptions& opt) {
    const std::vector<Rule> rules = opt.fold ? oriented_rules(effective_relations(p)) : std::vector<Rule>{};
    std::set<Term, TermLess> level;
    for (std::size_t k = 1; k <= n; ++k) level.insert(Term::var(k));
    FreeTerms res;
    std::size_t work = 0;
    const std::size_t work_cap = opt.cap * 50 + 1000;
    for (std::size_t d = 1; d <= depth && !res.truncated; ++d) {
        std::set<Term, TermLess> next = level;
        const std::vector<Term> prev(level.begin(), level.end());
        for (std::size_t s = 0; s < p.symbols.size() && !res.truncated; ++s) {
            const std::size_t ar = p.symbols[s].arity;
            if (ar > 0 && prev.empty()) continue;
            std::vector<std::size_t> idx(ar, 0);
            while (true) {
                std::vector<Term> args;
                args.reserve(ar);
                for (std::size_t i = 0; i < ar; ++i) args.push_back(prev[idx[i]]);
                Term t = Term::app(s, std::move(args));
                if (opt.fold) t = normalize_with(t, rules);
                next.insert(std::move(t));
                if (next.size() > opt.cap || ++work > work_cap) {
                    res.truncated = true;
                    break;
                }
                std::size_t pos = 0;
                while (pos < ar && ++idx[pos] == prev.size()) idx[pos++] = 0;
                if (pos == ar) break;
            }
        }
        const bool fixpoint = next.size() == level.size();
        level = std::move(next);
        if (fixpoint) break;
    }
    res.terms.assign(level.begin(), level.end());
    return res;
}

Presentation tensor_presentation(const Presentation& p1, const Presentation& p2) {
    if (p1.base != p2.base) throw std::invalid_argument("tensor product needs a common base");
    Presentation out;
    out.base = p1.base;
    out.commutative = p1.commutative && p2.commutative;
    if (out.base == Base::F1) out.symbols.push_back(OpSymbol{"0", 0});
    auto embed = [&](const Presentation& p, const std::string& suffix) {
        std::vector<std::size_t> map(p.symbols.size());
        for (std::size_t i = 0; i < p.symbols.size(); ++i) {
            if (p.base == Base::F1 && i == 0) {
                map[i] = 0;
                continue;
            }
            map[i] = out.add_generator(p.symbols[i].name + suffix, p.symbols[i].arity);
        }
        return map;
    };
    const auto m1 = embed(p1, "_1");
    const auto m2 = embed(p2, "_2");
    for (const auto& r : p1.relations)
        out.relations.push_back(make_relation(rename_symbols(r.lhs, m1), rename_symbols(r.rhs, m1)));
    for (const auto& r : p2.relations)
        out.relations.push_back(make_relation(rename_symbols(r.lhs, m2), rename_symbols(r.rhs, m2)));
    for (std::size_t i = p1.first_generator(); i < p1.symbols.size(); ++i)
        for (std::size_t j = p2.first_generator(); j < p2.symbols.size(); ++j)
            out.relations.push_back(
                commutation_relation(m1[i], p1.symbols[i].arity, m2[j], p2.symbols[j].arity));
    return out;
}

ProofResult derive_equal(const Presentation& p, const Term& lhs, const Term& rhs, long budget,
                         const ProofOptions& opt) {
    if (budget < 0) throw std::invalid_argument("proof budget must be non-negative");
    ProofResult res;
    if (lhs == rhs) {
        res.status = ProofResult::Status::proven;
        res.depth = 0;
        return res;
    }
    const std::size_t n = std::max(lhs.max_var(), rhs.max_var());
    const auto rels = effective_relations(p);
    for (long d = 0; d <= budget; ++d) {
        EGraph g;
        const auto a = g.add(lhs);
        const auto b = g.add(rhs);
        std::set<Term, TermLess> pool_set;
        for (auto& t : free_terms(p, n, static_cast<std::size_t>(d)).terms) pool_set.insert(std::move(t));
        collect_subterms(lhs, pool_set);
        collect_subterms(rhs, pool_set);
        const std::vector<Term> pool(pool_set.begin(), pool_set.end());
        std::size_t instances = 0;
        bool exhausted = false;
        for (const auto& r : rels) {
            std::set<std::size_t> vs;
            collect_vars(r.lhs, vs);
            collect_vars(r.rhs, vs);
            const std::vector<std::size_t> vars(vs.begin(), vs.end());
            double count = 1;
            for (std::size_t i = 0; i < vars.size(); ++i) count *= static_cast<double>(pool.size());
            if (static_cast<double>(instances) + count > static_cast<double>(opt.max_instances)) {
                exhausted = true;
                continue;
            }
            const std::size_t width = vars.empty() ? 0 : vars.back();
            std::vector<std::size_t> idx(vars.size(), 0);
            while (true) {
                std::vector<Term> sigma(width, Term::var(1));
                for (std::size_t i = 0; i < vars.size(); ++i) sigma[vars[i] - 1] = pool[idx[i]];
                g.merge(g.add(substitute_vars(r.lhs, sigma)), g.add(substitute_vars(r.rhs, sigma)));
                ++instances;
                std::size_t pos = 0;
                while (pos < idx.size() && ++idx[pos] == pool.size()) idx[pos++] = 0;
                if (pos == idx.size()) break;
            }
            if (g.equivalent(a, b)) break;
        }
        res.instances = instances;
        res.nodes = g.size();
        res.budget_exhausted = exhausted;
        if (g.equivalent(a, b)) {
            res.status = ProofResult::Status::proven;
            res.depth = d;
            return res;
        }
        if (exhausted) break;
    }
    return res;
}

namespace presentations {

Presentation f1() { return parse_presentation("base F_empty; gen z/0;"); }

Presentation f12() { return parse_presentation("base F1; commutative; gen neg/1; rel neg(neg(x1)) = x1;"); }

Presentation f1n(long n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    std::string t = "x1";
    for (long i = 0; i < n; ++i) t = "zeta(" + t + ")";
    return parse_presentation("base F1; commutative; gen zeta/1; rel " + t + " = x1;");
}

Presentation naturals() {
    return parse_presentation("base F1; commutative; gen add/2;\n"
                              "rel add(0, x1) = x1;\n"
                              "rel add(x1, 0) = x1;\n");
}

Presentation integers_fempty() {
    return parse_presentation("base F_empty; gen zero/0, neg/1, add/2;\n"
                              "rel add(x1, neg(x1)) = zero;\n"
                              "rel add(x1, zero) = x1;\n"
                              "rel add(zero, x1) = x1;\n"
                              "rel add(add(x1, x2), x3) = add(x1, add(x2, x3));\n"
                              "rel add(x1, x2) = add(x2, x1);\n");
}

Presentation integers_f1() {
    return parse_presentation("base F1; gen neg/1, add/2;\n"
                              "rel add(x1, neg(x1)) = 0;\n"
                              "rel add(x1, 0) = x1;\n"
                              "rel add(0, x1) = x1;\n"
                              "rel add(add(x1, x2), x3) = add(x1, add(x2, x3));\n"
                              "rel add(x1, x2) = add(x2, x1);\n");
}

Presentation a_n(long n) {
    if (n <= 1) throw std::invalid_argument("A_N needs N > 1");
    Presentation p = parse_presentation("base F1; commutative; gen neg/1; rel neg(neg(x1)) = x1;");
    const std::size_t neg = *p.find("neg");
    for (long q = 2, m = n; m > 1; ++q) {
        if (m % q) continue;
        while (m % q == 0) m /= q;
        const auto pp = static_cast<std::size_t>(q);
        const std::size_t s = p.add_generator("s" + std::to_string(q), pp);
        // s_p(x1, ..., x1) = x1
        p.relations.push_back(make_relation(Term::app(s, std::vector<Term>(pp, Term::var(1))), Term::var(1)));
        // invariance under every permutation
        std::vector<std::size_t> perm(pp);
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<Term> ident;
        for (auto k : perm) ident.push_back(Term::var(k));
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<Term> moved;
            for (auto k : perm) moved.push_back(Term::var(k));
            p.relations.push_back(make_relation(Term::app(s, ident), Term::app(s, moved)));
        }
        // s_p(x1, ..., x_{p-1}, -x_{p-1}) = s_p(x1, ..., x_{p-2}, 0, 0)
        std::vector<Term> l, r;
        for (std::size_t k = 1; k <= pp - 1; ++k) l.push_back(Term::var(k));
        l.push_back(Term::app(neg, {Term::var(pp - 1)}));
        for (std::size_t k = 1; k + 2 <= pp; ++k) r.push_back(Term::var(k));
        r.push_back(Term::app(0));
        r.push_back(Term::app(0));
        p.relations.push_back(make_relation(Term::app(s, std::move(l)), Term::app(s, std::move(r))));
    }
    return p;
}

Presentation finf() {
    return parse_presentation("base F1; commutative; gen neg/1, star/2;\n"
                              "rel neg(neg(x1)) = x1;\n"
                              "rel star(x1, neg(x1)) = 0;\n"
                              "rel star(x1, x1) = x1;\n"
                              "rel star(x1, x2) = star(x2, x1);\n"
                              "rel star(star(x1, x2), x3) = star(x1, star(x2, x3));\n");
}

Presentation words() {
    return parse_presentation("gen cat/2;\n"
                              "rel cat(cat(x1, x2), x3) = cat(x1, cat(x2, x3));\n"
                              "gen eps/0;\n"
                              "rel cat(eps, x1) = x1;\n"
                              "rel cat(x1, eps) = x1;\n");
}

Presentation named(const std::string& name) {
    auto param = [&](std::string_view prefix) -> std::optional<long> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        try {
            std::size_t used = 0;
            const long k = std::stol(name.substr(prefix.size()), &used);
            if (used == name.size() - prefix.size()) return k;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("bad parameter in '" + name + "'");
    };
    if (name == "F1") return f1();
    if (name == "F12") return f12();
    if (name == "N") return naturals();
    if (name == "Z") return integers_fempty();
    if (name == "Z/F1") return integers_f1();
    if (name == "Finf") return finf();
    if (name == "words") return words();
    if (auto k = param("F1n:")) return f1n(*k);
    if (auto k = param("AN:")) return a_n(*k);
    throw std::invalid_argument("unknown presentation '" + name + "'");
}

}  // namespace presentations

}  // namespace genring
