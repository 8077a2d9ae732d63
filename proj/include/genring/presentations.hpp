#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genring/monad.hpp"
#include "genring/terms.hpp"

namespace genring {

enum class Base { Fempty, F1 };

struct Relation {
    Term lhs;
    Term rhs;
    std::size_t arity = 0;  // context arity shared by both sides
    friend bool operator==(const Relation&, const Relation&) = default;
};

Relation make_relation(Term lhs, Term rhs);

// Generators and relations over F_empty or F_1. With base F_1, symbol 0 is the
// base constant "0". A commutative presentation additionally imposes the
// interchange law between every pair of symbols (generalized-ring reading).
struct Presentation {
    Base base = Base::Fempty;
    bool commutative = false;
    std::vector<OpSymbol> symbols;
    std::vector<Relation> relations;

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t first_generator() const { return base == Base::F1 ? 1 : 0; }
    std::vector<OpSymbol> generators() const;
    std::size_t add_generator(std::string name, std::size_t arity);
    std::size_t base_constant() const;  // throws unless base is F1

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

Presentation parse_presentation(std::string_view text);
Term parse_term(const Presentation& p, std::string_view text);
std::string print_presentation(const Presentation& p);
std::string print_term(const Presentation& p, const Term& t);

// Interchange law between symbols a (arity n) and b (arity m), as an equation
// in context arity n*m with x_{ij} = x_{(i-1)m+j}:
//   a(b(x_11..x_1m), ..., b(x_n1..x_nm)) = b(a(x_11..x_n1), ..., a(x_1m..x_nm))
Relation commutation_relation(std::size_t a, std::size_t arity_a, std::size_t b, std::size_t arity_b);

// Declared relations plus, for commutative presentations, the interchange law
// for every unordered pair of symbols (including each symbol with itself).
std::vector<Relation> effective_relations(const Presentation& p);

struct FreeTermsOptions {
    bool fold = false;          // normalize by ordered rewriting with effective relations
    std::size_t cap = 200000;   // explosion guard
};

struct FreeTerms {
    std::vector<Term> terms;  // canonical order
    bool truncated = false;
};

FreeTerms free_terms(const Presentation& p, std::size_t n, std::size_t depth, const FreeTermsOptions& opt = {});

// Ordered rewriting: a relation instance is applied (in either direction)
// only when it makes the term strictly smaller in the canonical order.
Term normalize(const Term& t, const std::vector<Relation>& rules);

// ---- interpretations -------------------------------------------------------

class InterpretError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <MonadModel M>
struct Interpretation {
    M model;
    std::map<std::string, typename M::Op> assignment;
};

template <MonadModel M>
typename M::Op interpret(const Presentation& p, const Term& t, std::size_t n, const Interpretation<M>& in) {
    if (t.is_var) {
        if (t.id < 1 || t.id > n) throw InterpretError("variable x" + std::to_string(t.id) + " outside context");
        return in.model.projection(t.id - 1, n);
    }
    const OpSymbol& sym = p.symbols.at(t.id);
    std::vector<typename M::Op> args;
    args.reserve(t.args.size());
    for (const auto& a : t.args) args.push_back(interpret(p, a, n, in));
    auto it = in.assignment.find(sym.name);
    if (it == in.assignment.end()) {
        if (p.base == Base::F1 && t.id == 0) {
            auto z = in.model.zero(n);
            if (!z) throw InterpretError("target has no constant for 0");
            return *z;
        }
        throw InterpretError("unassigned symbol '" + sym.name + "'");
    }
    if (in.model.arity(it->second) != sym.arity)
        throw InterpretError("symbol '" + sym.name + "' assigned an operation of the wrong arity");
    return in.model.substitute(it->second, args, n);
}

struct RelationCheck {
    std::string lhs;
    std::string rhs;
    bool passed = false;
    bool implicit = false;  // interchange law added by the commutative flag
    std::string lhs_value;
    std::string rhs_value;
};

template <MonadModel M>
std::vector<RelationCheck> check_relations(const Presentation& p, const Interpretation<M>& in) {
    std::vector<RelationCheck> out;
    const auto rels = effective_relations(p);
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const auto& r = rels[i];
        const auto a = interpret(p, r.lhs, r.arity, in);
        const auto b = interpret(p, r.rhs, r.arity, in);
        out.push_back(RelationCheck{print_term(p, r.lhs), print_term(p, r.rhs), a == b, i >= p.relations.size(),
                                    in.model.str(a), in.model.str(b)});
    }
    return out;
}

// ---- tensor products --------------------------------------------------------

// Generators renamed name_1 / name_2; the base constant of F_1 is shared.
Presentation tensor_presentation(const Presentation& p1, const Presentation& p2);

// ---- bounded proving --------------------------------------------------------

struct ProofResult {
    enum class Status { proven, unknown };
    Status status = Status::unknown;
    long depth = -1;              // instantiation depth at which the goal closed
    std::size_t instances = 0;    // relation instances asserted
    std::size_t nodes = 0;        // e-graph size
    bool budget_exhausted = false;
    bool proven() const { return status == Status::proven; }
};

struct ProofOptions {
    std::size_t max_instances = 3000000;
};

// Congruence closure over the ground instances of the effective relations,
// with relation variables ranging over free terms of height ≤ d, for
// d = 0..budget. Throws std::invalid_argument when budget < 0.
ProofResult derive_equal(const Presentation& p, const Term& lhs, const Term& rhs, long budget,
                         const ProofOptions& opt = {});

// ---- finite models ----------------------------------------------------------

struct FiniteModel {
    std::size_t size = 0;
    std::vector<OpSymbol> symbols;
    std::vector<std::vector<std::size_t>> tables;  // row-major over argument tuples

    std::size_t apply(std::size_t sym, const std::vector<std::size_t>& args) const;
    std::size_t eval(const Term& t, const std::vector<std::size_t>& env) const;
};

struct CountermodelResult {
    enum class Status { found, none, undecided };
    Status status = Status::none;
    std::optional<FiniteModel> model;
    std::vector<std::size_t> assignment;  // values of x1..xn where lhs != rhs
    std::size_t sizes_searched = 0;
    std::size_t nodes = 0;
};

CountermodelResult find_countermodel(const Presentation& p, const Term& lhs, const Term& rhs, std::size_t max_size,
                                     std::size_t node_budget = 20000000);

// Does every declared and implicit relation hold in m?
bool satisfies(const Presentation& p, const FiniteModel& m);

// ---- built-in presentations --------------------------------------------------

namespace presentations {
Presentation f1();             // F_empty<0>
Presentation f12();            // F1<neg | neg neg x = x>
Presentation f1n(long n);      // F1<zeta | zeta^n x = x>
Presentation naturals();       // F1<add | 0+e = e = e+0>, commutative
Presentation integers_fempty();  // F_empty<zero, neg, add | abelian group>
Presentation integers_f1();      // F1<neg, add | abelian group>
Presentation a_n(long n);        // F1<neg, s_p (p | n) | neg involution, Theorem-1 families>
Presentation finf();             // F12<star | ...>, commutative
Presentation words();            // cat/2, eps/0 with monoid laws

// F1, F12, F1n:k, N, Z, Z/F1, AN:k, Finf, words
Presentation named(const std::string& name);
}  // namespace presentations

}  // namespace genring
