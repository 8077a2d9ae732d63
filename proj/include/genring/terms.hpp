#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace genring {

struct OpSymbol {
    std::string name;
    std::size_t arity = 0;
    friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

// A variable x_k (k >= 1) or a symbol applied to subterms. Symbols are
// indices into a presentation's symbol table.
struct Term {
    bool is_var = true;
    std::size_t id = 1;
    std::vector<Term> args;

    static Term var(std::size_t k) { return Term{true, k, {}}; }
    static Term app(std::size_t sym, std::vector<Term> args = {}) { return Term{false, sym, std::move(args)}; }

    std::size_t size() const;
    std::size_t height() const;   // variables 0, applications 1 + max child
    std::size_t max_var() const;  // 0 when ground
    bool mentions(std::size_t sym) const;

    friend bool operator==(const Term&, const Term&) = default;
};

// Size first, then variables before applications, then index, then arguments.
int compare(const Term& a, const Term& b);
struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

// x_k ↦ sigma[k-1]; variables beyond sigma stay.
Term substitute_vars(const Term& t, const std::vector<Term>& sigma);
// x_k ↦ x_{map[k-1]}
Term rename_vars(const Term& t, const std::vector<std::size_t>& map);
Term rename_symbols(const Term& t, const std::vector<std::size_t>& map);

// First-order matching of a pattern (variables are pattern variables)
// against a subject (variables are constants).
std::optional<std::map<std::size_t, Term>> match(const Term& pattern, const Term& subject);
Term instantiate(const Term& pattern, const std::map<std::size_t, Term>& sigma);

std::string print_term(const Term& t, const std::vector<OpSymbol>& symbols);

}  // namespace genring
