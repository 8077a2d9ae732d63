#include "genring/terms.hpp"

#include <algorithm>
#include <stdexcept>

namespace genring {

std::size_t Term::size() const {
    std::size_t s = 1;
    for (const auto& a : args) s += a.size();
    return s;
}

std::size_t Term::height() const {
    if (is_var) return 0;
    std::size_t h = 0;
    for (const auto& a : args) h = std::max(h, a.height());
    return h + 1;
}

std::size_t Term::max_var() const {
    if (is_var) return id;
    std::size_t m = 0;
    for (const auto& a : args) m = std::max(m, a.max_var());
    return m;
}

bool Term::mentions(std::size_t sym) const {
    if (is_var) return false;
    if (id == sym) return true;
    return std::any_of(args.begin(), args.end(), [&](const Term& a) { return a.mentions(sym); });
}

namespace {

int compare_same_size(const Term& a, const Term& b) {
    if (a.is_var != b.is_var) return a.is_var ? -1 : 1;
    if (a.id != b.id) return a.id < b.id ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size() && i < b.args.size(); ++i)
        if (int c = compare(a.args[i], b.args[i])) return c;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
    return 0;
}

bool match_into(const Term& pattern, const Term& subject, std::map<std::size_t, Term>& sigma) {
    if (pattern.is_var) {
        auto [it, inserted] = sigma.emplace(pattern.id, subject);
        return inserted || it->second == subject;
    }
    if (subject.is_var || subject.id != pattern.id || subject.args.size() != pattern.args.size()) return false;
    for (std::size_t i = 0; i < pattern.args.size(); ++i)
        if (!match_into(pattern.args[i], subject.args[i], sigma)) return false;
    return true;
}

}  // namespace

int compare(const Term& a, const Term& b) {
    const std::size_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb ? -1 : 1;
    return compare_same_size(a, b);
}

Term substitute_vars(const Term& t, const std::vector<Term>& sigma) {
    if (t.is_var) return t.id <= sigma.size() ? sigma[t.id - 1] : t;
    Term r = Term::app(t.id);
    r.args.reserve(t.args.size());
    for (const auto& a : t.args) r.args.push_back(substitute_vars(a, sigma));
    return r;
}

Term rename_vars(const Term& t, const std::vector<std::size_t>& map) {
    if (t.is_var) return Term::var(t.id <= map.size() ? map[t.id - 1] : t.id);
    Term r = Term::app(t.id);
    for (const auto& a : t.args) r.args.push_back(rename_vars(a, map));
    return r;
}

Term rename_symbols(const Term& t, const std::vector<std::size_t>& map) {
    if (t.is_var) return t;
    Term r = Term::app(map.at(t.id));
    for (const auto& a : t.args) r.args.push_back(rename_symbols(a, map));
    return r;
}

std::optional<std::map<std::size_t, Term>> match(const Term& pattern, const Term& subject) {
    std::map<std::size_t, Term> sigma;
    if (!match_into(pattern, subject, sigma)) return std::nullopt;
    return sigma;
}

Term instantiate(const Term& pattern, const std::map<std::size_t, Term>& sigma) {
    if (pattern.is_var) {
        auto it = sigma.find(pattern.id);
        if (it == sigma.end()) throw std::logic_error("unbound pattern variable");
        return it->second;
    }
    Term r = Term::app(pattern.id);
    for (const auto& a : pattern.args) r.args.push_back(instantiate(a, sigma));
    return r;
}

std::string print_term(const Term& t, const std::vector<OpSymbol>& symbols) {
    if (t.is_var) return "x" + std::to_string(t.id);
    std::string out = symbols.at(t.id).name;
    if (t.args.empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ", ";
        out += print_term(t.args[i], symbols);
    }
    return out + ")";
}

}  // namespace genring
