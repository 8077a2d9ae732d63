#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "genring/coeffmonads.hpp"
#include "genring/monad.hpp"
#include "genring/presentations.hpp"
#include "genring/torsionmonads.hpp"

namespace genring {

// ---- constants and comparison maps ------------------------------------------

template <MonadModel M>
std::vector<typename M::Op> constants(const M& m) {
    if (auto all = m.enumerate(0)) return *all;
    if (auto z = m.zero(0)) return {*z};
    return {};
}

class NoZeroError : public std::domain_error {
public:
    NoZeroError() : std::domain_error("π undefined (no zero)") {}
};

// k-th component: t(0, ..., e, ..., 0) with e in slot k.
template <MonadModel M>
std::vector<typename M::Op> comparison_map(const M& m, const typename M::Op& t) {
    auto z = m.zero(1);
    if (!z) throw NoZeroError();
    const std::size_t n = m.arity(t);
    std::vector<typename M::Op> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<typename M::Op> args(n, *z);
        args[k] = m.unit();
        out.push_back(m.substitute(t, args, 1));
    }
    return out;
}

// ---- interchange law ---------------------------------------------------------

inline std::optional<std::size_t> differing_position(const Element& a, const Element& b) {
    for (std::size_t i = 0; i < std::min(a.arity(), b.arity()); ++i)
        if (a.coeffs[i] != b.coeffs[i]) return i;
    if (a.arity() != b.arity()) return std::min(a.arity(), b.arity());
    return std::nullopt;
}
inline std::optional<std::size_t> differing_position(const SignClass& a, const SignClass& b) {
    for (std::size_t i = 0; i < std::min(a.arity(), b.arity()); ++i)
        if (a.signs[i] != b.signs[i]) return i;
    if (a.arity() != b.arity()) return std::min(a.arity(), b.arity());
    return std::nullopt;
}
inline std::optional<std::size_t> differing_position(const CycElement& a, const CycElement& b) {
    if (a == b) return std::nullopt;
    if (a.value) return a.value->index;
    if (b.value) return b.value->index;
    return 0;
}

template <class Op>
struct CommuteResult {
    bool commutes = false;
    Op lhs;  // t(s(x_11..x_1m), ..., s(x_n1..x_nm))
    Op rhs;  // s(t(x_11..x_n1), ..., t(x_1m..x_nm))
    std::optional<std::size_t> position;
};

// Both composites live in Σ(n·m), x_ij ↦ slot (i-1)·m + j.
template <MonadModel M>
CommuteResult<typename M::Op> commute(const M& m, const typename M::Op& t, const typename M::Op& s) {
    const std::size_t n = m.arity(t), k = m.arity(s), nk = n * k;
    std::vector<typename M::Op> rows, cols;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> phi(k);
        for (std::size_t j = 0; j < k; ++j) phi[j] = i * k + j;
        rows.push_back(reindex(m, s, phi, nk));
    }
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> psi(n);
        for (std::size_t i = 0; i < n; ++i) psi[i] = i * k + j;
        cols.push_back(reindex(m, t, psi, nk));
    }
    CommuteResult<typename M::Op> r{false, m.substitute(t, rows, nk), m.substitute(s, cols, nk), std::nullopt};
    r.position = differing_position(r.lhs, r.rhs);
    r.commutes = !r.position.has_value();
    return r;
}

template <MonadModel M>
std::vector<typename M::Op> elements_for(const M& m, std::size_t n) {
    if (auto all = m.enumerate(n)) return *all;
    return m.sample(n);
}

template <class Op>
std::vector<Op> spread(const std::vector<Op>& xs, std::size_t limit) {
    if (xs.size() <= limit || limit == 0) return xs;
    std::vector<Op> out;
    out.reserve(limit);
    for (std::size_t i = 0; i < limit; ++i) out.push_back(xs[i * xs.size() / limit]);
    return out;
}

struct CommutativityReport {
    std::size_t pairs = 0;
    std::size_t passed = 0;
    std::optional<std::pair<std::string, std::string>> failure;
    bool commutative() const { return !failure.has_value(); }
};

// All pairs from a deterministic generating sample of Σ(0..arity_bound);
// sample_budget caps the number of elements per arity.
template <MonadModel M>
CommutativityReport is_commutative(const M& m, std::size_t arity_bound, std::size_t sample_budget) {
    if (arity_bound < 1) throw std::invalid_argument("arity bound must be >= 1");
    std::vector<typename M::Op> pool;
    for (std::size_t n = 0; n <= arity_bound; ++n) {
        auto xs = spread(elements_for(m, n), sample_budget);
        pool.insert(pool.end(), xs.begin(), xs.end());
    }
    CommutativityReport rep;
    for (const auto& t : pool)
        for (const auto& s : pool) {
            ++rep.pairs;
            if (commute(m, t, s).commutes) {
                ++rep.passed;
            } else if (!rep.failure) {
                rep.failure = std::make_pair(m.str(t), m.str(s));
            }
        }
    return rep;
}

// Interchange law inside a finite table model.
struct ModelCommuteResult {
    bool commutes = true;
    std::vector<std::size_t> witness;  // x_11..x_nm where the two sides differ
};
ModelCommuteResult commute_in_model(const FiniteModel& model, std::size_t a, std::size_t b);
CommutativityReport is_commutative_model(const FiniteModel& model);

// ---- additivity -----------------------------------------------------------------

enum class Verdict { yes, yes_sampled, no, unknown, not_applicable };
std::string to_string(Verdict v);

struct AdditivityReport {
    std::string monad;
    std::size_t n_max = 0;
    Verdict hypo = Verdict::unknown;
    Verdict hyper = Verdict::unknown;
    std::optional<bool> hypo_exact;   // constraint-exact decision where available
    std::optional<bool> hyper_exact;
    std::vector<std::string> hypo_witness;
    std::vector<std::string> hyper_witness;

    bool additive() const { return cell(hypo, hypo_exact) == "oui" && cell(hyper, hyper_exact) == "oui"; }
    std::string hypo_cell() const { return cell(hypo, hypo_exact); }
    std::string hyper_cell() const { return cell(hyper, hyper_exact); }
    // "oui", "non" or "?"; a sampled yes needs an exact confirmation
    static std::string cell(Verdict v, const std::optional<bool>& exact);
};

template <MonadModel M>
AdditivityReport classify_additivity_generic(const M& m, std::size_t n_max) {
    if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
    AdditivityReport rep;
    rep.monad = m.name();
    rep.n_max = n_max;
    if (!m.zero(0)) {
        rep.hypo = rep.hyper = Verdict::not_applicable;
        return rep;
    }
    bool exhaustive = true;
    bool injective = true, surjective = true;
    const auto ones = elements_for(m, 1);
    exhaustive = exhaustive && m.enumerate(1).has_value();
    for (std::size_t n = 2; n <= n_max; ++n) {
        const bool finite = m.enumerate(n).has_value();
        exhaustive = exhaustive && finite;
        std::map<std::string, typename M::Op> image;  // π_n(t) rendered -> t
        for (const auto& t : elements_for(m, n)) {
            const auto pi = comparison_map(m, t);
            std::string key = "[";
            for (std::size_t i = 0; i < pi.size(); ++i) key += (i ? ", " : "") + m.str(pi[i]);
            key += "]";
            auto [it, inserted] = image.emplace(key, t);
            if (!inserted && injective && !(it->second == t)) {
                injective = false;
                rep.hypo_witness = {m.str(it->second), m.str(t), "pi_" + std::to_string(n) + " = " + key};
            }
        }
        if (!surjective) continue;
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::string key = "[";
            for (std::size_t i = 0; i < n; ++i) key += (i ? ", " : "") + m.str(ones[idx[i]]);
            key += "]";
            if (!image.count(key)) {
                surjective = false;
                rep.hyper_witness = {key};
                break;
            }
            std::size_t pos = 0;
            while (pos < n && ++idx[pos] == ones.size()) idx[pos++] = 0;
            if (pos == n) break;
        }
    }
    rep.hypo = !injective ? Verdict::no : (exhaustive ? Verdict::yes : Verdict::yes_sampled);
    // a missing tuple in a finite sample is only a candidate unless Σ(n) was enumerated
    rep.hyper = surjective ? (exhaustive ? Verdict::yes : Verdict::yes_sampled)
                           : (exhaustive ? Verdict::no : Verdict::unknown);
    return rep;
}

// Coefficient monads: sampled verdicts plus the exact decision. π_n is the
// coordinate map t ↦ ((t_1), ..., (t_n)), so it is injective, and it is onto
// Σ(1)^n exactly when (e, ..., e) and every other coordinate tuple satisfy the
// defining constraints.
AdditivityReport classify_additivity(const CoeffMonad& m, std::size_t n_max);
AdditivityReport classify_additivity(const CycModel& m, std::size_t n_max);
AdditivityReport classify_additivity(const FinfModel& m, std::size_t n_max);

template <class Op>
struct PseudoAddition {
    std::optional<Op> element;
    bool unique = false;
    bool exhaustive = false;  // uniqueness established over all of Σ(2)
};

template <MonadModel M>
PseudoAddition<typename M::Op> find_pseudoaddition_generic(const M& m) {
    if (!m.zero(0)) throw NoZeroError();
    auto all = m.enumerate(2);
    PseudoAddition<typename M::Op> res;
    res.exhaustive = all.has_value();
    std::size_t hits = 0;
    for (const auto& t : elements_for(m, 2)) {
        const auto pi = comparison_map(m, t);
        if (pi[0] == m.unit() && pi[1] == m.unit()) {
            if (!res.element) res.element = t;
            ++hits;
        }
    }
    res.unique = hits == 1 && res.exhaustive;
    return res;
}

// Solves π_2(t) = (e, e) by its coefficient constraints: the only candidate
// is (1, 1), which is unique whenever it is admissible.
PseudoAddition<Element> find_pseudoaddition(const CoeffMonad& m);

// ---- monad-law suite ----------------------------------------------------------

struct LawReport {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;  // first few failures
};

template <MonadModel M>
LawReport check_monad_laws(const M& m, std::size_t samples, std::size_t max_arity, std::uint64_t seed) {
    Rng rng(seed);
    LawReport rep;
    const std::size_t lo = m.zero(0) ? 0 : 1;
    std::uniform_int_distribution<std::size_t> ar(lo, max_arity);
    auto fail = [&](const std::string& what) {
        ++rep.failures;
        if (rep.messages.size() < 5) rep.messages.push_back(what);
    };
    auto check = [&](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) fail(what);
    };
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t k = ar(rng), n = ar(rng), p = ar(rng);
        const auto t = m.random(k, rng);
        check(m.member(t), "random element outside the monad: " + m.str(t));
        // unit
        check(m.substitute(m.unit(), {t}, k) == t, "unit law fails for " + m.str(t));
        // projections
        std::vector<typename M::Op> proj;
        for (std::size_t j = 0; j < k; ++j) proj.push_back(m.projection(j, k));
        check(m.substitute(t, proj, k) == t, "projection law fails for " + m.str(t));
        std::vector<typename M::Op> s;
        for (std::size_t j = 0; j < k; ++j) s.push_back(m.random(n, rng));
        for (std::size_t j = 0; j < k; ++j)
            check(m.substitute(m.projection(j, k), s, n) == s[j], "projection selects the wrong argument");
        // associativity
        std::vector<typename M::Op> r;
        for (std::size_t j = 0; j < n; ++j) r.push_back(m.random(p, rng));
        const auto ts = m.substitute(t, s, n);
        const auto left = m.substitute(ts, r, p);
        std::vector<typename M::Op> sr;
        for (const auto& sj : s) sr.push_back(m.substitute(sj, r, p));
        const auto right = m.substitute(t, sr, p);
        check(left == right, "associativity fails for " + m.str(t));
        // closure
        check(m.member(ts) && m.member(left), "substitution leaves the monad");
        // interchange with a further random element
        const auto u = m.random(ar(rng), rng);
        check(commute(m, t, u).commutes, "interchange law fails for " + m.str(t) + ", " + m.str(u));
    }
    return rep;
}

// ---- dispatch over the implemented monads -----------------------------------------

using AnyMonad = std::variant<CoeffMonad, CycModel, FinfModel>;

// Z, N, BN:k, AN:k, Zinf, F1, F12, Fempty, F1n:k, Finf, meet(...)
AnyMonad parse_monad(const std::string& id);
std::string monad_id(const AnyMonad& m);
AdditivityReport classify_additivity(const AnyMonad& m, std::size_t n_max);

}  // namespace genring
