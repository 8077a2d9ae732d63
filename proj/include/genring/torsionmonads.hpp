#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "genring/coeffmonads.hpp"
#include "genring/exactnum.hpp"
#include "genring/monad.hpp"

namespace genring {

// Operation of F_{1^n}: the zero constant or ζ^exp · x_index.
struct CycElement {
    struct Root {
        std::size_t index;  // 0-based
        long exp;           // reduced mod n
        friend bool operator==(const Root&, const Root&) = default;
    };
    long n = 1;
    std::size_t arity = 0;
    std::optional<Root> value;

    bool is_zero() const { return !value.has_value(); }
    std::string str() const;
    friend bool operator==(const CycElement&, const CycElement&) = default;
};

CycElement cyc_zero(long n, std::size_t arity);
CycElement cyc_make(long n, std::size_t arity, std::size_t index, long exp);
CycElement cyc_substitute(const CycElement& t, const std::vector<CycElement>& args, std::size_t arity);
// A single-support element never needs two slots merged, so Σ(φ) is total.
CycElement cyc_induced(const std::vector<std::size_t>& phi, std::size_t target_arity, const CycElement& t);
// ζ_n ↦ ζ_{nm}^m
CycElement f1inf_embed(const CycElement& t, long m);
std::vector<CycElement> cyc_enumerate(long n, std::size_t arity);
// n = 2 only: ζ ↦ -1 into F12.
RatVec cyc_to_f12(const CycElement& t);

struct CycModel {
    using Op = CycElement;
    long n = 1;

    std::string name() const { return "F1n:" + std::to_string(n); }
    std::size_t arity(const Op& t) const { return t.arity; }
    Op unit() const { return cyc_make(n, 1, 0, 0); }
    Op projection(std::size_t k, std::size_t m) const { return cyc_make(n, m, k, 0); }
    Op substitute(const Op& t, const std::vector<Op>& args, std::size_t m) const {
        return cyc_substitute(t, args, m);
    }
    std::optional<Op> zero(std::size_t m) const { return cyc_zero(n, m); }
    bool member(const Op& t) const;
    std::optional<std::vector<Op>> enumerate(std::size_t m) const { return cyc_enumerate(n, m); }
    std::vector<Op> sample(std::size_t m) const { return cyc_enumerate(n, m); }
    Op random(std::size_t m, Rng& rng) const;
    std::string str(const Op& t) const { return t.str(); }
};

static_assert(MonadModel<CycModel>);

// Operation of F_inf: sign vector of a boundary octahedral combination,
// or the zero class.
struct SignClass {
    std::vector<int> signs;

    std::size_t arity() const { return signs.size(); }
    bool is_zero() const;
    std::string str() const;
    friend bool operator==(const SignClass&, const SignClass&) = default;
    friend auto operator<=>(const SignClass&, const SignClass&) = default;
};

SignClass finf_classify(const RatVec& v);
// Equal magnitudes 1/(number of nonzero signs).
RatVec canonical_rep(const SignClass& s);
SignClass finf_substitute(const SignClass& t, const std::vector<SignClass>& args, std::size_t arity);
SignClass finf_induced(const std::vector<std::size_t>& phi, std::size_t target_arity, const SignClass& t);
// x ∗ y
SignClass finf_star(const SignClass& x, const SignClass& y);
SignClass finf_negate(const SignClass& x);
std::vector<SignClass> finf_enumerate(std::size_t arity);

struct FinfModel {
    using Op = SignClass;

    std::string name() const { return "Finf"; }
    std::size_t arity(const Op& t) const { return t.arity(); }
    Op unit() const { return SignClass{{1}}; }
    Op projection(std::size_t k, std::size_t m) const;
    Op substitute(const Op& t, const std::vector<Op>& args, std::size_t m) const {
        return finf_substitute(t, args, m);
    }
    std::optional<Op> zero(std::size_t m) const { return SignClass{std::vector<int>(m, 0)}; }
    bool member(const Op& t) const;
    std::optional<std::vector<Op>> enumerate(std::size_t m) const { return finf_enumerate(m); }
    std::vector<Op> sample(std::size_t m) const { return finf_enumerate(m); }
    Op random(std::size_t m, Rng& rng) const;
    std::string str(const Op& t) const { return t.str(); }
};

static_assert(MonadModel<FinfModel>);

}  // namespace genring
