#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genring/exactnum.hpp"
#include "genring/monad.hpp"

namespace genring {

// Monads whose n-ary operations are rational vectors cut out by a predicate.
// Fempty is the projection-only monad (no constants); it is kept here so that
// it can share the generic analysis code.
class CoeffMonad {
public:
    enum class Tag { Z, N, BN, ZlocInf, AN, F1, F12, Fempty, Intersection };

    static CoeffMonad Z() { return CoeffMonad(Tag::Z); }
    static CoeffMonad N() { return CoeffMonad(Tag::N); }
    static CoeffMonad BN(const BigInt& k);
    static CoeffMonad ZlocInf() { return CoeffMonad(Tag::ZlocInf); }
    static CoeffMonad AN(const BigInt& k);
    static CoeffMonad F1() { return CoeffMonad(Tag::F1); }
    static CoeffMonad F12() { return CoeffMonad(Tag::F12); }
    static CoeffMonad Fempty() { return CoeffMonad(Tag::Fempty); }
    // Raw conjunction, no normalization (see intersect()).
    static CoeffMonad meet(std::vector<CoeffMonad> parts);

    // Identifiers: Z, N, BN:k, AN:k, Zinf, F1, F12, Fempty, meet(a,b,...)
    static CoeffMonad parse(std::string_view id);
    std::string id() const;

    Tag tag() const { return tag_; }
    const BigInt& param() const { return param_; }
    const std::vector<CoeffMonad>& parts() const { return parts_; }

    bool has_constant() const;

    friend bool operator==(const CoeffMonad& a, const CoeffMonad& b) { return compare(a, b) == 0; }
    friend bool operator<(const CoeffMonad& a, const CoeffMonad& b) { return compare(a, b) < 0; }
    static int compare(const CoeffMonad& a, const CoeffMonad& b);

private:
    explicit CoeffMonad(Tag t) : tag_(t) {}
    Tag tag_;
    BigInt param_ = 0;
    std::vector<CoeffMonad> parts_;
};

bool contains(const CoeffMonad& m, const RatVec& v);

// Sub-monad relation a ⊆ b as far as it follows from the atomic inclusions
// N ⊂ Z ⊂ B_k, B_a ⊂ B_b (rad a | rad b), Fempty ⊂ everything.
// Sound but not complete: B_2 ∧ B_3 ⊆ Z is not detected.
bool known_subset(const CoeffMonad& a, const CoeffMonad& b);

// Normalized conjunction.
CoeffMonad intersect(const std::vector<CoeffMonad>& ms);

struct Element {
    CoeffMonad monad;
    RatVec coeffs;

    std::size_t arity() const { return coeffs.size(); }
    std::string str() const { return to_string(coeffs); }
    friend bool operator==(const Element& a, const Element& b) {
        return a.monad == b.monad && a.coeffs == b.coeffs;
    }
};

// Throws std::invalid_argument when v is not in Σ_m(n).
Element make_element(const CoeffMonad& m, RatVec v);
Element unit(const CoeffMonad& m);
Element projection(const CoeffMonad& m, std::size_t k, std::size_t n);  // k is 0-based
std::optional<Element> zero_element(const CoeffMonad& m, std::size_t n);

// n is the result arity; args must all have arity n.
Element substitute(const Element& t, const std::vector<Element>& args, std::size_t n);
Element substitute(const Element& t, const std::vector<Element>& args);
// phi maps slot i (0-based) of t to slot phi[i] of the result.
Element induced_map(const std::vector<std::size_t>& phi, std::size_t target_arity, const Element& t);

struct LocalizationResult {
    enum class Status { member, not_member, undecided };
    Status status = Status::undecided;
    std::optional<long> k;  // certificate: f^k v ∈ Σ(n)
    long bound = 0;
    bool member() const { return status == Status::member; }
};

// Is v in m[f^{-1}]? Searches k = 0..bound. Returns not_member only when the
// powers of f are periodic (f = ±1) and exhausted.
LocalizationResult in_localization(const CoeffMonad& m, const Rat& f, const RatVec& v, long bound);

// Finite Σ(n) (F1, F12, Fempty and conjunctions involving them); nullopt otherwise.
std::optional<std::vector<RatVec>> enumerate_vectors(const CoeffMonad& m, std::size_t n);
// Deterministic grid sample of Σ(n).
std::vector<RatVec> grid_sample(const CoeffMonad& m, std::size_t n);
RatVec random_vector(const CoeffMonad& m, std::size_t n, Rng& rng);

// Adaptor for the generic algorithms.
struct CoeffModel {
    using Op = Element;
    CoeffMonad monad;

    std::string name() const { return monad.id(); }
    std::size_t arity(const Op& t) const { return t.arity(); }
    Op unit() const { return genring::unit(monad); }
    Op projection(std::size_t k, std::size_t n) const { return genring::projection(monad, k, n); }
    Op substitute(const Op& t, const std::vector<Op>& args, std::size_t n) const {
        return genring::substitute(t, args, n);
    }
    std::optional<Op> zero(std::size_t n) const { return zero_element(monad, n); }
    bool member(const Op& t) const { return t.monad == monad && contains(monad, t.coeffs); }
    std::optional<std::vector<Op>> enumerate(std::size_t n) const;
    std::vector<Op> sample(std::size_t n) const;
    Op random(std::size_t n, Rng& rng) const { return Op{monad, random_vector(monad, n, rng)}; }
    std::string str(const Op& t) const { return t.str(); }
};

static_assert(MonadModel<CoeffModel>);

}  // namespace genring
