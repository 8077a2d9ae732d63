#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genring/coeffmonads.hpp"
#include "genring/exactnum.hpp"
#include "genring/monad.hpp"

namespace genring {

struct SpecPoint {
    enum class Kind { generic, prime, infinity };
    Kind kind = Kind::generic;
    BigInt p = 0;  // set for primes only

    static SpecPoint generic() { return {}; }
    static SpecPoint prime(const BigInt& p);
    static SpecPoint infinity() { return SpecPoint{Kind::infinity, 0}; }

    std::string str() const;  // "xi", "7", "inf"
    static SpecPoint parse(const std::string& s);

    friend bool operator==(const SpecPoint& a, const SpecPoint& b) { return a.kind == b.kind && a.p == b.p; }
    // generic < primes (by value) < infinity
    friend bool operator<(const SpecPoint& a, const SpecPoint& b);
};

struct SpecSpace {
    enum class Kind { SpecZ, SpecBN, SpecAN, CompactifiedN, CompactifiedLimit };
    Kind kind = Kind::SpecZ;
    BigInt n = 0;  // N > 1 for the parametrized kinds

    static SpecSpace spec_z() { return {}; }
    static SpecSpace spec_bn(const BigInt& n);
    static SpecSpace spec_an(const BigInt& n);
    static SpecSpace compactified(const BigInt& n);
    static SpecSpace limit() { return SpecSpace{Kind::CompactifiedLimit, 0}; }

    // "Z", "BN:6", "AN:6", "hat:6", "limit"
    static SpecSpace parse(const std::string& id);
    std::string id() const;

    bool contains(const SpecPoint& pt) const;
};

class PointError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Generic point, the primes up to prime_bound that lie in s, and ∞ if present.
std::vector<SpecPoint> points(const SpecSpace& s, const BigInt& prime_bound);

// Closure of a point, truncated to primes ≤ prime_bound when infinite.
std::vector<SpecPoint> closure(const SpecSpace& s, const SpecPoint& pt, const BigInt& prime_bound);
bool is_closed_point(const SpecSpace& s, const SpecPoint& pt);

// Empty, or the space minus a finite set of points.
struct OpenSubset {
    bool empty = false;
    std::vector<SpecPoint> complement;  // sorted, no duplicates

    static OpenSubset none() { return OpenSubset{true, {}}; }
    static OpenSubset full() { return {}; }
    static OpenSubset avoiding(std::vector<SpecPoint> pts);

    bool is_full() const { return !empty && complement.empty(); }
    bool contains(const SpecPoint& pt) const;
    friend bool operator==(const OpenSubset&, const OpenSubset&) = default;
};

OpenSubset intersect(const OpenSubset& a, const OpenSubset& b);
OpenSubset unite(const OpenSubset& a, const OpenSubset& b);

bool is_open(const SpecSpace& s, const OpenSubset& u);

// Is members ⊆ universe the trace on universe of an open set of s?
bool is_open_trace(const SpecSpace& s, const std::vector<SpecPoint>& universe, const std::vector<SpecPoint>& members);

// ---- stalks and sections -------------------------------------------------------

struct LocalRing {
    enum class Kind { Q, Zp, AN, ZlocInf };
    Kind kind = Kind::Q;
    BigInt param = 0;  // p for Zp, N for AN

    bool contains(const Rat& x) const;
    std::string str() const;
};

LocalRing stalk(const SpecSpace& s, const SpecPoint& pt);

// Γ(D(f), O) as a coefficient monad; f must be a nonzero global unary operation.
CoeffMonad sections_principal(const SpecSpace& s, const Rat& f);
CoeffMonad global_sections(const SpecSpace& s);

struct SystemMorphism {
    BigInt n;        // target Spec-hat^(N)
    BigInt m;        // source Spec-hat^(NM)
    bool identity = false;
    bool continuous = false;
    bool homeomorphism = false;
    std::optional<BigInt> witness;  // prime q | M, q ∤ N
    std::size_t opens_checked = 0;
};

// f_N^{NM}; continuity and homeomorphism checked over the opens avoiding
// subsets of {primes ≤ max(13, primes of NM)} ∪ {∞}.
SystemMorphism system_morphism(const BigInt& n, const BigInt& m);

// ---- finite monads ---------------------------------------------------------------

struct FiniteIdeal {
    std::vector<std::size_t> members;  // indices into FiniteSpectrum::carrier
    bool prime = false;
};

struct FiniteSpectrum {
    std::vector<std::string> carrier;  // Σ(1)
    std::vector<FiniteIdeal> ideals;
    std::vector<FiniteIdeal> primes() const;
};

// Subsets of Σ(1) closed under every operation of arity ≤ max_arity; prime
// when the complement contains e and is closed under composition.
template <MonadModel M>
FiniteSpectrum ideals_finite(const M& m, std::size_t max_arity = 3) {
    const auto ones = m.enumerate(1);
    if (!ones) throw std::invalid_argument("underlying monoid of " + std::string(m.name()) + " is not finite");
    const std::size_t size = ones->size();
    if (size > 20) throw std::invalid_argument("underlying monoid too large for subset enumeration");
    auto index_of = [&](const typename M::Op& x) {
        for (std::size_t i = 0; i < size; ++i)
            if ((*ones)[i] == x) return i;
        throw std::logic_error("element outside Σ(1)");
    };
    std::vector<typename M::Op> ops;
    for (std::size_t k = 0; k <= max_arity; ++k) {
        auto all = m.enumerate(k);
        if (!all) throw std::invalid_argument("operations of " + std::string(m.name()) + " are not enumerable");
        ops.insert(ops.end(), all->begin(), all->end());
    }
    std::size_t unit_idx = index_of(m.unit());
    FiniteSpectrum spec;
    for (const auto& x : *ones) spec.carrier.push_back(m.str(x));
    for (unsigned long mask = 0; mask < (1ul << size); ++mask) {
        std::vector<std::size_t> mem;
        for (std::size_t i = 0; i < size; ++i)
            if (mask >> i & 1) mem.push_back(i);
        bool closed = true;
        for (const auto& t : ops) {
            const std::size_t k = m.arity(t);
            if (k > 0 && mem.empty()) continue;
            std::vector<std::size_t> idx(k, 0);
            while (closed) {
                std::vector<typename M::Op> args;
                for (auto i : idx) args.push_back((*ones)[mem[i]]);
                if (!(mask >> index_of(m.substitute(t, args, 1)) & 1)) closed = false;
                std::size_t pos = 0;
                while (pos < k && ++idx[pos] == mem.size()) idx[pos++] = 0;
                if (pos == k) break;
            }
            if (!closed) break;
        }
        if (!closed) continue;
        FiniteIdeal ideal{mem, false};
        if (!(mask >> unit_idx & 1)) {
            ideal.prime = true;
            for (std::size_t a = 0; a < size && ideal.prime; ++a)
                for (std::size_t b = 0; b < size && ideal.prime; ++b)
                    if (!(mask >> a & 1) && !(mask >> b & 1) &&
                        (mask >> index_of(m.substitute((*ones)[a], {(*ones)[b]}, 1)) & 1))
                        ideal.prime = false;
        }
        spec.ideals.push_back(std::move(ideal));
    }
    return spec;
}

}  // namespace genring
