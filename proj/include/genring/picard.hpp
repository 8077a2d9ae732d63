#pragma once

#include <map>
#include <string>
#include <vector>

#include "genring/exactnum.hpp"
#include "genring/spectra.hpp"

namespace genring {

// prime -> exponent, zero exponents never stored; stands for Π p^e > 0
using FactorVec = std::map<BigInt, long>;

FactorVec fv_add(const FactorVec& a, const FactorVec& b);
FactorVec fv_neg(const FactorVec& a);
Rat fv_value(const FactorVec& a);
std::string fv_str(const FactorVec& a);  // "{2:-1, 3:1}"

// Pic of the compactification at level N: free on O(log p), p | N.
struct PicGroup {
    BigInt n;
    std::vector<BigInt> primes;

    std::size_t rank() const { return primes.size(); }
    std::vector<std::string> basis() const;  // "log 2", "log 3", ...
    FactorVec generator(const BigInt& p) const;
    bool contains(const FactorVec& x) const;  // supported on p | N
    FactorVec tensor(const FactorVec& a, const FactorVec& b) const;
    FactorVec inverse(const FactorVec& a) const;
    static bool is_trivial(const FactorVec& a) { return a.empty(); }
};

PicGroup pic_group(const BigInt& n);

// Pic(from) -> Pic(to) for from.n | to.n
FactorVec pic_include(const PicGroup& from, const PicGroup& to, const FactorVec& x);

// Class in the limit of the bundle glued by λ > 0.
FactorVec pic_limit_element(const Rat& lambda);

// Class at level N of the bundle glued from trivial bundles on Spec Z and
// Spec A_N by a positive unit λ of B_N.
FactorVec bundle_from_gluing(const BigInt& n, const Rat& lambda);

// Projective module over an affine chart, given by rank and gluing scalar.
struct LineDatum {
    std::size_t rank = 1;
    Rat scalar = 1;
};

// Rank-1 projectives over Spec Z, Spec B_N and Spec A_N are trivial.
bool line_bundle_trivial(const SpecSpace& base, const LineDatum& d);

}  // namespace genring
