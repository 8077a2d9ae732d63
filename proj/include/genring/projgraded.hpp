#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genring/coeffmonads.hpp"
#include "genring/exactnum.hpp"
#include "genring/monad.hpp"
#include "genring/spectra.hpp"

namespace genring {

using IntVec = std::vector<BigInt>;

// R_d(n) = { λ ∈ Z^n : Σ|λ_i| ≤ N^d }
struct GradedRingR {
    BigInt n;
    explicit GradedRingR(const BigInt& n);
};

// (λ)·T^d
struct GradedElement {
    long degree = 0;
    IntVec coeffs;

    std::size_t arity() const { return coeffs.size(); }
    std::string str() const;
    friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

bool graded_contains(const GradedRingR& r, long d, const IntVec& v);
GradedElement graded_make(const GradedRingR& r, long d, IntVec v);  // throws unless contained
GradedElement graded_unit();
GradedElement graded_projection(std::size_t k, std::size_t n);
// Degree adds: t in degree a, arguments in degree b and arity n give degree
// a + b. n and b are explicit so that constants substitute too.
GradedElement graded_substitute(const GradedRingR& r, const GradedElement& t, const std::vector<GradedElement>& args,
                                std::size_t n, long b);
GradedElement graded_substitute(const GradedRingR& r, const GradedElement& t, const std::vector<GradedElement>& args);
GradedElement graded_random(const GradedRingR& r, long d, std::size_t n, Rng& rng);

// T and N·T
GradedElement f1(const GradedRingR& r);
GradedElement f2(const GradedRingR& r);

enum class Chart { f1, f2, f1f2 };
std::string to_string(Chart c);
Chart parse_chart(const std::string& s);

struct Deg0Membership {
    enum class Status { member, not_member, undecided };
    Status status = Status::undecided;
    std::optional<long> d;  // certificate: v·s^d ∈ R_{d·deg f}
    bool member() const { return status == Status::member; }
};

// v ∈ R_(f): some d ≤ k_bound makes v·(scalar of f)^d an integer vector of
// mass ≤ N^{d·deg f}. Non-membership is decided exactly where possible.
Deg0Membership deg0_localization_contains(const GradedRingR& r, Chart f, const RatVec& v, long k_bound);

struct LocalizationReport {
    std::size_t checked = 0;
    std::size_t agreed = 0;
    std::size_t undecided = 0;
    std::optional<std::string> mismatch;  // first disagreeing vector
    bool ok() const { return checked > 0 && agreed == checked; }
};

LocalizationReport localization_equals(const GradedRingR& r, Chart f, const CoeffMonad& target,
                                       const std::vector<RatVec>& sample, long k_bound = 256);

// Mixed sample: members and non-members of Z, A_N and B_N, including
// vectors on the boundary Σ|λ_i| = 1 and vectors one step outside it.
std::vector<RatVec> localization_sample(const BigInt& n, std::size_t count, std::uint64_t seed);

struct RadicalWitness {
    long m = 0;
    Chart factor = Chart::f1;  // f1 or f2
    GradedElement cofactor;
};

// Smallest m with (u T^d)^m = f_i · r, r ∈ R; f1 preferred on ties.
RadicalWitness radical_witness(const GradedRingR& r, const BigInt& u, long d);

// ---- P^n over F_1 ------------------------------------------------------------------

struct ProjF1 {
    std::size_t n = 0;
    std::vector<std::uint32_t> points;  // proper subsets S of {0..n}, the ideal (T_i : i ∈ S)

    std::size_t count() const { return points.size(); }
    std::vector<std::uint32_t> chart(std::size_t i) const;  // D+(T_i): i ∉ S
    std::string label(std::uint32_t s) const;
};

ProjF1 proj_points_F1(std::size_t n);

// ---- Proj R versus the compactification ---------------------------------------------

struct ProjComparison {
    BigInt n;
    BigInt bound;
    std::vector<std::string> chart_sections;  // R_(f1), R_(f2), R_(f1 f2)
    bool sections_agree = false;
    bool points_agree = false;
    bool opens_agree = false;
    std::size_t points = 0;
    std::size_t opens_checked = 0;
    std::optional<std::string> failure;
    bool ok() const { return sections_agree && points_agree && opens_agree; }
};

// Glues Spec R_(f1) and Spec R_(f2) along Spec R_(f1 f2) and compares the
// result with Spec-hat^(N) on all points up to the prime bound. Opens are
// compared on every complement drawn from the primes up to min(bound, 50) and ∞.
ProjComparison proj_is_compactification(const BigInt& n, const BigInt& bound, std::size_t samples = 500,
                                        std::uint64_t seed = 7);

}  // namespace genring
