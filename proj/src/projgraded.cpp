#include "genring/projgraded.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace genring {

namespace {

BigInt mass(const IntVec& v) {
    BigInt s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

BigInt power(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

bool divides(const BigInt& p, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

BigInt scalar_of(const GradedRingR& r, Chart f) { return f == Chart::f1 ? BigInt(1) : r.n; }
long degree_of(Chart f) { return f == Chart::f1f2 ? 2 : 1; }

SpecSpace spec_of(const CoeffMonad& m) {
    switch (m.tag()) {
        case CoeffMonad::Tag::Z: return SpecSpace::spec_z();
        case CoeffMonad::Tag::AN: return SpecSpace::spec_an(m.param());
        case CoeffMonad::Tag::BN: return SpecSpace::spec_bn(m.param());
        default: throw std::invalid_argument("no spectrum model for " + m.id());
    }
}

}  // namespace

GradedRingR::GradedRingR(const BigInt& n) : n(n) {
    if (n <= 1) throw std::invalid_argument("N must be > 1");
}

std::string GradedElement::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += coeffs[i].get_str();
    }
    return out + ")T^" + std::to_string(degree);
}

bool graded_contains(const GradedRingR& r, long d, const IntVec& v) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    return mass(v) <= power(r.n, static_cast<unsigned long>(d));
}

GradedElement graded_make(const GradedRingR& r, long d, IntVec v) {
    if (!graded_contains(r, d, v)) throw std::invalid_argument("coefficients exceed N^d");
    return GradedElement{d, std::move(v)};
}

GradedElement graded_unit() { return GradedElement{0, {BigInt(1)}}; }

GradedElement graded_projection(std::size_t k, std::size_t n) {
    if (k >= n) throw std::invalid_argument("projection index out of range");
    IntVec v(n, BigInt(0));
    v[k] = 1;
    return GradedElement{0, std::move(v)};
}

GradedElement graded_substitute(const GradedRingR& r, const GradedElement& t, const std::vector<GradedElement>& args,
                                std::size_t n, long b) {
    if (args.size() != t.arity()) throw std::invalid_argument("graded_substitute: wrong number of arguments");
    IntVec out(n, BigInt(0));
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].arity() != n) throw std::invalid_argument("graded_substitute: arity mismatch");
        if (args[i].degree != b) throw std::invalid_argument("graded_substitute: arguments of mixed degree");
        for (std::size_t j = 0; j < n; ++j) out[j] += t.coeffs[i] * args[i].coeffs[j];
    }
    GradedElement res{t.degree + b, std::move(out)};
    if (!graded_contains(r, res.degree, res.coeffs)) throw std::logic_error("graded substitution left R");
    return res;
}

GradedElement graded_substitute(const GradedRingR& r, const GradedElement& t, const std::vector<GradedElement>& args) {
    if (args.empty()) throw std::invalid_argument("graded_substitute: arity and degree needed for constants");
    return graded_substitute(r, t, args, args[0].arity(), args[0].degree);
}

GradedElement graded_random(const GradedRingR& r, long d, std::size_t n, Rng& rng) {
    // spread a random budget ≤ N^d over the coordinates
    const BigInt cap = power(r.n, static_cast<unsigned long>(d));
    const unsigned long c = cap.fits_ulong_p() ? std::min(cap.get_ui(), 1000000ul) : 1000000ul;
    unsigned long left = std::uniform_int_distribution<unsigned long>(0, c)(rng);
    IntVec v(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned long x = i + 1 == n ? left : std::uniform_int_distribution<unsigned long>(0, left)(rng);
        left -= x;
        v[i] = (rng() & 1) ? BigInt(x) : BigInt(-BigInt(x));
    }
    std::shuffle(v.begin(), v.end(), rng);
    return GradedElement{d, std::move(v)};
}

GradedElement f1(const GradedRingR&) { return GradedElement{1, {BigInt(1)}}; }
GradedElement f2(const GradedRingR& r) { return GradedElement{1, {r.n}}; }

std::string to_string(Chart c) {
    switch (c) {
        case Chart::f1: return "f1";
        case Chart::f2: return "f2";
        case Chart::f1f2: return "f1f2";
    }
    return "?";
}

Chart parse_chart(const std::string& s) {
    if (s == "f1") return Chart::f1;
    if (s == "f2") return Chart::f2;
    if (s == "f1f2") return Chart::f1f2;
    throw std::invalid_argument("unknown chart '" + s + "' (f1, f2, f1f2)");
}

Deg0Membership deg0_localization_contains(const GradedRingR& r, Chart f, const RatVec& v, long k_bound) {
    const BigInt s = scalar_of(r, f);
    const long g = degree_of(f);
    Deg0Membership res;
    // a denominator prime not dividing s never clears
    for (const auto& x : v)
        for (const auto& p : prime_divisors(x.den()))
            if (!divides(p, s)) {
                res.status = Deg0Membership::Status::not_member;
                return res;
            }
    // for f2, v·N^d has mass N^d·|v|_1, never ≤ N^d when |v|_1 > 1
    if (f == Chart::f2 && l1_norm(v) > Rat(1)) {
        res.status = Deg0Membership::Status::not_member;
        return res;
    }
    for (long d = 0; d <= k_bound; ++d) {
        const Rat scale(power(s, static_cast<unsigned long>(d)));
        IntVec w;
        bool integral = true;
        for (const auto& x : v) {
            const Rat y = x * scale;
            if (!y.is_integer()) {
                integral = false;
                break;
            }
            w.push_back(y.num());
        }
        if (integral && graded_contains(r, d * g, w)) {
            res.status = Deg0Membership::Status::member;
            res.d = d;
            return res;
        }
    }
    return res;
}

LocalizationReport localization_equals(const GradedRingR& r, Chart f, const CoeffMonad& target,
                                       const std::vector<RatVec>& sample, long k_bound) {
    LocalizationReport rep;
    for (const auto& v : sample) {
        ++rep.checked;
        const auto mem = deg0_localization_contains(r, f, v, k_bound);
        if (mem.status == Deg0Membership::Status::undecided) {
            ++rep.undecided;
            if (!rep.mismatch) rep.mismatch = to_string(v) + " undecided";
            continue;
        }
        if (mem.member() == contains(target, v))
            ++rep.agreed;
        else if (!rep.mismatch)
            rep.mismatch = to_string(v);
    }
    return rep;
}

std::vector<RatVec> localization_sample(const BigInt& n, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    BigInt foreign = 2;
    while (!is_prime(foreign) || divides(foreign, n)) foreign += 1;
    std::uniform_int_distribution<std::size_t> ar(1, 3);
    std::uniform_int_distribution<long> small(-9, 9);
    std::uniform_int_distribution<unsigned long> ex(1, 3);
    auto sign = [&] { return (rng() & 1) ? 1 : -1; };
    // positive integer weights summing to total
    auto split = [&](const BigInt& total, std::size_t k) {
        IntVec w(k, BigInt(0));
        BigInt left = total;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const unsigned long cap = left.fits_ulong_p() ? left.get_ui() : 1000000ul;
            w[i] = std::uniform_int_distribution<unsigned long>(0, cap)(rng);
            left -= w[i];
        }
        w[k - 1] = left;
        return w;
    };
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t k = ar(rng);
        const BigInt den = power(n, ex(rng));
        RatVec v(k, Rat(0));
        switch (i % 6) {
            case 0:  // integers, usually of mass > 1
                for (auto& x : v) x = Rat(small(rng));
                break;
            case 1: {  // mass exactly 1 over Z[1/N]
                const auto w = split(den, k);
                for (std::size_t j = 0; j < k; ++j) v[j] = Rat(BigInt(w[j] * sign()), den);
                break;
            }
            case 2: {  // one step past the boundary
                const auto w = split(den + 1, k);
                for (std::size_t j = 0; j < k; ++j) v[j] = Rat(BigInt(w[j] * sign()), den);
                break;
            }
            case 3:  // a foreign denominator
                for (auto& x : v) x = Rat(BigInt(small(rng)), den);
                v[0] = Rat(BigInt(sign()), foreign * den);
                break;
            case 4:  // Z[1/N] with arbitrary mass
                for (auto& x : v) x = Rat(BigInt(small(rng) * 7), den);
                break;
            default:  // units, zero and integer boundary points
                v[rng() % k] = Rat(sign());
                if (rng() % 3 == 0) v.assign(k, Rat(0));
                break;
        }
        out.push_back(std::move(v));
    }
    return out;
}

RadicalWitness radical_witness(const GradedRingR& r, const BigInt& u, long d) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    if (!graded_contains(r, d, {u})) throw std::invalid_argument("|u| exceeds N^d");
    const BigInt au = abs(u);
    for (long m = 1; m <= 4096; ++m) {
        const BigInt um = power(u, static_cast<unsigned long>(m));
        const long rest = d * m - 1;
        if (graded_contains(r, rest, {um})) return RadicalWitness{m, Chart::f1, GradedElement{rest, {um}}};
        if (divides(r.n, um)) {
            const BigInt c = um / r.n;
            if (graded_contains(r, rest, {c})) return RadicalWitness{m, Chart::f2, GradedElement{rest, {c}}};
        }
    }
    throw std::logic_error("no radical witness below the safety bound for " + au.get_str());
}

std::vector<std::uint32_t> ProjF1::chart(std::size_t i) const {
    if (i > n) throw std::invalid_argument("chart index out of range");
    std::vector<std::uint32_t> out;
    for (auto s : points)
        if (!(s >> i & 1u)) out.push_back(s);
    return out;
}

std::string ProjF1::label(std::uint32_t s) const {
    if (s == 0) return "xi";
    std::string out = "(";
    bool first = true;
    for (std::size_t i = 0; i <= n; ++i)
        if (s >> i & 1u) {
            if (!first) out += ",";
            out += "T" + std::to_string(i);
            first = false;
        }
    return out + ")";
}

ProjF1 proj_points_F1(std::size_t n) {
    if (n > 20) throw std::invalid_argument("n must be <= 20");
    ProjF1 p;
    p.n = n;
    const std::uint32_t all = (1u << (n + 1)) - 1;
    for (std::uint32_t s = 0; s < all; ++s) p.points.push_back(s);
    std::stable_sort(p.points.begin(), p.points.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    return p;
}

ProjComparison proj_is_compactification(const BigInt& n, const BigInt& bound, std::size_t samples,
                                        std::uint64_t seed) {
    const GradedRingR r(n);
    ProjComparison res;
    res.n = n;
    res.bound = bound;
    // identify each chart's sections among the candidate monads
    const auto sample = localization_sample(n, samples, seed);
    const std::vector<CoeffMonad> candidates = {CoeffMonad::Z(), CoeffMonad::AN(n), CoeffMonad::BN(n),
                                                CoeffMonad::ZlocInf(), CoeffMonad::F12()};
    std::vector<CoeffMonad> sections;
    for (Chart f : {Chart::f1, Chart::f2, Chart::f1f2}) {
        std::optional<CoeffMonad> found;
        for (const auto& c : candidates)
            if (localization_equals(r, f, c, sample).ok()) {
                found = c;
                break;
            }
        if (!found) {
            res.failure = "no candidate matches R_(" + to_string(f) + ")";
            return res;
        }
        sections.push_back(*found);
        res.chart_sections.push_back(found->id());
    }
    res.sections_agree = sections[0] == CoeffMonad::Z() && sections[1] == CoeffMonad::AN(n) &&
                         sections[2] == CoeffMonad::BN(n);
    if (!res.sections_agree) {
        res.failure = "chart sections differ from Z, AN, BN";
        return res;
    }
    const SpecSpace u1 = spec_of(sections[0]), u2 = spec_of(sections[1]), u12 = spec_of(sections[2]);
    const SpecSpace hat = SpecSpace::compactified(n);

    // points: union of the charts, overlap is the spectrum of R_(f1 f2)
    const auto p1 = points(u1, bound), p2 = points(u2, bound);
    std::vector<SpecPoint> glued, overlap;
    std::set_union(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(glued));
    std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(overlap));
    res.points = glued.size();
    res.points_agree = glued == points(hat, bound) && overlap == points(u12, bound);
    if (!res.points_agree) {
        res.failure = "point sets differ";
        return res;
    }

    // opens: U is open iff its trace on each chart is open there
    std::vector<SpecPoint> pts;
    for (const auto& p : primes_up_to(std::min(bound, BigInt(50)))) pts.push_back(SpecPoint::prime(p));
    pts.push_back(SpecPoint::infinity());
    res.opens_agree = true;
    for (unsigned long mask = 0; mask < (1ul << pts.size()); ++mask) {
        std::vector<SpecPoint> comp, c1, c2;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            comp.push_back(pts[i]);
            if (u1.contains(pts[i])) c1.push_back(pts[i]);
            if (u2.contains(pts[i])) c2.push_back(pts[i]);
        }
        const bool glued_open = is_open(u1, OpenSubset::avoiding(c1)) && is_open(u2, OpenSubset::avoiding(c2));
        ++res.opens_checked;
        if (glued_open != is_open(hat, OpenSubset::avoiding(comp))) {
            res.opens_agree = false;
            std::string c;
            for (const auto& p : comp) c += p.str() + " ";
            res.failure = "open sets differ at complement { " + c + "}";
            return res;
        }
    }
    return res;
}

}  // namespace genring
