#include "genring/spectra.hpp"

#include <algorithm>
#include <set>

namespace genring {

namespace {

BigInt parse_param(const std::string& s, const std::string& id) {
    BigInt n;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || n.set_str(s, 10) != 0)
        throw std::invalid_argument("bad space identifier: " + id);
    return n;
}

void require_param(const BigInt& n) {
    if (n <= 1) throw std::invalid_argument("N must be > 1");
}

bool divides(const BigInt& p, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

void require_point(const SpecSpace& s, const SpecPoint& pt) {
    if (!s.contains(pt)) throw PointError("point " + pt.str() + " is not in " + s.id());
}

}  // namespace

SpecPoint SpecPoint::prime(const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + p.get_str());
    return SpecPoint{Kind::prime, p};
}

std::string SpecPoint::str() const {
    switch (kind) {
        case Kind::generic: return "xi";
        case Kind::infinity: return "inf";
        case Kind::prime: return p.get_str();
    }
    return "?";
}

SpecPoint SpecPoint::parse(const std::string& s) {
    if (s == "xi" || s == "generic") return generic();
    if (s == "inf" || s == "infinity") return infinity();
    return prime(parse_param(s, s));
}

bool operator<(const SpecPoint& a, const SpecPoint& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.p < b.p;
}

SpecSpace SpecSpace::spec_bn(const BigInt& n) {
    require_param(n);
    return SpecSpace{Kind::SpecBN, n};
}
SpecSpace SpecSpace::spec_an(const BigInt& n) {
    require_param(n);
    return SpecSpace{Kind::SpecAN, n};
}
SpecSpace SpecSpace::compactified(const BigInt& n) {
    require_param(n);
    return SpecSpace{Kind::CompactifiedN, n};
}

SpecSpace SpecSpace::parse(const std::string& id) {
    if (id == "Z") return spec_z();
    if (id == "limit") return limit();
    const auto colon = id.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad space identifier: " + id);
    const std::string head = id.substr(0, colon);
    const BigInt n = parse_param(id.substr(colon + 1), id);
    if (head == "BN") return spec_bn(n);
    if (head == "AN") return spec_an(n);
    if (head == "hat") return compactified(n);
    throw std::invalid_argument("bad space identifier: " + id);
}

std::string SpecSpace::id() const {
    switch (kind) {
        case Kind::SpecZ: return "Z";
        case Kind::SpecBN: return "BN:" + n.get_str();
        case Kind::SpecAN: return "AN:" + n.get_str();
        case Kind::CompactifiedN: return "hat:" + n.get_str();
        case Kind::CompactifiedLimit: return "limit";
    }
    return "?";
}

bool SpecSpace::contains(const SpecPoint& pt) const {
    switch (pt.kind) {
        case SpecPoint::Kind::generic: return true;
        case SpecPoint::Kind::infinity: return kind != Kind::SpecZ && kind != Kind::SpecBN;
        case SpecPoint::Kind::prime:
            if (kind == Kind::SpecBN || kind == Kind::SpecAN) return !divides(pt.p, n);
            return true;
    }
    return false;
}

std::vector<SpecPoint> points(const SpecSpace& s, const BigInt& prime_bound) {
    if (prime_bound < 2) throw std::invalid_argument("prime bound must be >= 2");
    std::vector<SpecPoint> out{SpecPoint::generic()};
    for (const auto& p : primes_up_to(prime_bound)) {
        const auto pt = SpecPoint::prime(p);
        if (s.contains(pt)) out.push_back(pt);
    }
    if (s.contains(SpecPoint::infinity())) out.push_back(SpecPoint::infinity());
    return out;
}

std::vector<SpecPoint> closure(const SpecSpace& s, const SpecPoint& pt, const BigInt& prime_bound) {
    require_point(s, pt);
    using K = SpecSpace::Kind;
    switch (pt.kind) {
        case SpecPoint::Kind::generic: return points(s, prime_bound);
        case SpecPoint::Kind::infinity: return {pt};
        case SpecPoint::Kind::prime:
            if (s.kind == K::SpecAN || (s.kind == K::CompactifiedN && !divides(pt.p, s.n)))
                return {pt, SpecPoint::infinity()};
            return {pt};
    }
    return {};
}

bool is_closed_point(const SpecSpace& s, const SpecPoint& pt) {
    if (pt.kind == SpecPoint::Kind::generic) return false;
    return closure(s, pt, BigInt(2)).size() == 1;
}

OpenSubset OpenSubset::avoiding(std::vector<SpecPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return OpenSubset{false, std::move(pts)};
}

bool OpenSubset::contains(const SpecPoint& pt) const {
    return !empty && !std::binary_search(complement.begin(), complement.end(), pt);
}

OpenSubset intersect(const OpenSubset& a, const OpenSubset& b) {
    if (a.empty || b.empty) return OpenSubset::none();
    std::vector<SpecPoint> c;
    std::set_union(a.complement.begin(), a.complement.end(), b.complement.begin(), b.complement.end(),
                   std::back_inserter(c));
    return OpenSubset{false, std::move(c)};
}

OpenSubset unite(const OpenSubset& a, const OpenSubset& b) {
    if (a.empty) return b;
    if (b.empty) return a;
    std::vector<SpecPoint> c;
    std::set_intersection(a.complement.begin(), a.complement.end(), b.complement.begin(), b.complement.end(),
                          std::back_inserter(c));
    return OpenSubset{false, std::move(c)};
}

bool is_open(const SpecSpace& s, const OpenSubset& u) {
    if (u.empty || u.complement.empty()) return true;
    bool has_inf = false, all_divide = true;
    for (const auto& pt : u.complement) {
        require_point(s, pt);
        if (pt.kind == SpecPoint::Kind::generic) return false;
        if (pt.kind == SpecPoint::Kind::infinity) has_inf = true;
        if (pt.kind == SpecPoint::Kind::prime && (s.n == 0 || !divides(pt.p, s.n))) all_divide = false;
    }
    switch (s.kind) {
        case SpecSpace::Kind::SpecZ:
        case SpecSpace::Kind::SpecBN:
        case SpecSpace::Kind::CompactifiedLimit: return true;
        case SpecSpace::Kind::SpecAN: return has_inf;
        case SpecSpace::Kind::CompactifiedN: return has_inf || all_divide;
    }
    return false;
}

bool is_open_trace(const SpecSpace& s, const std::vector<SpecPoint>& universe, const std::vector<SpecPoint>& members) {
    if (members.empty()) return true;
    std::vector<SpecPoint> comp;
    for (const auto& pt : universe)
        if (std::find(members.begin(), members.end(), pt) == members.end()) comp.push_back(pt);
    for (const auto& pt : members)
        if (std::find(universe.begin(), universe.end(), pt) == universe.end())
            throw std::invalid_argument("member " + pt.str() + " outside the universe");
    return is_open(s, OpenSubset::avoiding(std::move(comp)));
}

bool LocalRing::contains(const Rat& x) const {
    switch (kind) {
        case Kind::Q: return true;
        case Kind::Zp: return x.is_zero() || vp(param, x) >= 0;
        case Kind::AN: return genring::contains(CoeffMonad::AN(param), RatVec{x});
        case Kind::ZlocInf: return x.abs() <= Rat(1);
    }
    return false;
}

std::string LocalRing::str() const {
    switch (kind) {
        case Kind::Q: return "Q";
        case Kind::Zp: return "Z_(" + param.get_str() + ")";
        case Kind::AN: return "AN:" + param.get_str();
        case Kind::ZlocInf: return "Zinf";
    }
    return "?";
}

LocalRing stalk(const SpecSpace& s, const SpecPoint& pt) {
    require_point(s, pt);
    switch (pt.kind) {
        case SpecPoint::Kind::generic: return LocalRing{LocalRing::Kind::Q, 0};
        case SpecPoint::Kind::prime: return LocalRing{LocalRing::Kind::Zp, pt.p};
        case SpecPoint::Kind::infinity:
            if (s.kind == SpecSpace::Kind::CompactifiedLimit) return LocalRing{LocalRing::Kind::ZlocInf, 0};
            return LocalRing{LocalRing::Kind::AN, s.n};
    }
    return {};
}

CoeffMonad sections_principal(const SpecSpace& s, const Rat& f) {
    if (f.is_zero()) throw std::invalid_argument("D(0) is empty");
    auto invert_numerator = [&](const BigInt& base) {
        const BigInt r = radical(f.num()) * base;
        return r == 1 ? CoeffMonad::Z() : CoeffMonad::BN(radical(r));
    };
    switch (s.kind) {
        case SpecSpace::Kind::SpecZ:
            if (!f.is_integer()) throw std::invalid_argument("f must be an integer on Spec Z");
            return invert_numerator(1);
        case SpecSpace::Kind::SpecBN:
            if (!contains(CoeffMonad::BN(s.n), RatVec{f})) throw std::invalid_argument("f is not in B_N");
            return invert_numerator(s.n);
        case SpecSpace::Kind::SpecAN:
            if (!contains(CoeffMonad::AN(s.n), RatVec{f})) throw std::invalid_argument("f is not in A_N");
            if (f.abs() == Rat(1)) return CoeffMonad::AN(s.n);
            return invert_numerator(s.n);
        default:
            if (f.abs() != Rat(1)) throw std::invalid_argument("the only global units are ±1");
            return global_sections(s);
    }
}

CoeffMonad global_sections(const SpecSpace& s) {
    switch (s.kind) {
        case SpecSpace::Kind::SpecZ: return CoeffMonad::Z();
        case SpecSpace::Kind::SpecBN: return CoeffMonad::BN(s.n);
        case SpecSpace::Kind::SpecAN: return CoeffMonad::AN(s.n);
        case SpecSpace::Kind::CompactifiedN: return intersect({CoeffMonad::Z(), CoeffMonad::AN(s.n)});
        case SpecSpace::Kind::CompactifiedLimit: return intersect({CoeffMonad::Z(), CoeffMonad::ZlocInf()});
    }
    return CoeffMonad::Z();
}

SystemMorphism system_morphism(const BigInt& n, const BigInt& m) {
    require_param(n);
    require_param(m);
    SystemMorphism res;
    res.n = n;
    res.m = m;
    const auto target = SpecSpace::compactified(n);
    const auto source = SpecSpace::compactified(n * m);
    std::set<BigInt> relevant;
    for (const auto& p : prime_divisors(n * m)) relevant.insert(p);
    for (const auto& p : primes_up_to(13)) {
        if (relevant.size() >= 11) break;
        relevant.insert(p);
    }
    if (relevant.size() > 12) throw std::invalid_argument("too many prime divisors for the open-set check");
    std::vector<SpecPoint> pts;
    for (const auto& p : relevant) pts.push_back(SpecPoint::prime(p));
    pts.push_back(SpecPoint::infinity());
    res.continuous = res.homeomorphism = true;
    for (unsigned long mask = 0; mask < (1ul << pts.size()); ++mask) {
        std::vector<SpecPoint> comp;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (mask >> i & 1) comp.push_back(pts[i]);
        const auto u = OpenSubset::avoiding(comp);
        const bool in_target = is_open(target, u), in_source = is_open(source, u);
        ++res.opens_checked;
        // the map is the identity on points, so preimages are the same sets
        if (in_target && !in_source) res.continuous = false;
        if (in_source && !in_target) {
            res.homeomorphism = false;
            if (!res.witness && comp.size() == 1 && comp[0].kind == SpecPoint::Kind::prime) res.witness = comp[0].p;
        }
    }
    res.identity = res.homeomorphism && divides(radical(m), radical(n));
    return res;
}

std::vector<FiniteIdeal> FiniteSpectrum::primes() const {
    std::vector<FiniteIdeal> out;
    for (const auto& i : ideals)
        if (i.prime) out.push_back(i);
    return out;
}

}  // namespace genring
