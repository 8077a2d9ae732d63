#include "genring/picard.hpp"

#include <algorithm>
#include <stdexcept>

namespace genring {

FactorVec fv_add(const FactorVec& a, const FactorVec& b) {
    FactorVec out = a;
    for (const auto& [p, e] : b) {
        const long s = (out[p] += e);
        if (s == 0) out.erase(p);
    }
    return out;
}

FactorVec fv_neg(const FactorVec& a) {
    FactorVec out;
    for (const auto& [p, e] : a) out[p] = -e;
    return out;
}

Rat fv_value(const FactorVec& a) {
    BigInt num = 1, den = 1;
    for (const auto& [p, e] : a) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        (e > 0 ? num : den) *= pe;
    }
    return Rat(num, den);
}

std::string fv_str(const FactorVec& a) {
    std::string out = "{";
    for (auto it = a.begin(); it != a.end(); ++it) {
        if (it != a.begin()) out += ", ";
        out += it->first.get_str() + ":" + std::to_string(it->second);
    }
    return out + "}";
}

std::vector<std::string> PicGroup::basis() const {
    std::vector<std::string> out;
    for (const auto& p : primes) out.push_back("log " + p.get_str());
    return out;
}

FactorVec PicGroup::generator(const BigInt& p) const {
    if (std::find(primes.begin(), primes.end(), p) == primes.end())
        throw std::invalid_argument(p.get_str() + " does not divide " + n.get_str());
    return FactorVec{{p, 1}};
}

bool PicGroup::contains(const FactorVec& x) const {
    return std::all_of(x.begin(), x.end(), [&](const auto& kv) {
        return kv.second != 0 && std::find(primes.begin(), primes.end(), kv.first) != primes.end();
    });
}

FactorVec PicGroup::tensor(const FactorVec& a, const FactorVec& b) const {
    if (!contains(a) || !contains(b)) throw std::invalid_argument("class not in Pic at level " + n.get_str());
    return fv_add(a, b);
}

FactorVec PicGroup::inverse(const FactorVec& a) const {
    if (!contains(a)) throw std::invalid_argument("class not in Pic at level " + n.get_str());
    return fv_neg(a);
}

PicGroup pic_group(const BigInt& n) {
    if (n <= 1) throw std::invalid_argument("N must be > 1");
    return PicGroup{n, prime_divisors(n)};
}

FactorVec pic_include(const PicGroup& from, const PicGroup& to, const FactorVec& x) {
    if (to.n % from.n != 0) throw std::invalid_argument(from.n.get_str() + " does not divide " + to.n.get_str());
    if (!from.contains(x)) throw std::invalid_argument("class not in Pic at level " + from.n.get_str());
    return x;
}

FactorVec pic_limit_element(const Rat& lambda) {
    if (lambda <= Rat(0)) throw std::invalid_argument("gluing scalar must be positive");
    FactorVec out;
    for (const auto& [p, e] : factorize(lambda.num())) out[p] = e;
    for (const auto& [p, e] : factorize(lambda.den())) out[p] = -e;
    return out;
}

FactorVec bundle_from_gluing(const BigInt& n, const Rat& lambda) {
    const auto pic = pic_group(n);
    auto x = pic_limit_element(lambda);
    if (!pic.contains(x)) throw std::invalid_argument(lambda.str() + " is not a unit of B_" + n.get_str());
    return x;
}

bool line_bundle_trivial(const SpecSpace& base, const LineDatum& d) {
    if (d.rank != 1) throw std::invalid_argument("rank must be 1, got " + std::to_string(d.rank));
    if (d.scalar == Rat(0)) throw std::invalid_argument("gluing scalar must be nonzero");
    switch (base.kind) {
        case SpecSpace::Kind::SpecZ:
        case SpecSpace::Kind::SpecBN:
        case SpecSpace::Kind::SpecAN:
            return true;
        default:
            throw std::invalid_argument(base.id() + " is not affine; use the Picard group");
    }
}

}  // namespace genring
