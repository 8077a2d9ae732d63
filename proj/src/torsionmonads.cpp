#include "genring/torsionmonads.hpp"

#include <stdexcept>

namespace genring {

namespace {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

std::string CycElement::str() const {
    if (!value) return "0";
    return "z^" + std::to_string(value->exp) + "*x" + std::to_string(value->index + 1);
}

CycElement cyc_zero(long n, std::size_t arity) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    return CycElement{n, arity, std::nullopt};
}

CycElement cyc_make(long n, std::size_t arity, std::size_t index, long exp) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (index >= arity) throw std::invalid_argument("index out of range");
    return CycElement{n, arity, CycElement::Root{index, mod(exp, n)}};
}

CycElement cyc_substitute(const CycElement& t, const std::vector<CycElement>& args, std::size_t arity) {
    if (args.size() != t.arity) throw std::invalid_argument("cyc_substitute: wrong number of arguments");
    for (const auto& a : args) {
        if (a.n != t.n) throw std::invalid_argument("cyc_substitute: order mismatch");
        if (a.arity != arity) throw std::invalid_argument("cyc_substitute: arity mismatch");
    }
    if (t.is_zero()) return cyc_zero(t.n, arity);
    const CycElement& picked = args[t.value->index];
    if (picked.is_zero()) return cyc_zero(t.n, arity);
    return cyc_make(t.n, arity, picked.value->index, t.value->exp + picked.value->exp);
}

CycElement cyc_induced(const std::vector<std::size_t>& phi, std::size_t target_arity, const CycElement& t) {
    if (phi.size() != t.arity) throw std::invalid_argument("cyc_induced: map domain differs from arity");
    for (auto j : phi)
        if (j >= target_arity) throw std::invalid_argument("cyc_induced: target index out of range");
    if (t.is_zero()) return cyc_zero(t.n, target_arity);
    return cyc_make(t.n, target_arity, phi[t.value->index], t.value->exp);
}

CycElement f1inf_embed(const CycElement& t, long m) {
    if (m < 1) throw std::invalid_argument("embedding factor must be >= 1");
    if (t.is_zero()) return cyc_zero(t.n * m, t.arity);
    return cyc_make(t.n * m, t.arity, t.value->index, t.value->exp * m);
}

std::vector<CycElement> cyc_enumerate(long n, std::size_t arity) {
    std::vector<CycElement> out{cyc_zero(n, arity)};
    for (std::size_t i = 0; i < arity; ++i)
        for (long e = 0; e < n; ++e) out.push_back(cyc_make(n, arity, i, e));
    return out;
}

RatVec cyc_to_f12(const CycElement& t) {
    if (t.n != 2) throw std::invalid_argument("only F_{1^2} maps to F12");
    RatVec v(t.arity, Rat(0));
    if (t.value) v[t.value->index] = t.value->exp == 0 ? Rat(1) : Rat(-1);
    return v;
}

bool CycModel::member(const CycElement& t) const {
    if (t.n != n) return false;
    if (!t.value) return true;
    return t.value->index < t.arity && t.value->exp >= 0 && t.value->exp < n;
}

CycElement CycModel::random(std::size_t m, Rng& rng) const {
    const long r = std::uniform_int_distribution<long>(-1, static_cast<long>(m) - 1)(rng);
    if (r < 0) return cyc_zero(n, m);
    return cyc_make(n, m, static_cast<std::size_t>(r), std::uniform_int_distribution<long>(0, n - 1)(rng));
}

bool SignClass::is_zero() const {
    for (int s : signs)
        if (s) return false;
    return true;
}

std::string SignClass::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) out += ",";
        out += signs[i] > 0 ? "+" : (signs[i] < 0 ? "-" : "0");
    }
    return out + ")";
}

SignClass finf_classify(const RatVec& v) {
    const Rat mass = l1_norm(v);
    if (mass > Rat(1)) throw std::invalid_argument("not an octahedral combination: " + to_string(v));
    SignClass s{std::vector<int>(v.size(), 0)};
    if (mass < Rat(1)) return s;
    for (std::size_t i = 0; i < v.size(); ++i) s.signs[i] = v[i].sign();
    return s;
}

RatVec canonical_rep(const SignClass& s) {
    long nonzero = 0;
    for (int x : s.signs) {
        if (x < -1 || x > 1) throw std::invalid_argument("sign entries must be -1, 0 or 1");
        nonzero += x != 0;
    }
    RatVec v(s.signs.size(), Rat(0));
    if (nonzero == 0) return v;
    const Rat mag = Rat(1, nonzero);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (s.signs[i]) v[i] = s.signs[i] > 0 ? mag : -mag;
    return v;
}

SignClass finf_substitute(const SignClass& t, const std::vector<SignClass>& args, std::size_t arity) {
    if (args.size() != t.arity()) throw std::invalid_argument("finf_substitute: wrong number of arguments");
    const RatVec tr = canonical_rep(t);
    RatVec out(arity, Rat(0));
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].arity() != arity) throw std::invalid_argument("finf_substitute: arity mismatch");
        if (tr[i].is_zero()) continue;
        const RatVec ar = canonical_rep(args[i]);
        for (std::size_t j = 0; j < arity; ++j) out[j] += tr[i] * ar[j];
    }
    return finf_classify(out);
}

SignClass finf_induced(const std::vector<std::size_t>& phi, std::size_t target_arity, const SignClass& t) {
    if (phi.size() != t.arity()) throw std::invalid_argument("finf_induced: map domain differs from arity");
    const RatVec tr = canonical_rep(t);
    RatVec out(target_arity, Rat(0));
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] >= target_arity) throw std::invalid_argument("finf_induced: target index out of range");
        out[phi[i]] += tr[i];
    }
    return finf_classify(out);
}

SignClass finf_star(const SignClass& x, const SignClass& y) {
    return finf_substitute(SignClass{{1, 1}}, {x, y}, x.arity());
}

SignClass finf_negate(const SignClass& x) {
    SignClass r = x;
    for (int& s : r.signs) s = -s;
    return r;
}

std::vector<SignClass> finf_enumerate(std::size_t arity) {
    std::vector<SignClass> out;
    std::vector<int> s(arity, -1);
    while (true) {
        out.push_back(SignClass{s});
        std::size_t pos = 0;
        while (pos < arity && s[pos] == 1) s[pos++] = -1;
        if (pos == arity) break;
        ++s[pos];
    }
    return out;
}

SignClass FinfModel::projection(std::size_t k, std::size_t m) const {
    if (k >= m) throw std::invalid_argument("projection index out of range");
    SignClass s{std::vector<int>(m, 0)};
    s.signs[k] = 1;
    return s;
}

bool FinfModel::member(const SignClass& t) const {
    for (int s : t.signs)
        if (s < -1 || s > 1) return false;
    return true;
}

SignClass FinfModel::random(std::size_t m, Rng& rng) const {
    SignClass s{std::vector<int>(m, 0)};
    std::uniform_int_distribution<int> d(-1, 1);
    for (int& x : s.signs) x = d(rng);
    return s;
}

}  // namespace genring
