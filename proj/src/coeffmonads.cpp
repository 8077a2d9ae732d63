#include "genring/coeffmonads.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace genring {

namespace {

bool den_divides_power(const BigInt& den, const BigInt& k) {
    BigInt d = den;
    BigInt g;
    while (true) {
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), k.get_mpz_t());
        if (g == 1) break;
        d /= g;
    }
    return d == 1;
}

std::size_t nonzero_count(const RatVec& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); }));
}

const Rat* single_nonzero(const RatVec& v) {
    const Rat* found = nullptr;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        if (found) return nullptr;
        found = &x;
    }
    return found;
}

bool divides(const BigInt& a, const BigInt& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

// Atomic predicates: Z, N, BN(k), ZlocInf, Fempty.
void collect_atoms(const CoeffMonad& m, std::vector<CoeffMonad>& out) {
    using T = CoeffMonad::Tag;
    switch (m.tag()) {
    case T::AN:
        out.push_back(CoeffMonad::BN(m.param()));
        out.push_back(CoeffMonad::ZlocInf());
        break;
    case T::F1:
        out.push_back(CoeffMonad::N());
        out.push_back(CoeffMonad::ZlocInf());
        break;
    case T::F12:
        out.push_back(CoeffMonad::Z());
        out.push_back(CoeffMonad::ZlocInf());
        break;
    case T::Intersection:
        for (const auto& p : m.parts()) collect_atoms(p, out);
        break;
    default:
        out.push_back(m);
    }
}

bool atom_subset(const CoeffMonad& a, const CoeffMonad& b) {
    using T = CoeffMonad::Tag;
    if (a.tag() == T::Fempty) return true;
    switch (b.tag()) {
    case T::Z: return a.tag() == T::Z || a.tag() == T::N;
    case T::N: return a.tag() == T::N;
    case T::BN:
        if (a.tag() == T::Z || a.tag() == T::N) return true;
        return a.tag() == T::BN && divides(radical(a.param()), radical(b.param()));
    case T::ZlocInf: return a.tag() == T::ZlocInf;
    case T::Fempty: return false;
    default: return false;
    }
}

std::vector<Rat> grid_values(const CoeffMonad& m) {
    using T = CoeffMonad::Tag;
    std::vector<Rat> vals;
    auto pm = [&](const Rat& x) {
        vals.push_back(x);
        vals.push_back(-x);
    };
    switch (m.tag()) {
    case T::Z: vals = {0, 1, -1, 2, -2}; break;
    case T::N: vals = {0, 1, 2, 3}; break;
    case T::BN: {
        const Rat k(m.param());
        vals.push_back(0);
        pm(1);
        pm(2);
        pm(k.inverse());
        pm((k + 1) / k);
        pm(k.pow(-2));
        break;
    }
    case T::ZlocInf:
        vals.push_back(0);
        pm(1);
        pm(Rat(1, 2));
        pm(Rat(1, 3));
        pm(Rat(2, 3));
        pm(Rat(1, 4));
        break;
    case T::AN: {
        const Rat k(m.param());
        vals.push_back(0);
        pm(1);
        pm(k.inverse());
        pm((k - 1) / k);
        pm(k.pow(-2));
        break;
    }
    case T::F1:
    case T::Fempty: vals = {0, 1}; break;
    case T::F12: vals = {0, 1, -1}; break;
    case T::Intersection:
        for (const auto& p : m.parts()) {
            auto sub = grid_values(p);
            vals.insert(vals.end(), sub.begin(), sub.end());
        }
        break;
    }
    std::vector<Rat> out;
    for (auto& v : vals)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

// Random vector with Σ|u_i| ≤ budget, as integers.
std::vector<BigInt> bounded_integers(std::size_t n, long budget, Rng& rng) {
    std::vector<BigInt> u(n, 0);
    long left = budget;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order) {
        std::uniform_int_distribution<long> d(-left, left);
        long x = d(rng);
        u[i] = x;
        left -= x < 0 ? -x : x;
    }
    return u;
}

}  // namespace

CoeffMonad CoeffMonad::BN(const BigInt& k) {
    if (k <= 1) throw std::invalid_argument("BN needs N > 1");
    CoeffMonad m(Tag::BN);
    m.param_ = k;
    return m;
}

CoeffMonad CoeffMonad::AN(const BigInt& k) {
    if (k <= 1) throw std::invalid_argument("AN needs N > 1");
    CoeffMonad m(Tag::AN);
    m.param_ = k;
    return m;
}

CoeffMonad CoeffMonad::meet(std::vector<CoeffMonad> parts) {
    if (parts.empty()) throw std::invalid_argument("empty intersection");
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    if (parts.size() == 1) return parts.front();
    CoeffMonad m(Tag::Intersection);
    m.parts_ = std::move(parts);
    return m;
}

int CoeffMonad::compare(const CoeffMonad& a, const CoeffMonad& b) {
    if (a.tag_ != b.tag_) return a.tag_ < b.tag_ ? -1 : 1;
    if (a.param_ != b.param_) return a.param_ < b.param_ ? -1 : 1;
    const std::size_t n = std::min(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a.parts_[i], b.parts_[i])) return c;
    if (a.parts_.size() != b.parts_.size()) return a.parts_.size() < b.parts_.size() ? -1 : 1;
    return 0;
}

CoeffMonad CoeffMonad::parse(std::string_view id) {
    const std::string s(id);
    if (s == "Z") return Z();
    if (s == "N") return N();
    if (s == "Zinf") return ZlocInf();
    if (s == "F1") return F1();
    if (s == "F12") return F12();
    if (s == "Fempty") return Fempty();
    auto param = [&](std::size_t at) {
        const std::string num = s.substr(at);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("bad monad parameter in '" + s + "'");
        return BigInt(num, 10);
    };
    if (s.rfind("BN:", 0) == 0) return BN(param(3));
    if (s.rfind("AN:", 0) == 0) return AN(param(3));
    if (s.rfind("meet(", 0) == 0 && s.back() == ')') {
        std::vector<CoeffMonad> parts;
        int depth = 0;
        std::size_t start = 5;
        for (std::size_t i = 5; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (s[i] == ',' && depth == 0) {
                parts.push_back(parse(s.substr(start, i - start)));
                start = i + 1;
            }
        }
        parts.push_back(parse(s.substr(start, s.size() - 1 - start)));
        return meet(std::move(parts));
    }
    throw std::invalid_argument("unknown monad '" + s + "'");
}

std::string CoeffMonad::id() const {
    switch (tag_) {
    case Tag::Z: return "Z";
    case Tag::N: return "N";
    case Tag::BN: return "BN:" + param_.get_str();
    case Tag::ZlocInf: return "Zinf";
    case Tag::AN: return "AN:" + param_.get_str();
    case Tag::F1: return "F1";
    case Tag::F12: return "F12";
    case Tag::Fempty: return "Fempty";
    case Tag::Intersection: {
        std::string out = "meet(";
        for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + parts_[i].id();
        return out + ")";
    }
    }
    return "?";
}

bool CoeffMonad::has_constant() const {
    if (tag_ == Tag::Fempty) return false;
    if (tag_ == Tag::Intersection)
        return std::all_of(parts_.begin(), parts_.end(), [](const CoeffMonad& p) { return p.has_constant(); });
    return true;
}

bool contains(const CoeffMonad& m, const RatVec& v) {
    using T = CoeffMonad::Tag;
    switch (m.tag()) {
    case T::Z: return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_integer(); });
    case T::N:
        return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_integer() && x.sign() >= 0; });
    case T::BN:
        return std::all_of(v.begin(), v.end(), [&](const Rat& x) { return den_divides_power(x.den(), m.param()); });
    case T::ZlocInf: return l1_norm(v) <= Rat(1);
    case T::AN: return contains(CoeffMonad::BN(m.param()), v) && l1_norm(v) <= Rat(1);
    case T::F1: {
        if (nonzero_count(v) == 0) return true;
        const Rat* x = single_nonzero(v);
        return x && *x == Rat(1);
    }
    case T::F12: {
        if (nonzero_count(v) == 0) return true;
        const Rat* x = single_nonzero(v);
        return x && x->abs() == Rat(1);
    }
    case T::Fempty: {
        const Rat* x = single_nonzero(v);
        return x && *x == Rat(1);
    }
    case T::Intersection:
        return std::all_of(m.parts().begin(), m.parts().end(), [&](const CoeffMonad& p) { return contains(p, v); });
    }
    return false;
}

bool known_subset(const CoeffMonad& a, const CoeffMonad& b) {
    std::vector<CoeffMonad> aa, bb;
    collect_atoms(a, aa);
    collect_atoms(b, bb);
    return std::all_of(bb.begin(), bb.end(), [&](const CoeffMonad& y) {
        return std::any_of(aa.begin(), aa.end(), [&](const CoeffMonad& x) { return atom_subset(x, y); });
    });
}

CoeffMonad intersect(const std::vector<CoeffMonad>& ms) {
    using T = CoeffMonad::Tag;
    if (ms.empty()) throw std::invalid_argument("empty intersection");
    std::vector<CoeffMonad> atoms;
    for (const auto& m : ms) collect_atoms(m, atoms);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    // absorption: drop y when some other kept atom x ⊆ y
    std::vector<CoeffMonad> kept;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < atoms.size() && !redundant; ++j) {
            if (i == j || !atom_subset(atoms[j], atoms[i])) continue;
            // mutual inclusion (B_a vs B_b with rad a = rad b): keep the first
            redundant = !atom_subset(atoms[i], atoms[j]) || j < i;
        }
        if (!redundant) kept.push_back(atoms[i]);
    }
    if (kept.size() == 1) {
        // a single input that was already atomic keeps its own parameter
        return kept.front();
    }
    if (kept.size() == 2 && kept[1].tag() == T::ZlocInf) {
        const auto& x = kept[0];
        if (x.tag() == T::N) return CoeffMonad::F1();
        if (x.tag() == T::Z) return CoeffMonad::F12();
        if (x.tag() == T::BN) return CoeffMonad::AN(x.param());
    }
    return CoeffMonad::meet(kept);
}

Element make_element(const CoeffMonad& m, RatVec v) {
    if (!contains(m, v)) throw std::invalid_argument(to_string(v) + " is not an operation of " + m.id());
    return Element{m, std::move(v)};
}

Element unit(const CoeffMonad& m) { return Element{m, RatVec{Rat(1)}}; }

Element projection(const CoeffMonad& m, std::size_t k, std::size_t n) {
    if (k >= n) throw std::invalid_argument("projection index out of range");
    RatVec v(n, Rat(0));
    v[k] = Rat(1);
    return Element{m, std::move(v)};
}

std::optional<Element> zero_element(const CoeffMonad& m, std::size_t n) {
    if (!m.has_constant()) return std::nullopt;
    return Element{m, RatVec(n, Rat(0))};
}

Element substitute(const Element& t, const std::vector<Element>& args, std::size_t n) {
    if (args.size() != t.arity())
        throw std::invalid_argument("substitute: expected " + std::to_string(t.arity()) + " arguments, got " +
                                    std::to_string(args.size()));
    RatVec out(n, Rat(0));
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!(args[i].monad == t.monad)) throw std::invalid_argument("substitute: monad mismatch");
        if (args[i].arity() != n) throw std::invalid_argument("substitute: argument arity mismatch");
        if (t.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!args[i].coeffs[j].is_zero()) out[j] += t.coeffs[i] * args[i].coeffs[j];
    }
    if (!contains(t.monad, out))
        throw std::logic_error("substitution left " + t.monad.id() + ": " + to_string(out));
    return Element{t.monad, std::move(out)};
}

Element substitute(const Element& t, const std::vector<Element>& args) {
    return substitute(t, args, args.empty() ? 0 : args.front().arity());
}

Element induced_map(const std::vector<std::size_t>& phi, std::size_t target_arity, const Element& t) {
    if (phi.size() != t.arity()) throw std::invalid_argument("induced_map: map domain differs from arity");
    RatVec out(target_arity, Rat(0));
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] >= target_arity) throw std::invalid_argument("induced_map: target index out of range");
        out[phi[i]] += t.coeffs[i];
    }
    if (!contains(t.monad, out)) throw std::logic_error("induced map left " + t.monad.id());
    return Element{t.monad, std::move(out)};
}

LocalizationResult in_localization(const CoeffMonad& m, const Rat& f, const RatVec& v, long bound) {
    if (f.is_zero()) throw std::invalid_argument("cannot localize at zero");
    if (!contains(m, RatVec{f})) throw std::invalid_argument(f.str() + " is not in |" + m.id() + "|");
    LocalizationResult res;
    res.bound = bound;
    Rat fk(1);
    for (long k = 0; k <= bound; ++k) {
        RatVec w;
        w.reserve(v.size());
        for (const auto& x : v) w.push_back(fk * x);
        if (contains(m, w)) {
            res.status = LocalizationResult::Status::member;
            res.k = k;
            return res;
        }
        // f^2 = 1: the powers repeat after k = 1
        if (k == 1 && f.abs() == Rat(1)) {
            res.status = LocalizationResult::Status::not_member;
            return res;
        }
        fk *= f;
    }
    res.status = LocalizationResult::Status::undecided;
    return res;
}

std::optional<std::vector<RatVec>> enumerate_vectors(const CoeffMonad& m, std::size_t n) {
    using T = CoeffMonad::Tag;
    std::vector<RatVec> out;
    switch (m.tag()) {
    case T::F1:
    case T::F12:
    case T::Fempty: {
        if (m.tag() != T::Fempty) out.emplace_back(n, Rat(0));
        for (std::size_t k = 0; k < n; ++k) {
            RatVec v(n, Rat(0));
            v[k] = 1;
            out.push_back(v);
            if (m.tag() == T::F12) {
                v[k] = -1;
                out.push_back(v);
            }
        }
        return out;
    }
    case T::Intersection: {
        for (const auto& p : m.parts()) {
            if (auto base = enumerate_vectors(p, n)) {
                for (auto& v : *base)
                    if (contains(m, v)) out.push_back(std::move(v));
                return out;
            }
        }
        const CoeffMonad norm = intersect({m});
        if (norm.tag() != T::Intersection) {
            if (auto base = enumerate_vectors(norm, n)) return base;
        }
        return std::nullopt;
    }
    default: return std::nullopt;
    }
}

std::vector<RatVec> grid_sample(const CoeffMonad& m, std::size_t n) {
    if (auto all = enumerate_vectors(m, n)) return *all;
    const auto vals = grid_values(m);
    std::vector<RatVec> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        RatVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = vals[idx[i]];
        if (contains(m, v)) out.push_back(std::move(v));
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == vals.size()) idx[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

RatVec random_vector(const CoeffMonad& m, std::size_t n, Rng& rng) {
    using T = CoeffMonad::Tag;
    auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    RatVec v(n, Rat(0));
    switch (m.tag()) {
    case T::Z:
        for (auto& x : v) x = uni(-6, 6);
        return v;
    case T::N:
        for (auto& x : v) x = uni(0, 6);
        return v;
    case T::BN: {
        for (auto& x : v) {
            BigInt d = 1;
            for (long e = uni(0, 2); e > 0; --e) d *= m.param();
            const long span = 3 * static_cast<long>(d.get_si());
            x = Rat(BigInt(uni(-span, span)), d);
        }
        return v;
    }
    case T::ZlocInf:
    case T::AN: {
        BigInt d = 1;
        if (m.tag() == T::AN) {
            for (long e = uni(0, 2); e > 0; --e) d *= m.param();
        } else {
            d = uni(1, 12);
        }
        const auto u = bounded_integers(n, d.get_si(), rng);
        for (std::size_t i = 0; i < n; ++i) v[i] = Rat(u[i], d);
        return v;
    }
    case T::F1:
    case T::F12:
    case T::Fempty: {
        const long lo = m.tag() == T::Fempty ? 0 : -1;
        if (n == 0) {
            if (lo == 0) throw std::invalid_argument("Fempty has no constants");
            return v;
        }
        const long r = uni(lo, static_cast<long>(n) - 1);
        if (r >= 0) v[static_cast<std::size_t>(r)] = (m.tag() == T::F12 && uni(0, 1)) ? Rat(-1) : Rat(1);
        return v;
    }
    case T::Intersection: {
        for (int attempt = 0; attempt < 200; ++attempt) {
            RatVec w = random_vector(m.parts().front(), n, rng);
            if (contains(m, w)) return w;
        }
        if (n > 0) return projection(m, static_cast<std::size_t>(uni(0, static_cast<long>(n) - 1)), n).coeffs;
        if (m.has_constant()) return v;
        throw std::invalid_argument("no constants in " + m.id());
    }
    }
    return v;
}

std::optional<std::vector<Element>> CoeffModel::enumerate(std::size_t n) const {
    auto vecs = enumerate_vectors(monad, n);
    if (!vecs) return std::nullopt;
    std::vector<Element> out;
    out.reserve(vecs->size());
    for (auto& v : *vecs) out.push_back(Element{monad, std::move(v)});
    return out;
}

std::vector<Element> CoeffModel::sample(std::size_t n) const {
    std::vector<Element> out;
    for (auto& v : grid_sample(monad, n)) out.push_back(Element{monad, std::move(v)});
    return out;
}

}  // namespace genring
