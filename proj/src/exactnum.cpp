#include "genring/exactnum.hpp"

#include <stdexcept>

namespace genring {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
    s = s.substr(start);
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return BigInt(t, 10);
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw std::invalid_argument("malformed rational '" + s + "'");
        return Rat(to_int(s));
    }
    const std::string a = s.substr(0, slash);
    const std::string b = s.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b) || b[0] == '-' || b[0] == '+')
        throw std::invalid_argument("malformed rational '" + s + "'");
    return Rat(to_int(a), to_int(b));
}

Rat Rat::abs() const {
    Rat r;
    r.q_ = ::abs(q_);
    return r;
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rat r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rat r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) { q_ += o.q_; return *this; }
Rat& Rat::operator-=(const Rat& o) { q_ -= o.q_; return *this; }
Rat& Rat::operator*=(const Rat& o) { q_ *= o.q_; return *this; }
Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
}

std::string to_string(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

Rat l1_norm(const RatVec& v) {
    Rat s;
    for (const auto& x : v) s += x.abs();
    return s;
}

Place Place::prime(const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + p.get_str());
    Place pl;
    pl.p_ = p;
    return pl;
}

const BigInt& Place::p() const {
    if (!p_) throw std::logic_error("archimedean place has no prime");
    return *p_;
}

std::string Place::str() const { return p_ ? p_->get_str() : std::string("inf"); }

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<BigInt, long>> factorize(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("cannot factor zero");
    BigInt m = ::abs(n);
    std::vector<std::pair<BigInt, long>> out;
    auto strip = [&](const BigInt& p) {
        long e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(BigInt(2));
    strip(BigInt(3));
    // 6k +- 1 wheel
    for (BigInt d = 5; d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) {
        if (!out.empty() && out.back().first == m)
            ++out.back().second;
        else
            out.emplace_back(m, 1);
    }
    return out;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

BigInt radical(const BigInt& n) {
    BigInt r = 1;
    for (auto& p : prime_divisors(n)) r *= p;
    return r;
}

long omega(const BigInt& n) { return static_cast<long>(prime_divisors(n).size()); }

std::vector<BigInt> primes_up_to(const BigInt& bound) {
    if (bound > 10000000) throw std::invalid_argument("prime bound too large");
    if (bound < 2) return {};
    const auto b = static_cast<std::size_t>(bound.get_ui());
    std::vector<bool> composite(b + 1, false);
    std::vector<BigInt> out;
    for (std::size_t i = 2; i <= b; ++i) {
        if (composite[i]) continue;
        out.emplace_back(static_cast<unsigned long>(i));
        for (std::size_t j = i * i; j <= b; j += i) composite[j] = true;
    }
    return out;
}

long vp(const BigInt& p, const Rat& x) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + p.get_str());
    if (x.is_zero()) throw std::domain_error("valuation undefined at zero");
    auto count = [&](BigInt m) {
        long e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        return e;
    };
    return count(x.num()) - count(x.den());
}

Rat abs_at(const Place& place, const Rat& x) {
    if (x.is_zero()) return Rat(0);
    if (place.is_infinite()) return x.abs();
    return Rat(place.p()).pow(-vp(place.p(), x));
}

ProductFormulaReport product_formula_check(const Rat& x) {
    if (x.is_zero()) throw std::domain_error("product formula needs a nonzero rational");
    ProductFormulaReport rep;
    rep.product = Rat(1);
    for (const auto& p : prime_divisors(x.num() * x.den())) {
        Rat f = abs_at(Place::prime(p), x);
        rep.product *= f;
        rep.factors.emplace(p, std::move(f));
    }
    rep.inverse_abs_infinity = abs_at(Place::infinity(), x).inverse();
    rep.holds = rep.product == rep.inverse_abs_infinity;
    return rep;
}

BigInt floor_sqrt(const Rat& x) {
    if (x.sign() < 0) throw std::domain_error("square root of a negative number");
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    return r;
}

}  // namespace genring
