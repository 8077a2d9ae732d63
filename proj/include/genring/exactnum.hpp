#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace genring {

using BigInt = mpz_class;

// Exact rational in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(const BigInt& v) : q_(v) {}
    Rat(const BigInt& num, const BigInt& den);

    // Accepts "a", "-a", "a/b".
    static Rat parse(std::string_view text);

    const BigInt& num() const { return q_.get_num(); }
    const BigInt& den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat abs() const;
    Rat inverse() const;
    Rat pow(long e) const;

    std::string str() const;

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

using RatVec = std::vector<Rat>;

std::string to_string(const RatVec& v);
Rat l1_norm(const RatVec& v);

// A place of Q: a finite prime or the archimedean place.
class Place {
public:
    static Place prime(const BigInt& p);  // throws std::invalid_argument unless p is prime
    static Place infinity() { return Place{}; }

    bool is_infinite() const { return !p_.has_value(); }
    const BigInt& p() const;
    std::string str() const;

    friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }

private:
    Place() = default;
    std::optional<BigInt> p_;
};

bool is_prime(const BigInt& n);

// Prime factorization of |n| (n != 0) by trial division, primes ascending.
std::vector<std::pair<BigInt, long>> factorize(const BigInt& n);
std::vector<BigInt> prime_divisors(const BigInt& n);
BigInt radical(const BigInt& n);
long omega(const BigInt& n);
// Sieve; bound at most 10^7.
std::vector<BigInt> primes_up_to(const BigInt& bound);

long vp(const BigInt& p, const Rat& x);
Rat abs_at(const Place& place, const Rat& x);

struct ProductFormulaReport {
    std::map<BigInt, Rat> factors;  // |x|_p for every p dividing num*den
    Rat product;                    // product of the finite factors
    Rat inverse_abs_infinity;       // 1/|x|_inf
    bool holds = false;
};

ProductFormulaReport product_formula_check(const Rat& x);

// Exact integer floor of sqrt(x) for x >= 0.
BigInt floor_sqrt(const Rat& x);

}  // namespace genring
