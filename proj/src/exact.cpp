#include "srg/exact.hpp"

#include <cmath>
#include <limits>

#include "srg/error.hpp"

namespace srg {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t narrow(i128 x, const char* what) {
    if (x > std::numeric_limits<int64_t>::max() || x < std::numeric_limits<int64_t>::min())
        fail("TooLarge", std::string("exact arithmetic overflow in ") + what);
    return static_cast<int64_t>(x);
}

}  // namespace

int64_t isqrt64(int64_t n) {
    if (n < 0) fail("InvalidParams", "isqrt64 of negative value");
    if (n == 0) return 0;
    auto s = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s > n / s) --s;
    while ((s + 1) <= n / (s + 1)) ++s;
    return s;
}

std::pair<int64_t, int64_t> split_square(int64_t n) {
    if (n < 0) fail("InvalidParams", "split_square of negative value");
    if (n == 0) return {1, 0};
    int64_t s = 1, d = 1;
    for (int64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    if (n > 1) d *= n;
    return {s, d};
}

Rational::Rational(int64_t n, int64_t d) { *this = normalized(n, d); }

Rational Rational::normalized(i128 n, i128 d) {
    if (d == 0) fail("DivisionByZero", "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    Rational r;
    r.num = narrow(n, "rational numerator");
    r.den = narrow(d, "rational denominator");
    return r;
}

Rational Rational::operator-() const { return normalized(-static_cast<i128>(num), den); }

Rational Rational::operator+(const Rational& o) const {
    return normalized(static_cast<i128>(num) * o.den + static_cast<i128>(o.num) * den,
                      static_cast<i128>(den) * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return normalized(static_cast<i128>(num) * o.den - static_cast<i128>(o.num) * den,
                      static_cast<i128>(den) * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return normalized(static_cast<i128>(num) * o.num, static_cast<i128>(den) * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) fail("DivisionByZero", "rational division by zero");
    return normalized(static_cast<i128>(num) * o.den, static_cast<i128>(den) * o.num);
}

int Rational::compare(const Rational& o) const {
    i128 lhs = static_cast<i128>(num) * o.den;
    i128 rhs = static_cast<i128>(o.num) * den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

int64_t Rational::floor() const {
    int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

int64_t Rational::ceil() const {
    int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

ExactScalar::ExactScalar(Rational a, Rational b, int64_t D) : a_(a), b_(b), D_(D) {
    if (D_ < 0) fail("InvalidParams", "negative radicand");
    auto [s, d] = split_square(D_);
    if (s != 1) {
        b_ = b_ * Rational(s);
        D_ = d;
    }
    if (D_ <= 1) {  // sqrt(0) = 0, sqrt(1) = 1: fold into the rational part
        if (D_ == 1) a_ = a_ + b_;
        b_ = Rational(0);
        D_ = 0;
    }
    if (b_.num == 0) {
        b_ = Rational(0);
        D_ = 0;
    }
}

ExactScalar ExactScalar::sqrt_int(int64_t n) { return ExactScalar(Rational(0), Rational(1), n); }

Rational ExactScalar::as_rational() const {
    if (!is_rational()) fail("NotRational", "irrational value " + to_string());
    return a_;
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(-a_, -b_, D_); }

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    if (D_ != 0 && o.D_ != 0 && D_ != o.D_)
        fail("IncompatibleRadicals", "cannot add values over different radicals");
    int64_t D = D_ != 0 ? D_ : o.D_;
    return ExactScalar(a_ + o.a_, b_ + o.b_, D);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    if (D_ != 0 && o.D_ != 0 && D_ != o.D_)
        fail("IncompatibleRadicals", "cannot multiply values over different radicals");
    int64_t D = D_ != 0 ? D_ : o.D_;
    // (a1 + b1√D)(a2 + b2√D) = a1*a2 + b1*b2*D + (a1*b2 + b1*a2)√D
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(D);
    Rational b = a_ * o.b_ + b_ * o.a_;
    return ExactScalar(a, b, D);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    if (o.a_.num == 0 && o.b_.num == 0) fail("DivisionByZero", "exact division by zero");
    // 1/(a + b√D) = (a - b√D)/(a^2 - b^2 D)
    Rational denom = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.D_);
    ExactScalar conj(o.a_ / denom, -(o.b_ / denom), o.D_);
    return *this * conj;
}

int ExactScalar::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2*D; sign follows the larger magnitude.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(D_);
    int c = lhs.compare(rhs);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

int64_t ExactScalar::floor() const {
    if (is_rational()) return a_.floor();
    auto f = static_cast<int64_t>(std::floor(to_double()));
    // Correct any floating-point slop with exact comparisons.
    while (compare(ExactScalar(f)) < 0) --f;
    while (compare(ExactScalar(f + 1)) >= 0) ++f;
    return f;
}

int64_t ExactScalar::ceil() const {
    if (is_rational()) return a_.ceil();
    int64_t f = floor();
    return compare(ExactScalar(f)) == 0 ? f : f + 1;
}

double ExactScalar::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(D_));
}

std::string ExactScalar::to_string() const {
    if (is_rational()) return a_.to_string();
    Rational babs = b_.sign() < 0 ? -b_ : b_;
    std::string op = b_.sign() < 0 ? " - " : " + ";
    return "(" + a_.to_string() + op + babs.to_string() + "√" + std::to_string(D_) + ")";
}

}  // namespace srg
