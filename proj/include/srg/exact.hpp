#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace srg {

// Integer square root of a nonnegative value (largest s with s*s <= n).
int64_t isqrt64(int64_t n);

// Decompose n >= 0 as s^2 * d with d squarefree.  Returns {s, d}.
// split_square(0) == {1, 0}, split_square(1) == {1, 1}.
std::pair<int64_t, int64_t> split_square(int64_t n);

// Reduced fraction with positive denominator.  All arithmetic is checked;
// overflow of the int64 representation throws Error("TooLarge").
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
    Rational(int64_t n, int64_t d);

    static Rational normalized(__int128 n, __int128 d);

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    int compare(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }
    bool operator>(const Rational& o) const { return compare(o) > 0; }
    bool operator>=(const Rational& o) const { return compare(o) >= 0; }

    bool is_integer() const { return den == 1; }
    int64_t floor() const;
    int64_t ceil() const;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;  // "n" or "n/d"
};

// Element of Q[sqrt(D)]: value a + b*sqrt(D) with D squarefree and >= 0.
// Canonical form: b == 0 implies D == 0; a perfect-square radicand folds
// itself into the rational part on construction.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(int64_t n) : a_(n) {}              // NOLINT: implicit by design
    ExactScalar(Rational a) : a_(a) {}             // NOLINT: implicit by design
    ExactScalar(Rational a, Rational b, int64_t D);

    // sqrt(n) for integer n >= 0, as an exact value.
    static ExactScalar sqrt_int(int64_t n);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int64_t D() const { return D_; }

    bool is_rational() const { return D_ == 0; }
    bool is_integer() const { return D_ == 0 && a_.is_integer(); }
    // Rational value; throws Error("NotRational") when irrational.
    Rational as_rational() const;

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;

    int sign() const;
    int compare(const ExactScalar& o) const { return (*this - o).sign(); }
    bool operator==(const ExactScalar& o) const { return a_ == o.a_ && b_ == o.b_ && D_ == o.D_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }
    bool operator<(const ExactScalar& o) const { return compare(o) < 0; }
    bool operator<=(const ExactScalar& o) const { return compare(o) <= 0; }
    bool operator>(const ExactScalar& o) const { return compare(o) > 0; }
    bool operator>=(const ExactScalar& o) const { return compare(o) >= 0; }

    int64_t floor() const;
    int64_t ceil() const;
    double to_double() const;
    // "n", "n/d", or "(a + b√D)" / "(a - b√D)" with lowest-terms components.
    std::string to_string() const;

private:
    Rational a_{0};
    Rational b_{0};
    int64_t D_ = 0;
};

}  // namespace srg
