#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace srg {

// Handle to an immutable finite field GF(p^k).  Elements are identified by
// their index: an element with polynomial coefficients c_0 + c_1 t + ... +
// c_{k-1} t^{k-1} (all c_i in [0,p)) has index sum c_i * p^i, so the constant
// coefficient is the least-significant base-p digit of the index.
//
// The reducing modulus is the lexicographically smallest monic irreducible of
// degree k, where coefficient tuples (c_0, c_1, ..., c_{k-1}) are compared
// low-degree-first (c_0 is the most significant comparison slot).  The same
// tuple order fixes the deterministic primitive element: the first element in
// that scan whose multiplicative order is p^k - 1.
//
// Copies share one immutable implementation; all operations are pure and safe
// to call concurrently.
class Field {
public:
    using Elt = uint32_t;

    // Builds GF(p^k).  Errors: NotPrime, DegreeZero, TooLarge (p^k > 2^24).
    Field(int64_t p, int k);

    int64_t p() const;
    int k() const;
    int64_t q() const;  // p^k

    // Monic modulus as a low-degree-first coefficient vector of length k+1
    // (last entry is the leading 1).
    const std::vector<int64_t>& modulus() const;

    Elt zero() const { return 0; }
    Elt one() const { return 1; }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;  // Error: ZeroInverse
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, int64_t e) const;  // e may be negative for nonzero a
    // x ^ (p^i); i taken modulo k (the Frobenius automorphism has order k).
    Elt frobenius(Elt x, int64_t i) const;

    // Smallest generator of the multiplicative group in the tuple-scan order.
    Elt primitive() const;
    // Multiplicative order of a nonzero element.
    int64_t order(Elt a) const;

    // Partition of the q-1 nonzero elements into e cosets of the e-th powers:
    // class m = { g^j : j ≡ m (mod e) }, each sorted by element index.
    // Error: DoesNotDivide when e does not divide q-1.
    std::vector<std::vector<Elt>> power_classes(int64_t e) const;

    // The subfield GF(p^d) = fixed points of x -> x^(p^d), sorted by index.
    // Error: NotDivisor when d does not divide k.
    std::vector<Elt> subfield_elements(int d) const;

    // Low-degree-first coefficient vector of length k.
    std::vector<int64_t> coeffs(Elt a) const;
    Elt from_coeffs(const std::vector<int64_t>& c) const;

    std::string describe() const;  // e.g. "GF(9) = GF(3^2), modulus [1 0 1] + t^2"

    bool same_field(const Field& o) const { return impl_ == o.impl_; }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;

    const Impl& im() const { return *impl_; }
};

// Element wrapper carrying its field, for code where mixing fields must be a
// checked error (FieldMismatch) rather than silent index reuse.
struct FieldElement {
    Field field;
    Field::Elt idx = 0;

    FieldElement(Field f, Field::Elt i) : field(std::move(f)), idx(i) {}

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {field, field.neg(idx)}; }
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

bool is_prime(int64_t n);

// Factors q = p^k with p prime.  Returns {0, 0} when q is not a prime power.
std::pair<int64_t, int> prime_power_decomposition(int64_t q);

}  // namespace srg
