#include "srg/gf.hpp"

#include <algorithm>
#include <sstream>

#include "srg/error.hpp"

namespace srg {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::pair<int64_t, int> prime_power_decomposition(int64_t q) {
    if (q < 2) return {0, 0};
    int64_t p = q;
    for (int64_t d = 2; d <= q / d; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0;
    int64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return {0, 0};
    return {p, k};
}

namespace {
constexpr int64_t kOrderCap = int64_t(1) << 24;
constexpr int64_t kTableCap = int64_t(1) << 16;

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> fs;
    for (int64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}
}  // namespace

struct Field::Impl {
    int64_t p = 0;
    int k = 0;
    int64_t q = 0;
    std::vector<int64_t> pw;       // pw[i] = p^i, i = 0..k
    std::vector<int64_t> modulus;  // length k+1, low-degree-first, monic
    Elt primitive = 0;
    bool tables = false;
    std::vector<Elt> exp_;     // exp_[j] = g^j, j = 0..q-2
    std::vector<int32_t> log_;  // log_[x] for x != 0; log_[0] = -1

    void decode(Elt a, int64_t* c) const {
        for (int i = 0; i < k; ++i) {
            c[i] = a % p;
            a = static_cast<Elt>(a / p);
        }
    }

    Elt encode(const int64_t* c) const {
        int64_t v = 0;
        for (int i = k - 1; i >= 0; --i) v = v * p + c[i];
        return static_cast<Elt>(v);
    }

    Elt add_raw(Elt a, Elt b) const {
        if (p == 2) return a ^ b;
        int64_t v = 0;
        for (int i = k - 1; i >= 0; --i) {
            int64_t da = (a / pw[i]) % p, db = (b / pw[i]) % p;
            int64_t s = da + db;
            if (s >= p) s -= p;
            v = v * p + s;
        }
        return static_cast<Elt>(v);
    }

    Elt neg_raw(Elt a) const {
        if (p == 2) return a;
        int64_t v = 0;
        for (int i = k - 1; i >= 0; --i) {
            int64_t da = (a / pw[i]) % p;
            v = v * p + (da ? p - da : 0);
        }
        return static_cast<Elt>(v);
    }

    // Schoolbook product reduced by the monic modulus; no lookup tables.
    Elt mul_raw(Elt a, Elt b) const {
        int64_t ca[32], cb[32], t[63] = {0};
        decode(a, ca);
        decode(b, cb);
        for (int i = 0; i < k; ++i) {
            if (ca[i] == 0) continue;
            for (int j = 0; j < k; ++j) t[i + j] = (t[i + j] + ca[i] * cb[j]) % p;
        }
        for (int i = 2 * k - 2; i >= k; --i) {
            int64_t c = t[i];
            if (c == 0) continue;
            t[i] = 0;
            for (int j = 0; j < k; ++j) t[i - k + j] = ((t[i - k + j] - c * modulus[j]) % p + p) % p;
        }
        return encode(t);
    }

    Elt pow_raw(Elt a, int64_t e) const {  // e >= 0
        Elt r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul_raw(r, base);
            base = mul_raw(base, base);
            e >>= 1;
        }
        return r;
    }

    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        if (tables) {
            int64_t s = log_[a] + log_[b];
            if (s >= q - 1) s -= q - 1;
            return exp_[s];
        }
        return mul_raw(a, b);
    }

    void check(Elt a) const {
        if (a >= q)
            fail("FieldMismatch", "element index " + std::to_string(a) +
                                      " outside field of order " + std::to_string(q));
    }
};

namespace {

// Divides the monic polynomial `f` (low-degree-first, any degree) by the monic
// polynomial `g`; returns true when the remainder is zero.
bool divides(const std::vector<int64_t>& g, std::vector<int64_t> f, int64_t p) {
    int dg = static_cast<int>(g.size()) - 1;
    for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
        int64_t c = f[i];
        if (c == 0) continue;
        f[i] = 0;
        for (int j = 0; j < dg; ++j) f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p + p) % p;
    }
    for (int64_t c : f)
        if (c != 0) return false;
    return true;
}

bool irreducible(const std::vector<int64_t>& f, int64_t p, int k) {
    if (k == 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (int d = 1; d <= k / 2; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        std::vector<int64_t> g(d + 1, 0);
        g[d] = 1;
        for (int64_t v = 0; v < count; ++v) {
            int64_t x = v;
            for (int i = 0; i < d; ++i) {
                g[i] = x % p;
                x /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int64_t p, int k) {
    require(is_prime(p), "NotPrime", "characteristic " + std::to_string(p) + " is not prime");
    require(k >= 1, "DegreeZero", "extension degree must be at least 1");
    __int128 qq = 1;
    for (int i = 0; i < k; ++i) {
        qq *= p;
        if (qq > kOrderCap)
            fail("TooLarge", "field order " + std::to_string(p) + "^" + std::to_string(k) +
                                 " exceeds 2^24");
    }
    auto im = std::make_shared<Impl>();
    im->p = p;
    im->k = k;
    im->q = static_cast<int64_t>(qq);
    im->pw.resize(k + 1);
    im->pw[0] = 1;
    for (int i = 1; i <= k; ++i) im->pw[i] = im->pw[i - 1] * p;

    // Modulus scan: tuples (c_0,...,c_{k-1}) in low-degree-first lex order.
    std::vector<int64_t> cand(k + 1, 0);
    cand[k] = 1;
    bool found = false;
    for (int64_t v = 0; v < im->q && !found; ++v) {
        for (int i = 0; i < k; ++i) cand[i] = (v / im->pw[k - 1 - i]) % p;
        if (irreducible(cand, p, k)) {
            im->modulus = cand;
            found = true;
        }
    }
    require(found, "InternalError", "no irreducible modulus found");

    // Primitive element: same tuple-scan order, first element of full order.
    auto factors = prime_factors(im->q - 1);
    int64_t c[32];
    for (int64_t v = 0; v < im->q && im->primitive == 0; ++v) {
        for (int i = 0; i < k; ++i) c[i] = (v / im->pw[k - 1 - i]) % p;
        Elt x = im->encode(c);
        if (x == 0) continue;
        bool full = true;
        for (int64_t f : factors) {
            if (im->pow_raw(x, (im->q - 1) / f) == 1) {
                full = false;
                break;
            }
        }
        if (full) im->primitive = x;
    }
    require(im->primitive != 0, "InternalError", "no primitive element found");

    if (im->q <= kTableCap) {
        im->exp_.resize(im->q - 1);
        im->log_.assign(im->q, -1);
        Elt x = 1;
        for (int64_t j = 0; j < im->q - 1; ++j) {
            im->exp_[j] = x;
            require(im->log_[x] == -1, "InternalError", "primitive element order defect");
            im->log_[x] = static_cast<int32_t>(j);
            x = im->mul_raw(x, im->primitive);
        }
        require(x == 1, "InternalError", "primitive element order defect");
        im->tables = true;
    }
    impl_ = std::move(im);
}

int64_t Field::p() const { return im().p; }
int Field::k() const { return im().k; }
int64_t Field::q() const { return im().q; }
const std::vector<int64_t>& Field::modulus() const { return im().modulus; }

Field::Elt Field::add(Elt a, Elt b) const {
    im().check(a);
    im().check(b);
    return im().add_raw(a, b);
}

Field::Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Field::Elt Field::neg(Elt a) const {
    im().check(a);
    return im().neg_raw(a);
}

Field::Elt Field::mul(Elt a, Elt b) const {
    im().check(a);
    im().check(b);
    return im().mul(a, b);
}

Field::Elt Field::inv(Elt a) const {
    im().check(a);
    if (a == 0) fail("ZeroInverse", "inverse of zero");
    if (im().tables) {
        int64_t l = (im().q - 1 - im().log_[a]) % (im().q - 1);
        return im().exp_[l];
    }
    return im().pow_raw(a, im().q - 2);
}

Field::Elt Field::pow(Elt a, int64_t e) const {
    im().check(a);
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        fail("ZeroInverse", "negative power of zero");
    }
    int64_t m = im().q - 1;
    int64_t r = ((e % m) + m) % m;
    if (im().tables) {
        int64_t l = (im().log_[a] * r) % m;
        return im().exp_[l];
    }
    return im().pow_raw(a, r);
}

Field::Elt Field::frobenius(Elt x, int64_t i) const {
    im().check(x);
    int64_t j = ((i % im().k) + im().k) % im().k;
    return pow(x, im().pw[j]);
}

Field::Elt Field::primitive() const { return im().primitive; }

int64_t Field::order(Elt a) const {
    im().check(a);
    if (a == 0) fail("ZeroInverse", "multiplicative order of zero");
    int64_t o = im().q - 1;
    for (int64_t f : prime_factors(im().q - 1)) {
        while (o % f == 0 && pow(a, o / f) == 1) o /= f;
    }
    return o;
}

std::vector<std::vector<Field::Elt>> Field::power_classes(int64_t e) const {
    require(e >= 1, "DoesNotDivide", "class count must be positive");
    if ((im().q - 1) % e != 0)
        fail("DoesNotDivide",
             std::to_string(e) + " does not divide group order " + std::to_string(im().q - 1));
    std::vector<std::vector<Elt>> classes(e);
    Elt g = im().primitive;
    Elt x = 1;
    for (int64_t j = 0; j < im().q - 1; ++j) {
        classes[j % e].push_back(x);
        x = im().mul(x, g);
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    return classes;
}

std::vector<Field::Elt> Field::subfield_elements(int d) const {
    require(d >= 1 && im().k % d == 0, "NotDivisor",
            "degree " + std::to_string(d) + " is not a divisor of " + std::to_string(im().k));
    std::vector<Elt> out;
    for (int64_t x = 0; x < im().q; ++x) {
        auto e = static_cast<Elt>(x);
        if (frobenius(e, d) == e) out.push_back(e);
    }
    require(static_cast<int64_t>(out.size()) == im().pw[d], "InternalError",
            "subfield size defect");
    return out;
}

std::vector<int64_t> Field::coeffs(Elt a) const {
    im().check(a);
    std::vector<int64_t> c(im().k);
    im().decode(a, c.data());
    return c;
}

Field::Elt Field::from_coeffs(const std::vector<int64_t>& c) const {
    require(static_cast<int>(c.size()) == im().k, "FieldMismatch", "coefficient count mismatch");
    int64_t v = 0;
    for (int i = im().k - 1; i >= 0; --i) {
        require(c[i] >= 0 && c[i] < im().p, "FieldMismatch", "coefficient out of range");
        v = v * im().p + c[i];
    }
    return static_cast<Elt>(v);
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << im().q << ") = GF(" << im().p << "^" << im().k << "), modulus [";
    for (int i = 0; i <= im().k; ++i) os << (i ? " " : "") << im().modulus[i];
    os << "] (low-degree-first)";
    return os.str();
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field.same_field(b.field))
        fail("FieldMismatch", "operands belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    return {field, field.add(idx, o.idx)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(*this, o);
    return {field, field.sub(idx, o.idx)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    return {field, field.mul(idx, o.idx)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(*this, o);
    return {field, field.div(idx, o.idx)};
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(*this, o);
    return idx == o.idx;
}

}  // namespace srg
