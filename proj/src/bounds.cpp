#include "srg/bounds.hpp"

#include "srg/error.hpp"

namespace srg {

namespace {

void validate(const SrgParams& p) {
    if (!p.identity_holds())
        fail("InvalidParams", "counting identity fails for " + p.to_string());
    if (p.mu < 1) fail("InvalidParams", "mu = 0 means a disconnected graph: " + p.to_string());
    if (p.nu <= p.k + 1) fail("InvalidParams", "complete graph parameters: " + p.to_string());
}

int64_t discriminant(const SrgParams& p) {
    int64_t d = (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu);
    if (d <= 0) fail("InvalidParams", "nonpositive eigenvalue discriminant for " + p.to_string());
    return d;
}

}  // namespace

std::pair<ExactScalar, ExactScalar> eigenvalues(const SrgParams& p) {
    validate(p);
    int64_t d = discriminant(p);
    ExactScalar r(Rational(p.lambda - p.mu, 2), Rational(1, 2), d);
    ExactScalar s(Rational(p.lambda - p.mu, 2), Rational(-1, 2), d);
    return {r, s};
}

ExactScalar delsarte_bound(const SrgParams& p) {
    auto [r, s] = eigenvalues(p);
    return ExactScalar(1) - ExactScalar(p.k) / s;
}

ExactScalar hoffman_bound(const SrgParams& p) {
    auto [r, s] = eigenvalues(p);
    return ExactScalar(p.nu) * s / (s - ExactScalar(p.k));
}

BoundReport bound_report(const SrgParams& p) {
    BoundReport rep;
    rep.params = p;
    auto [r, s] = eigenvalues(p);
    rep.r = r;
    rep.s = s;
    rep.delsarte = ExactScalar(1) - ExactScalar(p.k) / s;
    rep.hoffman = ExactScalar(p.nu) * s / (s - ExactScalar(p.k));
    rep.delsarte_integral = rep.delsarte.is_integer();
    rep.hoffman_integral = rep.hoffman.is_integer();
    rep.omega_target = rep.delsarte.floor();
    rep.alpha_target = rep.hoffman.floor();
    return rep;
}

CliqueCoclique clique_coclique_check(int64_t omega, int64_t alpha, int64_t nu) {
    require(omega >= 1 && alpha >= 1 && nu >= 1, "InvalidParams",
            "clique-coclique check needs positive sizes");
    __int128 prod = static_cast<__int128>(omega) * alpha;
    if (prod > nu)
        fail("BoundViolated", "omega*alpha = " + std::to_string(omega) + "*" +
                                  std::to_string(alpha) + " exceeds nu = " + std::to_string(nu));
    return prod == nu ? CliqueCoclique::Equal : CliqueCoclique::Strict;
}

QuickVerdict quick_verdict(const SrgParams& p) {
    BoundReport rep = bound_report(p);
    QuickVerdict v{QuickVerdict::Kind::NeedsSearch, rep.omega_target, rep.alpha_target};
    if (!rep.delsarte.is_rational()) {
        v.kind = QuickVerdict::Kind::IrrationalBounds;
    } else if (!rep.delsarte_integral) {
        v.kind = QuickVerdict::Kind::FractionalDelsarte;
    } else if (!rep.hoffman_integral) {
        v.kind = QuickVerdict::Kind::FractionalHoffman;
    }
    return v;
}

bool feasibility(const SrgParams& p) {
    if (!p.identity_holds()) return false;
    if (p.k < 1 || p.mu < 1 || p.nu <= p.k + 1) return false;
    int64_t d = (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu);
    if (d <= 0) return false;
    auto [r, s] = eigenvalues(p);
    // Trace conditions: m_r + m_s = nu - 1, k + m_r*r + m_s*s = 0.
    ExactScalar diff = r - s;
    ExactScalar m_r = (ExactScalar(-p.k) - ExactScalar(p.nu - 1) * s) / diff;
    ExactScalar m_s = (ExactScalar(p.k) + ExactScalar(p.nu - 1) * r) / diff;
    return m_r.is_integer() && m_s.is_integer() && m_r.sign() >= 0 && m_s.sign() >= 0;
}

}  // namespace srg
