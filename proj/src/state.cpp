#include "swe/state.hpp"

namespace swe {

double celerity(double h, Gravity grav) {
    if (!(h > 0.0)) throw std::domain_error("celerity: depth must be positive, got h=" + std::to_string(h));
    if (!(grav.g > 0.0)) throw std::domain_error("celerity: gravity must be positive");
    return std::sqrt(grav.g * h);
}

void validate_state(const State& s) {
    if (!(s.h > 0.0)) throw std::domain_error("state: depth must be positive, got h=" + std::to_string(s.h));
    if (!std::isfinite(s.u) || !std::isfinite(s.h) || !std::isfinite(s.a))
        throw std::domain_error("state: components must be finite");
}

Eigenstructure eigenstructure(const State& s, Gravity grav) {
    validate_state(s);
    const double c = celerity(s, grav);
    Eigenstructure e;
    e.lambda1 = s.u - c;
    e.lambda2 = s.u + c;
    e.lambda3 = 0.0;
    e.r1 = {s.h, -c, 0.0};
    e.r2 = {s.h, c, 0.0};
    e.r3 = {c * c, -grav.g * s.u, s.u * s.u - c * c};
    return e;
}

DomainLabel classify_domain(const State& s, Gravity grav, double tol) {
    validate_state(s);
    const double c = celerity(s, grav);
    const double band = tol * std::max(c, 1.0);
    if (std::abs(s.u - c) <= band) return DomainLabel::GammaPlus;
    if (std::abs(s.u + c) <= band) return DomainLabel::GammaMinus;
    if (s.u > c) return DomainLabel::D3;
    if (s.u < -c) return DomainLabel::D1;
    return s.u >= 0.0 ? DomainLabel::D2plus : DomainLabel::D2minus;
}

QuadrantLabel classify_quadrant(const State& s, Gravity grav, double tol) {
    validate_state(s);
    if (s.u < 0.0) throw std::domain_error("classify_quadrant: requires u >= 0");
    const double c = celerity(s, grav);
    const double band = tol * std::max(c, 1.0);
    if (std::abs(s.u - c) <= band) return QuadrantLabel::GammaPlus;
    if (std::abs(s.u - 2.0 * c) <= band) return QuadrantLabel::Gamma1;
    if (s.u > 2.0 * c) return QuadrantLabel::RegionI;
    if (s.u > c) return QuadrantLabel::RegionII;
    return QuadrantLabel::RegionIII;
}

std::pair<double, double> riemann_invariants(int family, const State& s, Gravity grav) {
    validate_state(s);
    const double c = celerity(s, grav);
    switch (family) {
        case 1: return {s.a, s.u + 2.0 * c};
        case 2: return {s.a, s.u - 2.0 * c};
        case 3: return {s.h * s.u, 0.5 * s.u * s.u + grav.g * (s.h + s.a)};
        default: throw std::invalid_argument("riemann_invariants: family must be 1, 2 or 3");
    }
}

const char* to_string(DomainLabel label) {
    switch (label) {
        case DomainLabel::D1: return "D1";
        case DomainLabel::D2minus: return "D2-";
        case DomainLabel::D2plus: return "D2+";
        case DomainLabel::D3: return "D3";
        case DomainLabel::GammaPlus: return "Gamma+";
        case DomainLabel::GammaMinus: return "Gamma-";
    }
    return "?";
}

const char* to_string(QuadrantLabel label) {
    switch (label) {
        case QuadrantLabel::RegionI: return "I";
        case QuadrantLabel::RegionII: return "II";
        case QuadrantLabel::RegionIII: return "III";
        case QuadrantLabel::GammaPlus: return "Gamma+";
        case QuadrantLabel::Gamma1: return "Gamma1";
    }
    return "?";
}

}  // namespace swe
