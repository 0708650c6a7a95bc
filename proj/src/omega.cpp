#include "hermspec/omega.hpp"

#include <cmath>
#include <stdexcept>

namespace hermspec {

namespace {
const double S3 = std::sqrt(3.0) / 2.0;
}

OmegaSpec OmegaSpec::preset(OmegaKind k) {
    OmegaSpec w;
    w.kind = k;
    switch (k) {
        case OmegaKind::PresetI: w.value = {0.0, 1.0}; break;
        case OmegaKind::PresetIConj: w.value = {0.0, -1.0}; break;
        case OmegaKind::PresetSixth: w.value = {0.5, S3}; break;
        case OmegaKind::PresetSixthConj: w.value = {0.5, -S3}; break;
        case OmegaKind::PresetNegSixth: w.value = {-0.5, S3}; break;
        case OmegaKind::PresetNegSixthConj: w.value = {-0.5, -S3}; break;
        case OmegaKind::Generic: throw std::invalid_argument("preset: Generic is not a preset");
    }
    return w;
}

OmegaSpec OmegaSpec::generic(double re, double im) {
    if (std::abs(re * re + im * im - 1.0) > 1e-12)
        throw std::invalid_argument("omega must have |omega| = 1 (within 1e-12)");
    if (im == 0.0) throw std::invalid_argument("omega must be non-real");
    OmegaSpec w;
    w.kind = OmegaKind::Generic;
    w.value = {re, im};
    return w;
}

OmegaSpec OmegaSpec::parse(const std::string& s) {
    if (s == "i") return preset(OmegaKind::PresetI);
    if (s == "-i" || s == "i-conj") return preset(OmegaKind::PresetIConj);
    if (s == "sixth") return preset(OmegaKind::PresetSixth);
    if (s == "sixth-conj") return preset(OmegaKind::PresetSixthConj);
    if (s == "neg-sixth") return preset(OmegaKind::PresetNegSixth);
    if (s == "neg-sixth-conj") return preset(OmegaKind::PresetNegSixthConj);
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("omega: expected preset name or 're,im'");
    double re = std::stod(s.substr(0, comma));
    double im = std::stod(s.substr(comma + 1));
    return generic(re, im);
}

int OmegaSpec::exact_trace() const {
    switch (kind) {
        case OmegaKind::PresetI:
        case OmegaKind::PresetIConj: return 0;
        case OmegaKind::PresetSixth:
        case OmegaKind::PresetSixthConj: return 1;
        case OmegaKind::PresetNegSixth:
        case OmegaKind::PresetNegSixthConj: return -1;
        case OmegaKind::Generic: break;
    }
    throw std::domain_error("exact_trace: only preset omega has an exact ring structure");
}

OmegaSpec OmegaSpec::conjugated() const {
    switch (kind) {
        case OmegaKind::PresetI: return preset(OmegaKind::PresetIConj);
        case OmegaKind::PresetIConj: return preset(OmegaKind::PresetI);
        case OmegaKind::PresetSixth: return preset(OmegaKind::PresetSixthConj);
        case OmegaKind::PresetSixthConj: return preset(OmegaKind::PresetSixth);
        case OmegaKind::PresetNegSixth: return preset(OmegaKind::PresetNegSixthConj);
        case OmegaKind::PresetNegSixthConj: return preset(OmegaKind::PresetNegSixth);
        case OmegaKind::Generic: return generic(value.real(), -value.imag());
    }
    throw std::logic_error("unreachable");
}

ReClass OmegaSpec::re_class(double tol) const {
    if (kind == OmegaKind::PresetNegSixth || kind == OmegaKind::PresetNegSixthConj)
        return ReClass::EqualMinusHalf;
    if (is_preset()) return ReClass::GreaterThanMinusHalf;
    double re = value.real();
    if (re > -0.5 + tol) return ReClass::GreaterThanMinusHalf;
    if (re < -0.5 - tol) return ReClass::LessThanMinusHalf;
    if (re == -0.5) return ReClass::EqualMinusHalf;
    throw std::domain_error("omega: Re(omega) ambiguous near -1/2 at tolerance");
}

bool OmegaSpec::is_primitive_cube_root(double tol) const {
    // on the unit circle Re(omega) = -1/2 pins omega to (-1 +- i*sqrt3)/2
    return re_class(tol) == ReClass::EqualMinusHalf;
}

std::string OmegaSpec::name() const {
    switch (kind) {
        case OmegaKind::PresetI: return "i";
        case OmegaKind::PresetIConj: return "-i";
        case OmegaKind::PresetSixth: return "sixth";
        case OmegaKind::PresetSixthConj: return "sixth-conj";
        case OmegaKind::PresetNegSixth: return "neg-sixth";
        case OmegaKind::PresetNegSixthConj: return "neg-sixth-conj";
        case OmegaKind::Generic:
            return std::to_string(value.real()) + "," + std::to_string(value.imag());
    }
    return "?";
}

} // namespace hermspec
