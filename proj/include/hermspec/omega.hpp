#pragma once

#include <complex>
#include <optional>
#include <string>

namespace hermspec {

enum class OmegaKind {
    PresetI,             // omega = i
    PresetIConj,         // omega = -i
    PresetSixth,         // omega = (1+i*sqrt3)/2, primitive 6th root of unity
    PresetSixthConj,     // omega = (1-i*sqrt3)/2
    PresetNegSixth,      // omega = (-1+i*sqrt3)/2, primitive cube root, Re = -1/2
    PresetNegSixthConj,  // omega = (-1-i*sqrt3)/2
    Generic,
};

enum class ReClass { LessThanMinusHalf, EqualMinusHalf, GreaterThanMinusHalf };

// Unit-modulus non-real complex number. Presets carry exact structure:
// omega satisfies omega^2 = t*omega - 1 with integer trace t = 2*Re(omega).
struct OmegaSpec {
    OmegaKind kind = OmegaKind::PresetI;
    std::complex<double> value{0.0, 1.0};

    static OmegaSpec preset(OmegaKind k);
    static OmegaSpec generic(double re, double im);  // validates re^2+im^2 = 1, im != 0
    static OmegaSpec parse(const std::string& s);    // "i", "-i", "sixth", ..., or "re,im"

    bool is_preset() const { return kind != OmegaKind::Generic; }
    // integer trace omega + conj(omega); presets only
    int exact_trace() const;
    OmegaSpec conjugated() const;
    ReClass re_class(double tol = 1e-12) const;  // throws if inside the tol band but not exactly -1/2
    // true exactly for the primitive cube roots of unity (-1 +- i*sqrt3)/2
    bool is_primitive_cube_root(double tol = 1e-12) const;
    std::string name() const;
};

} // namespace hermspec
