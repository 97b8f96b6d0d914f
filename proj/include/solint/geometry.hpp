// Geometric representations of B-family members: Clebsch potential pairs,
// vector potentials in two gauges, gauge differences, rotationality.
#pragma once

#include "solint/poisson.hpp"

namespace solint {

struct PotentialPair {
    Poly primary;    // always Delta = xz - y^2
    Poly secondary;  // S(v)
};

enum class GaugeClass { deltaForm, radialForm };

struct VectorPotential {
    VField field;
    GaugeClass gaugeClass = GaugeClass::deltaForm;
};

// (Delta, S(v)) with grad S x grad Delta = v (verified exactly).
PotentialPair clebschForm(const VField& v);

// S(v) * (z, -2y, x); curl-exact by the identity curl(F grad Delta) = grad F x grad Delta.
VectorPotential vectorPotentialDelta(const VField& v);

// Degree-d slice v_d contributes (v_d x X) / (d+2); requires div v = 0 and no
// constant part. Curl-exact for any solenoidal field.
VectorPotential vectorPotentialRadial(const VField& v);

// f with p1.field + grad f = p2.field, zero constant term; requires the two
// potentials to have equal curl and their difference to be a gradient.
Poly gaugeDifference(const VectorPotential& p1, const VectorPotential& p2);

struct RotationalResult {
    bool rotational = false;
    Poly witness;  // first nonzero curl component when rotational
};

RotationalResult rotationalCheck(const VField& v);

}  // namespace solint
