#ifndef EXTRAD_FAMILIES_HPP
#define EXTRAD_FAMILIES_HPP

#include "extrad/immersion.hpp"

namespace extrad {

enum class FamilyKind { geodesic_sphere, radial_graph, ellipsoid, offset_sphere };

// Radial-graph profile, scaled to range [0, 1] with the minimum attained, so
// the enclosing radius equals base_radius and sup(R - r) equals the
// amplitude.  The harmonic profiles are low-degree polynomials in the
// parameter direction; bump(width) is a C^2 cap of the given angular width
// about the chart axis.
struct Perturbation {
    enum class Kind { harmonic, bump };
    Kind kind = Kind::harmonic;
    int l = 2;
    int m = 0;
    double width = 0.7;
};

struct SurfaceFamilySpec {
    FamilyKind kind = FamilyKind::geodesic_sphere;
    double delta = 0.0;
    int dim = 2; // hypersurface dimension n
    double base_radius = 1.0;
    double amplitude = 0.0;
    Perturbation perturbation;
    Vec axes;            // ellipsoid semi-axes (delta = 0 only), length n+1
    double offset = 0.0; // center displacement for offset_sphere
};

const char* family_name(FamilyKind kind);
FamilyKind family_from_name(const std::string& name);

// Immersion with analytic jets.  Throws std::invalid_argument naming the
// violated invariant on a bad spec.
Immersion build_family(const SurfaceFamilySpec& spec);

} // namespace extrad

#endif
