#ifndef TORELL_FAN_HPP
#define TORELL_FAN_HPP

#include "torell/rational.hpp"

#include <string>
#include <vector>

namespace torell {

/// A smooth fan: primitive rays in Z^n plus the maximal cones, each given
/// as an index set of n rays whose generator matrix is unimodular.
/// Lower-dimensional faces are derived on demand.
struct Fan {
    int dim = 0;
    std::vector<std::vector<long long>> rays;
    std::vector<std::vector<int>> max_cones;
};

/// Dual basis of a maximal cone: integer row vectors x_1..x_n with
/// x_i(ray_j) = delta_ij on the cone generators.  These are the torus
/// weights at the corresponding fixed point.
struct DualFrame {
    int cone = -1;
    std::vector<std::vector<long long>> forms;
};

/// Combinatorial shadow of a toroidal morphism.  For fan refinements the
/// lattice map is the identity and multiplicity/lattice_index are 1.
struct FanMorphism {
    Fan source;
    Fan target;
    std::vector<std::vector<long long>> lattice_map; // N_source -> N_target
    std::vector<int> cone_assignment;                // per source max cone
    long long multiplicity = 1;
    long long lattice_index = 1;
};

/// A_{n-1} resolution fan together with the substitution expressing its
/// dual coordinates in the coordinates of the covering torus of C^2.
struct AleFan {
    Fan fan;
    // (v_1, v_2) = weight_substitution * (u_1, u_2):  v_1 = n u_1, v_2 = u_1 + u_2.
    std::vector<std::vector<long long>> weight_substitution;
};

long long det(const std::vector<std::vector<long long>>& m);

/// Empty iff all Fan invariants hold (primitive rays, unimodular cones,
/// pairwise intersection in common faces).
std::vector<std::string> validate(const Fan& fan);

DualFrame dual_frame(const Fan& fan, int cone);

/// True iff the point lies in the (closed) maximal cone.
bool cone_contains(const Fan& fan, int cone, const std::vector<long long>& point);

/// Star subdivision at the ray through the sum of the given face's
/// primitive generators; the toric counterpart of a blow-up.
Fan star_subdivide(const Fan& fan, const std::vector<int>& cone);

/// Morphism from a refinement to the fan it refines (same lattice).
FanMorphism refinement_morphism(const Fan& fine, const Fan& coarse);

FanMorphism identity_morphism(const Fan& fan);

/// Minimal resolution of C^2/Z_n with the action (zeta x, zeta^{-1} y):
/// rays (k,1) for k = 0..n, cones <r_k, r_{k+1}>.
AleFan ale_fan(int n);

/// Tangent weights at a fixed point, as integer linear forms in the
/// ambient torus coordinates.  The optional substitution composes the
/// dual frame with a coordinate change (used by ale_fan).
std::vector<std::vector<long long>> cone_weights(
    const Fan& fan, int cone,
    const std::vector<std::vector<long long>>* substitution = nullptr);

} // namespace torell

#endif
