#pragma once

#include <optional>
#include <string>

#include "rlct/diff_form.hpp"
#include "rlct/subalgebra.hpp"

namespace rlct {

SubalgebraBasis ker_divergence(const Ring& R);

// {D : D.omega = 0} for the volume / Hamiltonian form (linear solve on the
// full derivation algebra).
SubalgebraBasis annihilator_of_form(CartanKind kind, const Ring& R);

// {D : D.omega_K lies in the rank-one module generated by omega_K}.
SubalgebraBasis contact_condition(const Ring& R);

// Derivation f -> sum_i (d_i f) d_{i+r} - (d_{i+r} f) d_i on an even ring.
Derivation hamiltonian_vector_field(const TruncPoly& f);
SubalgebraBasis hamiltonian_image(const Ring& R); // image of the map above

enum class Family { W, S, H, K, Kpp, P };
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

struct FamilyBuild {
    Family family;
    int n = 0;
    fp_t p = 3;
    SubalgebraBasis basis;     // inside the n-variable derivation algebra
    int mu = -1;               // maximal torus dimension (configuration metadata)
    bool small_p_caveat = false; // W(1), H(2) at p = 3
    bool standard_graded = false; // homogeneous for the standard grading
};

bool family_in_envelope(Family f, int n, fp_t p);
// Builds the named algebra with cross-checked construction routes; throws
// EnvelopeError outside the supported parameters unless force is set.
FamilyBuild build_family(Family f, int n, fp_t p, bool force = false);

} // namespace rlct
