#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cliffver/matrix.hpp"
#include "cliffver/smith.hpp"

namespace cliffver {

struct PhaseNotRootOfUnity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simplicial complex on ordered vertices, simplices up to dimension 3 stored
// as sorted tuples; the cover is the vertex-star cover, so cochains live on
// the simplices themselves.
struct SimplicialComplex {
    int nvertices = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> tetrahedra;

    std::map<std::array<int, 2>, int> edge_index;
    std::map<std::array<int, 3>, int> triangle_index;

    void build_index();
    void validate() const;  // faces of every simplex present, tuples sorted

    int simplex_count(int k) const;
    // delta: C^k -> C^{k+1}, alternating sum over omitted vertices
    IMat coboundary(int k) const;

    nlohmann::json to_json() const;
    static SimplicialComplex from_json(const nlohmann::json& j);
};

struct Cochain {
    int degree = 0;
    long long modulus = 0;  // 0 = integer coefficients
    std::vector<long long> values;

    Cochain reduced() const;  // entries normalized into [0, modulus)
};

Cochain apply_coboundary(const SimplicialComplex& c, const Cochain& z);
bool is_closed(const SimplicialComplex& c, const Cochain& z);

// Alexander-Whitney front/back product of 1-cochains: (x ~ y)(abc) = x(ab) y(bc)
Cochain cup_product(const SimplicialComplex& c, const Cochain& x, const Cochain& y);

// Connecting map of 0 -> Z -m-> Z -> Z_m -> 0: lift, coboundary, divide by m.
Cochain bockstein(const SimplicialComplex& c, const Cochain& z);

// Class of a closed cochain in H^degree(C, Z_modulus), canonical under
// coboundary shifts.
LatticeInvariant cohomology_class(const SimplicialComplex& c, const Cochain& z);
bool is_coboundary(const SimplicialComplex& c, const Cochain& z);

AbelianGroup integer_cohomology(const SimplicialComplex& c, int k);
int mod2_betti(const SimplicialComplex& c, int k);

// Representatives of a basis of H^k(C, Z_2).
std::vector<Cochain> mod2_generators(const SimplicialComplex& c, int k);

// Nerve data: one homogeneous unitary per sorted edge (alpha < beta), mapping
// fiber copy alpha to fiber copy beta; the reverse direction is the adjoint.
struct TransitionData {
    SimplicialComplex complex;
    CMat grading;                     // fiber grading, involutive
    std::vector<CMat> edge_unitaries; // per sorted edge

    int fiber_dim() const { return static_cast<int>(grading.rows()); }
    CMat transition(int from, int to) const;  // adjoint for descending edges
    void validate(double tol = 1e-9) const;
};

// Z_2 1-cocycle recording grading-reversing transitions; its class is the
// orientation class.
Cochain orientation_cocycle(const TransitionData& t, double tol = 1e-9);

// Z_m exponents of the triple-product phases U_{ca} U_{bc} U_{ab} = lambda id;
// phases are snapped to exact m-th roots of unity (within 1e-6) or rejected.
Cochain dd_cocycle(const TransitionData& t, long long m, double tol = 1e-9);

// Koszul-twisted tensor bundle: (U_A Gamma_A^{eps_B}) (x) U_B per edge.
TransitionData graded_tensor_bundle(const TransitionData& a, const TransitionData& b,
                                    double tol = 1e-9);

struct TensorFormulaReport {
    bool orientation_additive = false;       // class equality over Z_2
    bool dd_classes_equal = false;           // lambda class = sum + cup correction (Z_m)
    bool bockstein_classes_equal = false;    // degree-3 integral images agree
    bool correction_nonzero = false;         // the cup term is a nontrivial class
    long long modulus = 2;
};

TensorFormulaReport verify_tensor_formula(const TransitionData& a, const TransitionData& b,
                                          long long m = 2, double tol = 1e-9);

// Fixture complexes (and JSON loaders for the shipped data files).
SimplicialComplex circle_complex();        // 3 vertices
SimplicialComplex sphere_complex();        // tetrahedron boundary
SimplicialComplex rp2_complex();           // 6-vertex triangulation
SimplicialComplex torus_complex();         // 7-vertex triangulation
SimplicialComplex fixture_by_name(const std::string& name);

// Bundle with prescribed orientation cocycle: even edges carry the identity,
// odd edges the grading-reversing swap on the 2-dimensional fiber.
TransitionData bundle_from_orientation(const SimplicialComplex& c, const Cochain& eps);

// Scalar-phase bundle: U_e = exp(2 pi i mu_e / m) * id on a 2-dimensional
// fiber; its triple products are the coboundary of mu.
TransitionData bundle_from_phases(const SimplicialComplex& c, const Cochain& mu, long long m);

nlohmann::json transition_data_to_json(const TransitionData& t);
TransitionData transition_data_from_json(const nlohmann::json& j);

}  // namespace cliffver
