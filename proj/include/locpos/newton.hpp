#pragma once

#include <optional>
#include <vector>

#include "locpos/lp.hpp"
#include "locpos/poly.hpp"

namespace locpos {

// A face of a Newton polytope under the min convention:
// normal . alpha = offset on members, normal . beta > offset off the face.
struct Face {
    std::vector<Rat> normal;
    Rat offset;
    std::vector<std::size_t> member_indices;   // into the polytope's point list
    std::vector<ExponentVector> members;
};

struct NewtonPolytope {
    std::vector<ExponentVector> points;        // generating support
    std::vector<std::size_t> vertex_indices;
    std::vector<Face> facets;                  // normal . x >= offset valid, tight on facet

    std::vector<ExponentVector> vertices() const {
        std::vector<ExponentVector> out;
        for (std::size_t i : vertex_indices) out.push_back(points[i]);
        return out;
    }
};

struct ConvexCombination {
    std::vector<Rat> target;
    std::vector<Rat> weights;   // over the polytope's vertex list
    Rat k_beta;                 // 1 / max weight
};

// beta = beta_hat + delta with beta_hat in the principal polytope and
// delta >= 0, delta != 0.
struct AnchorDecomposition {
    ExponentVector beta;
    std::vector<Rat> beta_hat;
    std::vector<Rat> delta;
    Rat k_beta_hat;
};

// Convex hull of a support point set. Vertices are certified by LP
// (non-membership in the hull of the remaining points); facets come from
// exact enumeration in the affine hull, each verified by a witness-normal LP.
NewtonPolytope polytope(const std::vector<ExponentVector>& points);

// All nonempty faces, vertices through the whole polytope, each carrying a
// verified witness normal. Deterministic order: by member count, then by
// member index lists.
std::vector<Face> enumerate_faces(const NewtonPolytope& np);

// Terms of p supported on F. Throws if F is not a face of p's support.
SparsePolynomial face_polynomial(const SparsePolynomial& p, const Face& F);

// Newton principal part: terms whose exponent lies on the Newton diagram
// (admits a strictly positive normal minimizing over the support).
std::pair<SparsePolynomial, SparsePolynomial> principal_part(const SparsePolynomial& p);

// Compact faces of N_f: faces of polytope(Sup(f_N)) admitting a strictly
// positive witness normal.
std::vector<Face> diagram_faces(const SparsePolynomial& p);

// Sum of unit-coefficient monomials over the vertices of N(p).
SparsePolynomial vertex_characteristic(const SparsePolynomial& p);

// Expresses beta as a convex combination of np's vertices, minimizing the
// maximum weight so k_beta = 1/max(weights) is as large as possible.
std::optional<ConvexCombination> convex_combination(const NewtonPolytope& np,
                                                    const std::vector<Rat>& beta);

// Decomposes a tail exponent beta over the principal polytope, maximizing
// the l1 mass of delta. Throws on delta = 0 (internal inconsistency).
AnchorDecomposition anchor(const NewtonPolytope& np_of_fN, const ExponentVector& beta);

}  // namespace locpos
