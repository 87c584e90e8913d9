#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wspindex/rational.hpp"
#include "wspindex/wspin.hpp"

namespace wspindex {

// Complex line/vector bundle over a genus-g surface together with a totally
// real boundary subbundle, encoded by one winding integer per boundary circle
// in the normalization-axiom convention F = e^{i*kappa*theta/2} R.
//
// closed_degree is the degree of the extension obtained by capping every
// boundary circle with a disk in the same trivialization (for a closed
// surface it is just deg E). It is part of the model, not derived.
struct BundlePair {
    long long genus = 0;
    long long rank = 1;
    std::vector<long long> boundary_windings;
    long long closed_degree = 0;

    std::size_t boundary_count() const { return boundary_windings.size(); }
    long long euler_characteristic() const {
        return 2 - 2 * genus - (long long)boundary_count();
    }
};

// Boundary Maslov index. Closed surface: 2*deg E. Disk with winding kappa:
// kappa. In general the pair is split by the composition axiom into its
// capped closed extension minus the complementary capping disks, giving
// mu = 2*closed_degree - sum(-kappa_b) = 2*closed_degree + sum(kappa_b).
// Rank > 1 requires explicit direct-sum structure (UnsupportedPairError).
long long maslov(const BundlePair& pair);

// Direct-sum axiom: mu of a sum of rank-1 pairs.
long long maslov_sum(const std::vector<BundlePair>& summands);

// Rearranged composition axiom: mu(E,F) = mu(E_02, empty) - mu(E_12, F_12),
// with the complement given as disjoint capping disks.
long long maslov_from_closed(long long closed_degree, const std::vector<BundlePair>& complement);

// Binary decomposition tree asserting the composition axiom at every
// internal node. `matched` lists boundary circles of child 0 glued to
// boundary circles of child 1; their windings must be equal and opposite.
struct DecompositionNode {
    BundlePair pair;
    std::vector<DecompositionNode> children;                    // zero or two
    std::vector<std::pair<std::size_t, std::size_t>> matched;   // (circle in c0, circle in c1)
};

struct CompositionCertificate {
    long long parent_mu = 0;
    long long children_mu_sum = 0;
    bool pass = false;
};

struct CompositionResult {
    long long mu = 0;
    std::vector<CompositionCertificate> certificates; // one per internal node
    bool all_pass = true;
};

// Validates matchings (MismatchedBoundaryError on failure) and certifies
// mu(parent) = mu(child0) + mu(child1) at every internal node.
CompositionResult maslov_compose(const DecompositionNode& tree);

// The single conversion point between W-spin boundary conditions and
// normalization windings: e^{i*v*theta} R has kappa = 2v, and the
// orientation-reversed condition e^{-i*v*theta} R has kappa = -2v.
long long winding_from_spin(long long v, bool reversed = false);

// Local model for the glued compact cylinder of the end-gluing argument:
// both boundary circles carry the reversed W-spin condition and the capped
// extension has degree 2, so that mu = 4 - 4v.
BundlePair glued_cylinder_pair(long long v);

// Riemann-Roch with boundary: ind(D_F) = n*chi(Sigma) + mu(E,F).
long long rr_boundary_index(const BundlePair& pair);

// mu(E,F) = 2 q_j (2g-2+k) - 2 sum a_j(h_l) + 2 sum v_{j,l}, assembled as
// 2*deg|L_j| + 2 sum v. Throws NonIntegralDegreeError when deg|L_j| fails
// the selection rule.
long long wspin_interior_maslov(const Rational& q, long long genus, std::size_t k,
                                const std::vector<Rational>& a_list,
                                const std::vector<long long>& v_list);
long long wspin_interior_maslov(const LineBundleData& line);

// ind over the inner piece: (2 - 2g - k) + mu(E,F); equals the closed form
// (1 - 2q)(2 - 2g - k) - 2 sum a + 2 sum v, asserted internally.
long long interior_index(const Rational& q, long long genus, std::size_t k,
                         const std::vector<Rational>& a_list,
                         const std::vector<long long>& v_list);
long long interior_index(const LineBundleData& line);

} // namespace wspindex
