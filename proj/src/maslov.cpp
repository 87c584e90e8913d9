#include "wspindex/maslov.hpp"

#include <numeric>

namespace wspindex {

long long maslov(const BundlePair& pair) {
    if (pair.rank != 1) {
        if (pair.boundary_count() == 0) return 2 * pair.closed_degree; // Chern-class property
        throw UnsupportedPairError("rank " + std::to_string(pair.rank) +
                                   " pair without direct-sum structure");
    }
    long long mu = 2 * pair.closed_degree;
    for (long long kappa : pair.boundary_windings) mu += kappa;
    return mu;
}

long long maslov_sum(const std::vector<BundlePair>& summands) {
    long long mu = 0;
    for (const auto& p : summands) mu += maslov(p);
    return mu;
}

long long maslov_from_closed(long long closed_degree, const std::vector<BundlePair>& complement) {
    return 2 * closed_degree - maslov_sum(complement);
}

namespace {

void compose_node(const DecompositionNode& node, CompositionResult& out) {
    if (node.children.empty()) {
        if (!node.matched.empty())
            throw MismatchedBoundaryError("leaf node declares matched circles");
        return;
    }
    if (node.children.size() != 2)
        throw MismatchedBoundaryError("decomposition nodes have zero or two children");

    const BundlePair& c0 = node.children[0].pair;
    const BundlePair& c1 = node.children[1].pair;
    std::vector<bool> used0(c0.boundary_count(), false), used1(c1.boundary_count(), false);
    for (const auto& [i0, i1] : node.matched) {
        if (i0 >= c0.boundary_count() || i1 >= c1.boundary_count())
            throw MismatchedBoundaryError("matched circle index out of range");
        if (used0[i0] || used1[i1])
            throw MismatchedBoundaryError("boundary circle matched twice");
        used0[i0] = used1[i1] = true;
        // same geometric line seen with opposite orientations
        if (c0.boundary_windings[i0] != -c1.boundary_windings[i1])
            throw MismatchedBoundaryError(
                "windings on a shared circle do not cancel: " +
                std::to_string(c0.boundary_windings[i0]) + " vs " +
                std::to_string(c1.boundary_windings[i1]));
    }

    // parent boundary = unmatched circles of child 0 then child 1
    std::vector<long long> leftover;
    for (std::size_t i = 0; i < c0.boundary_count(); ++i)
        if (!used0[i]) leftover.push_back(c0.boundary_windings[i]);
    for (std::size_t i = 0; i < c1.boundary_count(); ++i)
        if (!used1[i]) leftover.push_back(c1.boundary_windings[i]);
    if (leftover != node.pair.boundary_windings)
        throw MismatchedBoundaryError("parent boundary windings do not match the leftovers");
    if (node.pair.closed_degree != c0.closed_degree + c1.closed_degree)
        throw MismatchedBoundaryError("capped extension degree is not additive over the gluing");

    compose_node(node.children[0], out);
    compose_node(node.children[1], out);

    CompositionCertificate cert;
    cert.parent_mu = maslov(node.pair);
    cert.children_mu_sum = maslov(c0) + maslov(c1);
    cert.pass = cert.parent_mu == cert.children_mu_sum;
    out.all_pass = out.all_pass && cert.pass;
    out.certificates.push_back(cert);
}

} // namespace

CompositionResult maslov_compose(const DecompositionNode& tree) {
    CompositionResult out;
    out.mu = maslov(tree.pair);
    compose_node(tree, out);
    return out;
}

long long winding_from_spin(long long v, bool reversed) { return reversed ? -2 * v : 2 * v; }

BundlePair glued_cylinder_pair(long long v) {
    BundlePair pair;
    pair.genus = 0;
    pair.boundary_windings = {winding_from_spin(v, true), winding_from_spin(v, true)};
    pair.closed_degree = 2;
    return pair;
}

long long rr_boundary_index(const BundlePair& pair) {
    return pair.rank * pair.euler_characteristic() + maslov(pair);
}

long long wspin_interior_maslov(const Rational& q, long long genus, std::size_t k,
                                const std::vector<Rational>& a_list,
                                const std::vector<long long>& v_list) {
    if (a_list.size() != k || v_list.size() != k)
        throw ShapeMismatchError("a/v lists must have length k");
    Rational sum_a(0);
    for (const auto& a : a_list) sum_a += a;
    Rational deg = q * Rational(2 * genus - 2 + (long long)k) - sum_a;
    if (!deg.is_integer()) throw NonIntegralDegreeError(0, deg);
    long long sum_v = std::accumulate(v_list.begin(), v_list.end(), 0LL);
    return 2 * deg.num() + 2 * sum_v;
}

long long wspin_interior_maslov(const LineBundleData& line) {
    try {
        return wspin_interior_maslov(line.q, line.genus, line.k(), line.a, line.v);
    } catch (const NonIntegralDegreeError& e) {
        throw NonIntegralDegreeError(line.j, e.value());
    }
}

long long interior_index(const Rational& q, long long genus, std::size_t k,
                         const std::vector<Rational>& a_list,
                         const std::vector<long long>& v_list) {
    long long chi = 2 - 2 * genus - (long long)k;
    long long mu = wspin_interior_maslov(q, genus, k, a_list, v_list);
    long long via_rr = chi + mu;

    // closed form (1-2q)(2-2g-k) - 2 sum a + 2 sum v, evaluated exactly
    Rational sum_a(0);
    for (const auto& a : a_list) sum_a += a;
    long long sum_v = std::accumulate(v_list.begin(), v_list.end(), 0LL);
    Rational closed = (Rational(1) - Rational(2) * q) * Rational(chi) -
                      Rational(2) * sum_a + Rational(2 * sum_v);
    if (!closed.is_integer() || closed.num() != via_rr)
        throw InternalInconsistencyError("interior index routes disagree: " + closed.str() +
                                         " vs " + std::to_string(via_rr));
    return via_rr;
}

long long interior_index(const LineBundleData& line) {
    try {
        return interior_index(line.q, line.genus, line.k(), line.a, line.v);
    } catch (const NonIntegralDegreeError& e) {
        throw NonIntegralDegreeError(line.j, e.value());
    }
}

} // namespace wspindex
