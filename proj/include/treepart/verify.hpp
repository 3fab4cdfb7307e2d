#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "treepart/instance.hpp"
#include "treepart/polytopes.hpp"

namespace treepart {

/// Result of testing one inequality against the integral hull of a tree's
/// lifted vectors. The hull is full-dimensional, so a valid inequality is
/// facet-defining exactly when its tight vertices affinely span dimension
/// m - 1. All rank computations are exact.
struct FacetReport {
    SystemRow row;
    bool valid = false;
    int tight_vertex_count = 0;
    int face_dimension = -1;  // affine dimension of the tight vertex set
    bool is_facet = false;
};

FacetReport facet_check(const Tree& tree, const SystemRow& row, int max_edges = 12);

/// One classified row: the closed-form prediction against the computed flag.
struct FacetClassEntry {
    std::string family;
    std::string label;
    bool predicted = false;
    bool observed = false;
    bool agree = false;
};

struct FacetClassification {
    std::vector<FacetClassEntry> entries;
    bool all_agree = true;
};

/// Runs facet_check on every relaxation row of the tree (naive path/cut rows,
/// canonical triplet rows, boxes, squares) and compares against the
/// closed-form facet predicates: path rows iff distance two, cut rows iff the
/// shrinking endpoint is a leaf, upper boxes iff both endpoints are leaves,
/// lower boxes never, squares always. Requires at least three nodes.
FacetClassification classify_trivial_facets(const Tree& tree);

struct TriangleExampleReport {
    bool star_valid = false;
    bool star_facet = false;
    bool star_reversed_invalid = false;
    bool tree_valid = false;
    bool pass() const { return star_valid && star_facet && star_reversed_invalid && tree_valid; }
};

/// Checks the two fixed four-pair example inequalities: on the 3-leaf star,
/// x01 + x23 <= x12 + x13 is valid and facet-defining (and its reversal is
/// invalid); on the 7-node example tree, x02 + x56 <= x05 + x06 is valid.
TriangleExampleReport verify_triangle_examples();

/// For `trials` random integral objectives, maximizes over the ordered-path
/// system and checks that the optimal vertex is 0/1, encodes a decomposition,
/// and matches the exhaustive optimum. 2 <= n <= 6.
bool verify_path_integrality(int n, int trials, std::uint64_t seed);

/// Negative control: hunts for a random objective whose optimum over the
/// naive relaxation of a path is attained at a fractional vertex. Returns the
/// point if found within `trials`.
std::optional<std::vector<Rational>> find_fractional_theta0_vertex(int n, int trials, std::uint64_t seed);

/// Integral-dual certificate for one objective over the extended path system.
struct TdiWitness {
    int n = 0;
    Rational primal_value = 0;
    std::vector<Rational> y;  // one per extended inequality row
    std::vector<Rational> z;  // one per equality row
    bool y_nonnegative = false;
    bool dual_feasible = false;  // transpose system holds exactly
    bool integral = false;
    bool duality_gap_zero = false;
    bool valid() const { return y_nonnegative && dual_feasible && integral && duality_gap_zero; }
};

/// Builds the extended system, solves the primal, solves the reduced dual
/// over the equality duals (whose constraint matrix has the consecutive-ones
/// property, hence an integral vertex optimum), back-substitutes the
/// inequality duals and verifies the full dual system exactly.
TdiWitness tdi_witness(int n, const std::vector<Rational>& objective);

/// Random integral objective over the extended variable space.
std::vector<Rational> random_extended_objective(int n, std::mt19937_64& rng, long lo, long hi);

struct NonTuWitness {
    bool found = false;
    std::vector<int> rows;  // row indices into theta_path_system(n)
    std::vector<int> cols;  // variable indices
    long long det = 0;
};

/// Exhaustive search (ascending order) for a square submatrix of the
/// ordered-path constraint matrix with |det| >= 2. Returns the first witness
/// or reports total unimodularity.
NonTuWitness verify_non_tu(int n);

struct InclusionReport {
    bool holds = false;
    Rational worst_violation = 0;  // max over rows of the violation LP optimum
    std::string worst_label;
};

/// Confirms that no row of `outer` can be violated over `inner` (per-row
/// violation LPs, all optima <= 0) and that every integral lifted vector of
/// the tree satisfies both systems.
InclusionReport verify_inclusion(const Tree& tree, const InequalitySystem& inner,
                                 const InequalitySystem& outer);

/// Positive optimum of a square-row violation over the naive relaxation of
/// the length-3 path, together with the witness point: a fractional point of
/// the naive relaxation outside the integral hull.
struct StrictnessWitness {
    Rational violation = 0;
    std::vector<Rational> point;
    std::string row_label;
};

StrictnessWitness theta0_strictness_witness();

/// All trees with exactly `nodes` nodes, one per isomorphism class, with
/// deterministic representatives (canonical level-string dedup).
std::vector<Tree> trees_up_to_iso(int nodes);

/// Every vertex of the polytope {x | rows}, found by enumerating basic
/// feasible solutions (all full-rank row subsets of size num_vars),
/// deduplicated. Exponential; for desk-scale double description only.
std::vector<std::vector<Rational>> enumerate_polytope_vertices(const InequalitySystem& system);

}  // namespace treepart
