#pragma once

#include "trispec/continuation.hpp"
#include "trispec/family.hpp"

#include <string>
#include <utility>
#include <vector>

namespace trispec {

enum class CharPolyMethod { Product, Newton };

/// c(z, lambda) = sum_j c_j lambda^j = prod_{k<=n} (lambda - E_k(z)).
struct CharPolyAtZ {
    int n = 0;
    Complex z = 0.0;
    std::vector<Complex> coeffs; ///< c_0..c_n, c_n = 1
    std::vector<Complex> roots;  ///< the window eigenvalues (Product only)
    Complex discriminant_value;  ///< Res(c, c') by the Sylvester determinant
};

/// Product expands prod (lambda - E_k) over the window eigenvalues; Newton
/// turns contour power sums sigma_j into elementary symmetric functions.
CharPolyAtZ char_poly(const OperatorFamily& family, Complex z, int n, CharPolyMethod method = CharPolyMethod::Product);

/// Monic polynomial with the given roots.
CharPolyAtZ char_poly_from_roots(const std::vector<Complex>& roots);

/// Elementary symmetric functions e_1..e_n from power sums p_1..p_n.
std::vector<Complex> newton_identities(const std::vector<Complex>& power_sums);

/// Res(c, c') as the (2n-1) x (2n-1) Sylvester determinant.
Complex sylvester_resultant(const std::vector<Complex>& coeffs);

/// Res(c, c') for monic c from its roots: (-1)^{n(n-1)/2} prod_{i<j} (x_i - x_j)^2.
Complex root_product_resultant(const std::vector<Complex>& roots);

/// Res(c, c') of the polynomial, by the Sylvester determinant.
Complex discriminant(const CharPolyAtZ& poly);

/// r(z) / r(0) = prod_{i<j} ((E_i - E_j) / (q_i - q_j))^2, free of overflow for
/// large n. Vanishes exactly on Sigma_n.
Complex normalized_discriminant(const OperatorFamily& family, Complex z, int n);

struct BranchPoint {
    Complex z_star = 0.0;
    int multiplicity_hint = 1;            ///< winding of r around the final cell
    std::pair<int, int> colliding_labels; ///< {0, 0} when continuation failed
    double gap = 0.0;                     ///< minimal eigenvalue gap at z_star
    double residual = 0.0;                ///< |r~(z_star)|
    bool low_confidence = false;
};

struct BranchPointSet {
    int n = 0;
    double R_n = 0.0;
    double search_radius = 0.0;
    int grid_density = 0; ///< squares per side actually used
    std::vector<BranchPoint> points;
};

struct BranchSearchOptions {
    /// Squares per side over [-radius, radius]^2; raised when needed so every
    /// square meeting the search disk stays inside Delta_n.
    int grid_density = 26;
    double tol = 1e-12;
    /// Search disk radius; 0 means 0.9 R_n. Must stay below R_n.
    double radius = 0.0;
    /// Continue branches to z_star to name the colliding pair.
    bool label_collisions = true;
    /// Worker threads for the coarse grid scan.
    int jobs = 1;
};

/// Zeros of r(z) in the search disk by the argument principle on a square grid,
/// refined by subdivision and polished by the secant method.
BranchPointSet find_branch_points(const OperatorFamily& family, int n, const BranchSearchOptions& options = {});

struct MonodromyResult {
    PathInC path;
    int n_max = 0;                 ///< labels continued (possibly raised)
    std::vector<int> permutation;  ///< permutation[k-1] = pi(k)
    int tail_fixed_beyond = -1;    ///< smallest k with R_k > max |z| on the path, -1 if none
    std::vector<Complex> final_values;
};

/// Continues branches 1..n_max around the closed path from 0 and reads the
/// permutation off the end values, which lie on {q_k}. n_max is raised to
/// tail_fixed_beyond - 1 when that is larger.
MonodromyResult monodromy(const OperatorFamily& family, const PathInC& path, int n_max, double tol = 1e-10);

/// Product of permutations: (a * b)(k) = a(b(k)), i.e. b first.
std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> inverse(const std::vector<int>& p);
bool is_identity(const std::vector<int>& p);

enum class Verdict { CertifiedIrreducible, Inconclusive };
std::string to_string(Verdict v);

struct IrreducibilityReport {
    double alpha = 0.0;
    int k_used = 0;
    int N_checked = 0;
    std::vector<double> values;  ///< a_k(n), n = 1..N
    std::vector<int> sign_pattern;
    int exceptional_index = 0;   ///< the one n whose sign differs, 0 if none
    bool pattern_holds = false;
    bool telescoped_sum_check = false;
    bool alpha_certified = false;
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
};

/// a_4(gamma/2, n) = phi~_4(gamma, n) - phi~_4(gamma, n-1), all n >= 1.
HighFloat a4_tilde(const HighFloat& gamma, int n);

/// Sign pattern of a_k(alpha, n), n <= N, for the power family (k = 6 needs
/// alpha = 1/2, k = 4 needs alpha in [0, 1/2)).
IrreducibilityReport irreducibility_certificate(const OperatorFamily& family, int k, int N = 50);

/// Positive strictly decreasing b and c (probed on k = 1..200): a_2(1) < 0 <
/// a_2(n) for n >= 2 by telescoping phi_2. Throws NotMonotone.
IrreducibilityReport decreasing_family_certificate(const OperatorFamily& family, int N = 200);

} // namespace trispec
