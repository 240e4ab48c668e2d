#pragma once

#include "trispec/window.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace trispec {

/// Piecewise linear path in the z-plane.
class PathInC {
public:
    PathInC() = default;
    /// Validates: at least one waypoint, consecutive waypoints distinct
    /// (a single waypoint is the constant path), closed iff last == first.
    PathInC(std::vector<Complex> waypoints, bool closed);

    static PathInC segment(Complex from, Complex to);
    /// Closed polygon approximating the circle |z - center| = radius, starting
    /// and ending at `start`, which is joined to the circle by a spoke.
    static PathInC loop_around(Complex start, Complex center, double radius, int sides = 64);

    [[nodiscard]] const std::vector<Complex>& waypoints() const { return waypoints_; }
    [[nodiscard]] bool closed() const { return closed_; }
    [[nodiscard]] Complex start() const { return waypoints_.front(); }
    [[nodiscard]] Complex end() const { return waypoints_.back(); }
    [[nodiscard]] double max_abs() const;
    [[nodiscard]] PathInC reversed() const;
    /// this followed by other; requires end() == other.start().
    [[nodiscard]] PathInC then(const PathInC& other) const;

private:
    std::vector<Complex> waypoints_;
    bool closed_ = false;
};

enum class BranchStatus { Ok, NearCollision };

struct EigenBranch {
    int n = 1;
    PathInC path;
    std::vector<std::pair<Complex, Complex>> samples; ///< (z, E)
    BranchStatus status = BranchStatus::Ok;
    Complex z_bad = 0.0;
    double gap = 0.0;

    [[nodiscard]] Complex final_value() const { return samples.back().second; }
};

struct ContinuationOptions {
    double tol = 1e-10;
    /// Truncation; 0 picks max(64, 8 * largest label).
    int N = 0;
    /// Largest |dz| per step.
    double max_step = 0.02;
    /// Throw NearCollisionError instead of returning a near_collision status.
    bool throw_on_collision = true;
};

/// Continues the labelled branches simultaneously along the path. At the
/// start, branch k is the eigenvalue nearest q_k, which must be isolated.
std::vector<EigenBranch> continue_branches(const OperatorFamily& family, const std::vector<int>& labels,
                                           const PathInC& path, const ContinuationOptions& options = {});

EigenBranch continue_branch(const OperatorFamily& family, int n, const PathInC& path,
                            const ContinuationOptions& options = {});

struct BranchOptions {
    /// Truncation for the final polish; 0 picks max(64, 8n).
    int N = 0;
    double tol = 1e-10;
};

/// E_n(z) - q_n. Inside Delta_n the branch is the unique eigenvalue in K_n;
/// outside it is continued along the segment 0 -> z. The value is polished by
/// Newton iteration on the continued-fraction form of the eigenvalue equation.
Complex branch_deviation(const OperatorFamily& family, int n, Complex z, const BranchOptions& options = {});

/// float128 version; z and the couplings must be real.
HighFloat branch_deviation_high(const OperatorFamily& family, int n, const HighFloat& z, int N,
                                const HighFloat& guess);

} // namespace trispec
