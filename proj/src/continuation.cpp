#include "trispec/continuation.hpp"
#include "trispec/refine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace trispec {

PathInC::PathInC(std::vector<Complex> waypoints, bool closed) : waypoints_(std::move(waypoints)), closed_(closed) {
    if (waypoints_.empty()) throw Error(ErrorCode::InvalidParameter, "path needs at least one waypoint");
    for (size_t i = 1; i < waypoints_.size(); ++i)
        if (waypoints_[i] == waypoints_[i - 1])
            throw Error(ErrorCode::InvalidParameter, "consecutive path waypoints must be distinct");
    if (closed_ && waypoints_.size() > 1 && waypoints_.back() != waypoints_.front())
        throw Error(ErrorCode::InvalidParameter, "closed path must end where it starts");
}

PathInC PathInC::segment(Complex from, Complex to) {
    if (from == to) return PathInC({from}, false);
    return PathInC({from, to}, false);
}

PathInC PathInC::loop_around(Complex start, Complex center, double radius, int sides) {
    if (!(radius > 0.0) || sides < 3) throw Error(ErrorCode::InvalidParameter, "loop needs radius > 0 and >= 3 sides");
    std::vector<Complex> pts{start};
    const Complex dir = start == center ? Complex(1.0) : (start - center) / std::abs(start - center);
    const double theta0 = std::arg(dir);
    const Complex entry = center + radius * dir;
    if (entry != start) pts.push_back(entry);
    for (int k = 1; k <= sides; ++k) {
        const double th = theta0 + 2.0 * std::numbers::pi * k / sides;
        pts.push_back(k == sides ? entry : center + radius * Complex(std::cos(th), std::sin(th)));
    }
    if (entry != start) pts.push_back(start);
    return PathInC(pts, true);
}

double PathInC::max_abs() const {
    double m = 0.0;
    for (const Complex& w : waypoints_) m = std::max(m, std::abs(w));
    return m;
}

PathInC PathInC::reversed() const {
    std::vector<Complex> pts(waypoints_.rbegin(), waypoints_.rend());
    return PathInC(pts, closed_);
}

PathInC PathInC::then(const PathInC& other) const {
    if (end() != other.start()) throw Error(ErrorCode::InvalidParameter, "paths do not join");
    std::vector<Complex> pts = waypoints_;
    pts.insert(pts.end(), other.waypoints_.begin() + 1, other.waypoints_.end());
    const bool closed = pts.size() > 1 && pts.front() == pts.back();
    return PathInC(pts, closed);
}

namespace {

double gap_excluding(const Eigen::VectorXcd& ev, Eigen::Index self) {
    double g = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        if (k != self) g = std::min(g, std::abs(ev(k) - ev(self)));
    return g;
}

Eigen::Index nearest(const Eigen::VectorXcd& ev, Complex target) {
    Eigen::Index best = 0;
    (ev.array() - target).abs().minCoeff(&best);
    return best;
}

} // namespace

std::vector<EigenBranch> continue_branches(const OperatorFamily& family, const std::vector<int>& labels,
                                           const PathInC& path, const ContinuationOptions& opt) {
    if (labels.empty()) return {};
    const int max_label = *std::max_element(labels.begin(), labels.end());
    if (*std::min_element(labels.begin(), labels.end()) < 1)
        throw Error(ErrorCode::InvalidParameter, "branch labels start at 1");
    int N = opt.N > 0 ? opt.N : std::max(64, 8 * max_label);
    if (family.max_index() > 0) N = std::min(N, family.max_index());
    if (N < max_label + 2) throw Error(ErrorCode::InvalidParameter, "truncation too small for the labels");

    const size_t B = labels.size();
    std::vector<EigenBranch> branches(B);
    Complex z = path.start();
    Eigen::VectorXcd ev = eigenvalues(family, z, N);
    std::vector<Eigen::Index> idx(B);
    std::vector<Complex> E(B), prevE(B);
    for (size_t b = 0; b < B; ++b) {
        const Complex target = family.q(labels[b]);
        idx[b] = nearest(ev, target);
        const double d = std::abs(ev(idx[b]) - target);
        if (!(d < gap_excluding(ev, idx[b]) / 2))
            throw Error(ErrorCode::InvalidParameter,
                        "branch " + std::to_string(labels[b]) + " is not isolated at the path start");
        E[b] = ev(idx[b]);
        branches[b].n = labels[b];
        branches[b].path = path;
        branches[b].samples.emplace_back(z, E[b]);
    }
    for (size_t a = 0; a < B; ++a)
        for (size_t b = a + 1; b < B; ++b)
            if (idx[a] == idx[b] && labels[a] != labels[b])
                throw Error(ErrorCode::InvalidParameter, "two labels share one eigenvalue at the path start");

    auto collide = [&](Complex zbad, double gap) {
        if (opt.throw_on_collision) throw NearCollisionError(zbad, gap);
        for (auto& br : branches) {
            br.status = BranchStatus::NearCollision;
            br.z_bad = zbad;
            br.gap = gap;
        }
        return branches;
    };

    bool have_prev = false;
    Complex prevZ = z;
    const auto& wp = path.waypoints();
    for (size_t seg = 0; seg + 1 < wp.size(); ++seg) {
        const Complex w0 = wp[seg], w1 = wp[seg + 1];
        const double L = std::abs(w1 - w0);
        const Complex dir = (w1 - w0) / L;
        const double h_min = 1e-13 * std::max(1.0, L);
        double s = 0.0;
        while (s < L) {
            std::vector<double> gap(B);
            std::vector<Complex> deriv(B, 0.0);
            double min_gap = std::numeric_limits<double>::infinity();
            for (size_t b = 0; b < B; ++b) {
                gap[b] = gap_excluding(ev, idx[b]);
                min_gap = std::min(min_gap, gap[b]);
                if (have_prev) deriv[b] = (E[b] - prevE[b]) / (z - prevZ);
            }
            if (min_gap < 10.0 * opt.tol) return collide(z, min_gap);
            double h = std::min(opt.max_step, L - s);
            for (size_t b = 0; b < B; ++b) {
                const double speed = std::abs(deriv[b]);
                if (speed * h >= gap[b] / 4) h = 0.9 * gap[b] / (4.0 * speed);
            }
            bool accepted = false;
            Eigen::VectorXcd ev_new;
            std::vector<Eigen::Index> idx_new(B);
            Complex zn;
            while (!accepted) {
                if (h < h_min) return collide(z, min_gap);
                const bool last = s + h >= L;
                zn = last ? w1 : z + h * dir;
                ev_new = eigenvalues(family, zn, N);
                accepted = true;
                for (size_t b = 0; b < B && accepted; ++b) {
                    const Complex pred = E[b] + deriv[b] * (zn - z);
                    int count = 0;
                    for (Eigen::Index k = 0; k < ev_new.size(); ++k) {
                        if (std::abs(ev_new(k) - pred) < gap[b] / 2) {
                            ++count;
                            idx_new[b] = k;
                        }
                    }
                    if (count != 1 || !(std::abs(ev_new(idx_new[b]) - E[b]) < gap[b] / 2)) accepted = false;
                }
                for (size_t a = 0; a < B && accepted; ++a)
                    for (size_t b = a + 1; b < B && accepted; ++b)
                        if (idx_new[a] == idx_new[b] && labels[a] != labels[b]) accepted = false;
                if (!accepted) h /= 2;
            }
            s = (zn == w1) ? L : s + h;
            prevZ = z;
            prevE = E;
            have_prev = true;
            z = zn;
            ev = ev_new;
            idx = idx_new;
            for (size_t b = 0; b < B; ++b) {
                E[b] = ev(idx[b]);
                branches[b].samples.emplace_back(z, E[b]);
            }
        }
    }
    return branches;
}

EigenBranch continue_branch(const OperatorFamily& family, int n, const PathInC& path, const ContinuationOptions& options) {
    return continue_branches(family, {n}, path, options).front();
}

Complex branch_deviation(const OperatorFamily& family, int n, Complex z, const BranchOptions& options) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
    int N = options.N > 0 ? options.N : std::max(64, 8 * n);
    if (family.max_index() > 0) N = std::min(N, family.max_index());
    const double qn = family.q(n);
    Complex E;
    bool found = false;
    if (family.q_is_k_squared() && region_contains(regions(family, n), z, Region::Delta)) {
        const Eigen::VectorXcd ev = eigenvalues(family, z, N);
        int count = 0;
        for (Eigen::Index k = 0; k < ev.size(); ++k) {
            if (std::abs(ev(k) - qn) < n) {
                E = ev(k);
                ++count;
            }
        }
        found = count == 1;
    }
    if (!found) {
        ContinuationOptions copt;
        copt.N = N;
        copt.tol = options.tol;
        E = continue_branch(family, n, PathInC::segment(0.0, z), copt).final_value();
    }
    const Complex zeta0 = E - qn;
    const auto refined = refine_deviation(PencilTable<Complex>::build(family, N), z, n, zeta0);
    // the polish must stay on the same eigenvalue
    if (refined.converged && std::abs(refined.zeta - zeta0) <= 1e-6 * (1.0 + std::abs(E))) return refined.zeta;
    return zeta0;
}

HighFloat branch_deviation_high(const OperatorFamily& family, int n, const HighFloat& z, int N,
                                const HighFloat& guess) {
    const auto refined = refine_deviation(PencilTable<HighFloat>::build(family, N), z, n, guess);
    if (!refined.converged) throw Error(ErrorCode::NoConvergence, "float128 polish failed for n = " + std::to_string(n));
    return refined.zeta;
}

} // namespace trispec
