#include "trispec/riemann.hpp"

#include "trispec/closed_forms.hpp"
#include "trispec/regions.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/taylor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <numbers>
#include <thread>

namespace trispec {

std::vector<Complex> newton_identities(const std::vector<Complex>& power_sums) {
    const int n = static_cast<int>(power_sums.size());
    std::vector<Complex> e(n + 1, 0.0);
    e[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        Complex s = 0.0;
        for (int i = 1; i <= k; ++i) s += (i % 2 ? 1.0 : -1.0) * e[k - i] * power_sums[i - 1];
        e[k] = s / double(k);
    }
    return e;
}

Complex sylvester_resultant(const std::vector<Complex>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "resultant needs degree >= 1");
    if (n == 1) return c[1];
    const int size = 2 * n - 1;
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(size, size);
    // rows 0..n-2 hold c shifted, rows n-1..2n-2 hold c' shifted; highest power first
    for (int r = 0; r < n - 1; ++r)
        for (int j = 0; j <= n; ++j) S(r, r + j) = c[n - j];
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= n - 1; ++j) S(n - 1 + r, r + j) = double(n - j) * c[n - j];
    return S.partialPivLu().determinant();
}

Complex root_product_resultant(const std::vector<Complex>& roots) {
    const int n = static_cast<int>(roots.size());
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) prod *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    return (n * (n - 1) / 2) % 2 ? -prod : prod;
}

Complex discriminant(const CharPolyAtZ& poly) { return sylvester_resultant(poly.coeffs); }

CharPolyAtZ char_poly_from_roots(const std::vector<Complex>& roots) {
    CharPolyAtZ out;
    out.n = static_cast<int>(roots.size());
    out.roots = roots;
    out.coeffs.assign(1, 1.0);
    for (Complex r : roots) {
        std::vector<Complex> next(out.coeffs.size() + 1, 0.0);
        for (size_t j = 0; j < out.coeffs.size(); ++j) {
            next[j + 1] += out.coeffs[j];
            next[j] -= r * out.coeffs[j];
        }
        out.coeffs = std::move(next);
    }
    out.discriminant_value = out.n >= 1 ? sylvester_resultant(out.coeffs) : Complex(1.0);
    return out;
}

CharPolyAtZ char_poly(const OperatorFamily& family, Complex z, int n, CharPolyMethod method) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
    CharPolyAtZ out;
    if (method == CharPolyMethod::Product) {
        const Eigen::VectorXcd w = window_eigenvalues_counted(family, z, n).values;
        out = char_poly_from_roots(std::vector<Complex>(w.data(), w.data() + w.size()));
    } else {
        const std::vector<Complex> e = newton_identities(power_sums(family, z, n, n, SigmaMethod::Contour, 1e-13));
        out.n = n;
        out.coeffs.assign(n + 1, 0.0);
        for (int k = 0; k <= n; ++k) out.coeffs[n - k] = (k % 2 ? -1.0 : 1.0) * e[k];
        out.discriminant_value = sylvester_resultant(out.coeffs);
    }
    out.z = z;
    return out;
}

namespace {

std::vector<Complex> sorted_left(const OperatorFamily& family, Complex z, int n) {
    const Eigen::VectorXcd l = left_of_line_eigenvalues(family, z, n, std::max(64, 8 * n));
    std::vector<Complex> v(l.data(), l.data() + l.size());
    std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return v;
}

double min_gap(const std::vector<Complex>& v) {
    double g = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) g = std::min(g, std::abs(v[i] - v[j]));
    return g;
}

} // namespace

Complex normalized_discriminant(const OperatorFamily& family, Complex z, int n) {
    const std::vector<Complex> e = sorted_left(family, z, n);
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Complex ratio = (e[i] - e[j]) / (family.q(i + 1) - family.q(j + 1));
            prod *= ratio * ratio;
        }
    return prod;
}

namespace {

struct ZKey {
    double re, im;
    bool operator<(const ZKey& o) const { return re != o.re ? re < o.re : im < o.im; }
};

class DiscriminantField {
public:
    DiscriminantField(const OperatorFamily& family, int n) : family_(family), n_(n) {}

    Complex operator()(Complex z) {
        const ZKey key{z.real(), z.imag()};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const Complex r = normalized_discriminant(family_, z, n_);
        cache_.emplace(key, r);
        return r;
    }

    /// Phase change of r along the segment a -> b, sampled until consecutive
    /// samples differ by less than pi/4.
    double phase(Complex a, Complex b, int depth = 0) {
        const Complex ra = (*this)(a), rb = (*this)(b);
        check_floor(ra, a);
        check_floor(rb, b);
        const double d = std::arg(rb / ra);
        if (std::abs(d) < std::numbers::pi / 4) {
            // one midpoint confirms the short step did not skip a full turn
            const Complex m = 0.5 * (a + b);
            const Complex rm = (*this)(m);
            check_floor(rm, m);
            const double d1 = std::arg(rm / ra), d2 = std::arg(rb / rm);
            if (std::abs(d1 + d2 - d) < 1e-9) return d;
        }
        if (depth > 24) throw Error(ErrorCode::GridTooCoarse, "phase of r(z) not resolved along a cell edge");
        const Complex m = 0.5 * (a + b);
        return phase(a, m, depth + 1) + phase(m, b, depth + 1);
    }

    int winding(Complex lo, double side) {
        const Complex c[4] = {lo, lo + side, lo + Complex(side, side), lo + Complex(0.0, side)};
        double total = 0.0;
        for (int i = 0; i < 4; ++i) total += phase(c[i], c[(i + 1) % 4]);
        const double w = total / (2.0 * std::numbers::pi);
        const double rounded = std::round(w);
        if (std::abs(w - rounded) > 0.1) throw Error(ErrorCode::GridTooCoarse, "ambiguous winding number");
        return static_cast<int>(rounded);
    }

    double floor = 1e-13;

private:
    void check_floor(Complex r, Complex z) const {
        if (std::abs(r) < floor)
            throw Error(ErrorCode::GridTooCoarse,
                        "a cell edge passes too close to a zero of r at z = " + format_complex(z));
    }

    const OperatorFamily& family_;
    int n_;
    std::map<ZKey, Complex> cache_;
};

struct Cell {
    Complex lo;
    double side;
    int winding;
};

void refine_cell(DiscriminantField& r, const Cell& cell, double min_side, std::vector<Cell>& out) {
    if (cell.side <= min_side) {
        out.push_back(cell);
        return;
    }
    const double h = cell.side / 2;
    int found = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Cell sub{cell.lo + Complex(i * h, j * h), h, 0};
            const int w = r.winding(sub.lo, h);
            if (w != 0) {
                found += w;
                refine_cell(r, {sub.lo, h, w}, min_side, out);
            }
        }
    // zeros sitting on an inner edge are kept at this level
    if (found != cell.winding) out.push_back(cell);
}

} // namespace

BranchPointSet find_branch_points(const OperatorFamily& family, int n, const BranchSearchOptions& options) {
    require_square_diagonal(family);
    if (n < 2) throw Error(ErrorCode::InvalidParameter, "branch points need n >= 2");
    const Regions reg = regions(family, n);
    const double R = reg.R_n;
    const double rho = options.radius > 0.0 ? options.radius : 0.9 * R;
    if (rho >= R) throw Error(ErrorCode::InvalidParameter, "search radius must stay below R_n");
    BranchPointSet set;
    set.n = n;
    set.R_n = R;
    set.search_radius = rho;
    if (rho < 1e-300) return set;

    // every square meeting the disk of radius rho must lie inside |z| < R
    const int needed = static_cast<int>(std::ceil(2.0 * std::sqrt(2.0) * rho / (R - rho))) + 1;
    const int density = std::max({options.grid_density, needed, 1});
    set.grid_density = density;
    const double h = 2.0 * rho / density;
    // an irrational offset keeps the symmetry axes off the cell edges
    const Complex origin(-rho - 0.0131 * h, -rho - 0.0173 * h);
    const int cells = density + 1;

    // columns are scanned by up to `jobs` workers, each with its own cache;
    // hits are merged in column order so the result does not depend on jobs
    std::vector<std::vector<Cell>> column_hits(cells);
    std::vector<std::exception_ptr> column_error(cells);
    std::atomic<int> next{0};
    auto worker = [&] {
        DiscriminantField field(family, n);
        for (int i = next++; i < cells; i = next++) {
            try {
                for (int j = 0; j < cells; ++j) {
                    const Complex lo = origin + Complex(i * h, j * h);
                    const Complex nearest(std::clamp(0.0, lo.real(), lo.real() + h),
                                          std::clamp(0.0, lo.imag(), lo.imag() + h));
                    if (std::abs(nearest) > rho) continue;
                    const double far = std::max({std::abs(lo), std::abs(lo + h), std::abs(lo + Complex(h, h)),
                                                 std::abs(lo + Complex(0.0, h))});
                    if (far >= R) continue;
                    const int w = field.winding(lo, h);
                    if (w != 0) refine_cell(field, {lo, h, w}, h / 16, column_hits[i]);
                }
            } catch (...) {
                column_error[i] = std::current_exception();
            }
        }
    };
    const int jobs = std::clamp(options.jobs, 1, cells);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<Cell> hits;
    for (int i = 0; i < cells; ++i) {
        if (column_error[i]) std::rethrow_exception(column_error[i]);
        hits.insert(hits.end(), column_hits[i].begin(), column_hits[i].end());
    }

    DiscriminantField r(family, n);

    for (const Cell& c : hits) {
        Complex z0 = c.lo + Complex(0.25 * c.side, 0.3 * c.side);
        Complex z1 = c.lo + Complex(0.5 * c.side, 0.5 * c.side);
        Complex r0 = r(z0), r1 = r(z1);
        bool converged = false;
        for (int it = 0; it < 80 && !converged; ++it) {
            if (r1 == r0) break;
            const Complex z2 = z1 - r1 * (z1 - z0) / (r1 - r0);
            if (std::abs(z2) >= R) break;
            z0 = z1;
            r0 = r1;
            z1 = z2;
            r1 = normalized_discriminant(family, z1, n);
            converged = std::abs(z1 - z0) <= options.tol * std::max(1.0, std::abs(z1)) || r1 == Complex(0.0);
        }
        BranchPoint bp;
        bp.z_star = z1;
        bp.multiplicity_hint = c.winding;
        bp.residual = std::abs(r1);
        bp.gap = min_gap(sorted_left(family, z1, n));
        const double slack = 2.0 * c.side;
        const bool inside_cell = z1.real() >= c.lo.real() - slack && z1.real() <= c.lo.real() + c.side + slack &&
                                 z1.imag() >= c.lo.imag() - slack && z1.imag() <= c.lo.imag() + c.side + slack;
        bp.low_confidence = !converged || !inside_cell || std::abs(z1) > 0.98 * rho || c.winding != 1;
        if (std::abs(z1) > rho && !inside_cell) continue;
        bool duplicate = false;
        for (const BranchPoint& other : set.points)
            if (std::abs(other.z_star - z1) < 1e-8 * std::max(1.0, std::abs(z1))) duplicate = true;
        if (duplicate) continue;
        if (options.label_collisions) {
            try {
                std::vector<int> labels(n);
                for (int k = 0; k < n; ++k) labels[k] = k + 1;
                ContinuationOptions opt;
                opt.throw_on_collision = false;
                const auto branches = continue_branches(family, labels, PathInC::segment(0.0, z1 * (1.0 - 1e-3)), opt);
                double best = std::numeric_limits<double>::infinity();
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b) {
                        if (branches[a].status != BranchStatus::Ok || branches[b].status != BranchStatus::Ok) continue;
                        const double g = std::abs(branches[a].final_value() - branches[b].final_value());
                        if (g < best) {
                            best = g;
                            bp.colliding_labels = {a + 1, b + 1};
                        }
                    }
            } catch (const Error&) {
                bp.low_confidence = true;
            }
            if (bp.colliding_labels.first == 0) bp.low_confidence = true;
        }
        set.points.push_back(bp);
    }
    std::sort(set.points.begin(), set.points.end(), [](const BranchPoint& a, const BranchPoint& b) {
        return a.z_star.real() != b.z_star.real() ? a.z_star.real() < b.z_star.real() : a.z_star.imag() < b.z_star.imag();
    });
    return set;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    const size_t n = std::max(a.size(), b.size());
    auto at = [](const std::vector<int>& p, int k) { return k <= static_cast<int>(p.size()) ? p[k - 1] : k; };
    std::vector<int> out(n);
    for (size_t k = 1; k <= n; ++k) out[k - 1] = at(a, at(b, static_cast<int>(k)));
    return out;
}

std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> out(p.size());
    for (size_t k = 0; k < p.size(); ++k) out[p[k] - 1] = static_cast<int>(k) + 1;
    return out;
}

bool is_identity(const std::vector<int>& p) {
    for (size_t k = 0; k < p.size(); ++k)
        if (p[k] != static_cast<int>(k) + 1) return false;
    return true;
}

MonodromyResult monodromy(const OperatorFamily& family, const PathInC& path, int n_max, double tol) {
    if (!path.closed()) throw Error(ErrorCode::InvalidParameter, "monodromy needs a closed path");
    if (path.start() != Complex(0.0)) throw Error(ErrorCode::InvalidParameter, "monodromy paths start at z = 0");
    if (n_max < 1) throw Error(ErrorCode::InvalidParameter, "n_max must be >= 1");
    MonodromyResult out;
    out.path = path;
    const double reach = path.max_abs();
    const double M = family.growth_M(), a = family.growth_alpha();
    // R_k grows with k only for alpha < 1
    if (a < 1.0) {
        const double k = std::pow(8.0 * M * reach, 1.0 / (1.0 - a));
        out.tail_fixed_beyond = std::max(1, static_cast<int>(std::floor(k)) + 1);
        while (out.tail_fixed_beyond > 1 && regions(family, out.tail_fixed_beyond - 1).R_n > reach)
            --out.tail_fixed_beyond;
        while (regions(family, out.tail_fixed_beyond).R_n <= reach) ++out.tail_fixed_beyond;
    } else if (regions(family, 1).R_n > reach && a == 1.0) {
        out.tail_fixed_beyond = 1;
    }
    out.n_max = std::max(n_max, out.tail_fixed_beyond - 1);

    std::vector<int> labels(out.n_max);
    for (int k = 0; k < out.n_max; ++k) labels[k] = k + 1;
    ContinuationOptions opt;
    opt.tol = tol;
    const auto branches = continue_branches(family, labels, path, opt);
    out.permutation.assign(out.n_max, 0);
    std::vector<bool> used(out.n_max + 1, false);
    for (int k = 0; k < out.n_max; ++k) {
        const Complex e = branches[k].final_value();
        out.final_values.push_back(e);
        const int m = static_cast<int>(std::lround(std::sqrt(std::max(e.real(), 1.0))));
        int best = -1;
        for (int cand = std::max(1, m - 1); cand <= m + 1; ++cand)
            if (std::abs(e - family.q(cand)) < 1e-6 * (1.0 + family.q(cand))) best = cand;
        if (best < 1 || best > out.n_max || used[best])
            throw Error(ErrorCode::NoConvergence,
                        "branch " + std::to_string(k + 1) + " did not return to a distinct diagonal value");
        used[best] = true;
        out.permutation[k] = best;
    }
    return out;
}

std::string to_string(Verdict v) {
    return v == Verdict::CertifiedIrreducible ? "certified-irreducible" : "inconclusive";
}

HighFloat a4_tilde(const HighFloat& gamma, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
    auto phi = [&](int m) -> HighFloat {
        if (m < 1) return HighFloat(0);
        auto pw = [&](int j) { return j < 1 ? HighFloat(0) : HighFloat(boost::multiprecision::pow(HighFloat(j), gamma)); };
        const HighFloat mm(m), pl = 2 * mm + 1;
        return pw(m) * pw(m) / (pl * pl * pl) - pw(m) * pw(m + 1) / (pl * pl * (4 * mm + 4)) -
               pw(m - 1) * pw(m) / (4 * mm * pl * pl);
    };
    return phi(n) - phi(n - 1);
}

namespace {

int sign_of(const Coefficient& c) {
    if (const auto* r = std::get_if<Rational>(&c)) return r->sign();
    const HighFloat& v = std::get<HighFloat>(c);
    return v > 0 ? 1 : v < 0 ? -1 : 0;
}

Coefficient add(const Coefficient& a, const Coefficient& b) {
    if (is_exact(a) && is_exact(b)) return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    return HighFloat(to_high(a) + to_high(b));
}

/// Exact equality for rationals; otherwise agreement to 1e-24 of `scale`, the
/// sum of the magnitudes that were added.
bool same_value(const Coefficient& a, const Coefficient& b, const HighFloat& scale) {
    if (is_exact(a) && is_exact(b)) return std::get<Rational>(a) == std::get<Rational>(b);
    return boost::multiprecision::abs(to_high(a) - to_high(b)) <= HighFloat(1e-24) * scale;
}

HighFloat magnitude_sum(const std::vector<Coefficient>& values) {
    HighFloat s = 0;
    for (const Coefficient& v : values) s += boost::multiprecision::abs(to_high(v));
    return s;
}

void assess_pattern(IrreducibilityReport& rep, const std::vector<Coefficient>& values) {
    int pos = 0, neg = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        const int s = sign_of(values[i]);
        rep.values.push_back(to_double(values[i]));
        rep.sign_pattern.push_back(s);
        if (s > 0) ++pos;
        if (s < 0) ++neg;
    }
    const bool no_zero = pos + neg == static_cast<int>(values.size());
    rep.pattern_holds = no_zero && std::min(pos, neg) == 1 && values.size() >= 3;
    if (rep.pattern_holds) {
        const int odd = pos == 1 ? 1 : -1;
        for (size_t i = 0; i < values.size(); ++i)
            if (rep.sign_pattern[i] == odd) rep.exceptional_index = static_cast<int>(i) + 1;
    }
}

} // namespace

IrreducibilityReport irreducibility_certificate(const OperatorFamily& family, int k, int N) {
    if (k != 4 && k != 6) throw Error(ErrorCode::UnsupportedOrder, "irreducibility certificates use k = 4 or 6");
    if (family.kind() != FamilyKind::Power)
        throw Error(ErrorCode::UnsupportedFamily, "irreducibility certificates cover the power family");
    if (N < 3) throw Error(ErrorCode::InvalidParameter, "N must be >= 3");
    IrreducibilityReport rep;
    rep.alpha = family.growth_alpha();
    rep.k_used = k;
    rep.N_checked = N;
    const double a = rep.alpha;
    const std::optional<Rational>& exact = family.exact_alpha();
    const bool half = exact && *exact == Rational(1, 2);

    auto coefficient = [&](int n) -> Coefficient {
        if (k == 4 && n == 2) {
            // b21 starts at n = 3; the telescoped phi_4 covers n = 2
            if (exact && two_alpha_is_integer(a)) {
                const Coefficient p2 = phi_closed(family, 4, 2), p1 = phi_closed(family, 4, 1);
                return Rational(std::get<Rational>(p2) - std::get<Rational>(p1));
            }
            return a4_tilde(exact ? from_rational<HighFloat>(Rational(2 * *exact)) : HighFloat(2.0 * a), 2);
        }
        if (exact) return closed_coefficient(*exact, n, k);
        return closed_coefficient(a, n, k);
    };

    std::vector<Coefficient> values;
    Coefficient sum = Rational(0);
    for (int n = 1; n <= N; ++n) {
        values.push_back(coefficient(n));
        sum = add(sum, values.back());
    }
    assess_pattern(rep, values);

    if (k == 6) {
        if (half) {
            rep.telescoped_sum_check = same_value(sum, psi(N), magnitude_sum(values)) && psi(N) < 0 && psi(N) > psi(N / 2);
            rep.alpha_certified = true;
        } else {
            rep.note = "k = 6 is certified only at alpha = 1/2";
        }
    } else {
        const Coefficient phiN = phi_closed(family, 4, N), phiH = phi_closed(family, 4, std::max(1, N / 2));
        rep.telescoped_sum_check = same_value(sum, phiN, magnitude_sum(values)) && std::abs(to_double(phiN)) < std::abs(to_double(phiH));
        const double upper = (2.0 - std::sqrt(2.0)) / 4.0;
        rep.alpha_certified = (a >= 0.0 && a <= 0.085) || (a >= upper && a < 0.5);
        if (!rep.alpha_certified) rep.note = "alpha outside the certified intervals [0, 0.085] and [(2-sqrt2)/4, 1/2)";
    }
    rep.verdict = rep.pattern_holds && rep.telescoped_sum_check && rep.alpha_certified ? Verdict::CertifiedIrreducible
                                                                                        : Verdict::Inconclusive;
    if (!rep.pattern_holds && rep.note.empty()) rep.note = "sign pattern has no single exception";
    return rep;
}

IrreducibilityReport decreasing_family_certificate(const OperatorFamily& family, int N) {
    require_square_diagonal(family);
    int probe = 200;
    if (family.max_index() > 0) probe = std::min(probe, family.max_index());
    for (int k = 1; k <= probe; ++k) {
        const Complex b = family.b(k), c = family.c(k);
        const bool positive = b.imag() == 0.0 && c.imag() == 0.0 && b.real() > 0.0 && c.real() > 0.0;
        bool decreasing = true;
        if (k > 1) decreasing = b.real() < family.b(k - 1).real() && c.real() < family.c(k - 1).real();
        if (!positive || !decreasing)
            throw Error(ErrorCode::NotMonotone,
                        "b and c must be positive and strictly decreasing; fails at k = " + std::to_string(k));
    }
    if (family.max_index() > 0) N = std::min(N, family.max_index() - 1);
    IrreducibilityReport rep;
    rep.alpha = family.growth_alpha();
    rep.k_used = 2;
    rep.N_checked = N;
    std::vector<Coefficient> values;
    Coefficient prev = Rational(0), solver_sum = Rational(0);
    for (int n = 1; n <= N; ++n) {
        const Coefficient phi = phi_closed(family, 2, n);
        if (is_exact(phi) && is_exact(prev))
            values.push_back(Rational(std::get<Rational>(phi) - std::get<Rational>(prev)));
        else
            values.push_back(HighFloat(to_high(phi) - to_high(prev)));
        prev = phi;
        solver_sum = add(solver_sum, solve_branch_equation(family, n, 1).a[1]);
    }
    assess_pattern(rep, values);
    rep.pattern_holds = rep.pattern_holds && rep.exceptional_index == 1 && rep.sign_pattern[0] < 0;
    rep.telescoped_sum_check = same_value(solver_sum, prev, magnitude_sum(values));
    rep.alpha_certified = rep.alpha < 0.0;
    if (!rep.alpha_certified) rep.note = "the growth certificate needs alpha < 0";
    rep.verdict = rep.pattern_holds && rep.telescoped_sum_check && rep.alpha_certified ? Verdict::CertifiedIrreducible
                                                                                        : Verdict::Inconclusive;
    return rep;
}

} // namespace trispec
