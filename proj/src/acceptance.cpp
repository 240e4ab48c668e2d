#include "trispec/acceptance.hpp"

#include "trispec/asymptotics.hpp"
#include "trispec/closed_forms.hpp"
#include "trispec/regions.hpp"
#include "trispec/riemann.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/taylor.hpp"
#include "trispec/trace.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace trispec {

namespace {

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : r_(r) {}

    bool check(std::string name, bool pass, std::string detail = {}) {
        r_.checks.push_back({std::move(name), pass, std::move(detail)});
        return pass;
    }

private:
    CriterionResult& r_;
};

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

std::string fixed(double v, int digits = 4) {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << v;
    return os.str();
}

Rational psi_literal(int n) {
    Rational d = Rational(2 * n - 1) * (2 * n + 3);
    for (int i = 0; i < 5; ++i) d *= 2 * n + 1;
    return Rational(-1) / d;
}

// Exact fixtures.
void criterion1(Recorder& rec) {
    const OperatorFamily f = OperatorFamily::power(Rational(1, 2));
    const TaylorSeries ts = solve_branch_equation(f, 1, 3, Backend::Exact);
    const Rational expected[3] = {Rational(-1, 3), Rational(1, 108), Rational(-1, 1215)};
    for (int k = 1; k <= 3; ++k) {
        const Rational& got = ts.exact_coefficient(k);
        rec.check("a_" + std::to_string(2 * k) + "(1/2, 1) = " + to_string(expected[k - 1]), got == expected[k - 1],
                  "got " + to_string(got));
    }
    int bad = 0, first_bad = 0;
    for (int n = 2; n <= 50; ++n) {
        const Rational a6 = solve_branch_equation(f, n, 3, Backend::Exact).exact_coefficient(3);
        if (a6 != psi_literal(n) - psi_literal(n - 1)) {
            if (!bad) first_bad = n;
            ++bad;
        }
    }
    rec.check("a_6(1/2, n) = psi(n) - psi(n-1), n = 2..50", bad == 0,
              bad ? std::to_string(bad) + " mismatches, first at n = " + std::to_string(first_bad) : "49 exact matches");
}

// Walk-sum solver against the closed forms, and odd orders.
void criterion2(Recorder& rec) {
    for (const Rational& alpha : {Rational(0), Rational(1, 2)}) {
        const OperatorFamily f = OperatorFamily::power(alpha);
        std::vector<TaylorSeries> solved;
        for (int n = 1; n <= 20; ++n) solved.push_back(solve_branch_equation(f, n, 5, Backend::Exact));
        for (int k = 2; k <= 6; k += 2) {
            const int floor = closed_form_floor(k, false, ClosedForm::General);
            int compared = 0, bad = 0;
            for (int n = floor; n <= 20; ++n) {
                const Coefficient c = closed_coefficient(alpha, n, k, ClosedForm::General);
                ++compared;
                if (!is_exact(c) || std::get<Rational>(c) != solved[n - 1].exact_coefficient(k / 2)) ++bad;
            }
            rec.check("general a_" + std::to_string(k) + ", alpha = " + to_string(alpha) + ", n = " +
                          std::to_string(floor) + "..20",
                      bad == 0, std::to_string(compared - bad) + "/" + std::to_string(compared) + " exact");
        }
        if (alpha == Rational(1, 2)) {
            for (int k = 2; k <= 10; k += 2) {
                int bad = 0;
                for (int n = 4; n <= 12; ++n) {
                    const Coefficient c = closed_coefficient(alpha, n, k, ClosedForm::HalfSpecial);
                    if (!is_exact(c) || std::get<Rational>(c) != solved[n - 1].exact_coefficient(k / 2)) ++bad;
                }
                rec.check("alpha = 1/2 special a_" + std::to_string(k) + ", n = 4..12", bad == 0,
                          std::to_string(9 - bad) + "/9 exact");
            }
        }
        int nonzero = 0, checked = 0;
        for (int n = 1; n <= 12; ++n) {
            const auto state = solve_branch_state<Rational>(f, n, 10, false);
            for (int m = 1; m <= 10; m += 2) {
                ++checked;
                if (state.zeta.at(m) != 0) ++nonzero;
            }
        }
        rec.check("odd coefficients without the evenness shortcut, alpha = " + to_string(alpha), nonzero == 0,
                  std::to_string(checked) + " odd orders, " + std::to_string(nonzero) + " nonzero");
    }
}

// Eigensolver against the truncated series.
void criterion3(Recorder& rec) {
    const OperatorFamily f = OperatorFamily::power(Rational(1, 2));
    const Complex z = 0.5;
    for (int n : {5, 10, 20}) {
        const TaylorSeries ts = solve_branch_equation(f, n, 5);
        BranchOptions opt;
        opt.N = 400;
        const Complex E = f.q(n) + branch_deviation(f, n, z, opt);
        const double diff = std::abs(E - ts.partial_sum(z, 5));
        double bound = std::numeric_limits<double>::infinity();
        std::string note;
        try {
            bound = tail_bound(ts, z, 6);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Divergent) throw;
            note = " (bound infinite: |z| >= R_n = " + fixed(regions(f, n).R_n) + ")";
        }
        rec.check("n = " + std::to_string(n) + ": |E_n - S_5| <= tail_bound", diff <= bound,
                  "diff " + sci(diff) + ", bound " + sci(bound) + note);
    }
}

// Partial traces.
void criterion4(Recorder& rec) {
    const Complex z = 0.3;
    const OperatorFamily half = OperatorFamily::power(Rational(1, 2));
    double defect[3];
    const int Ns[3] = {50, 100, 200};
    Complex last = 0.0;
    for (int i = 0; i < 3; ++i) {
        const TraceReport r = partial_trace(half, z, 0, Ns[i]);
        defect[i] = std::abs(r.telescoped_residual);
        last = r.partial_sum;
    }
    for (int i = 0; i + 1 < 3; ++i) {
        const double ratio = defect[i] / defect[i + 1];
        rec.check("telescoped defect shrinks >= 2x from N = " + std::to_string(Ns[i]) + " to " + std::to_string(Ns[i + 1]),
                  ratio >= 2.0, sci(defect[i]) + " -> " + sci(defect[i + 1]) + " (x" + fixed(ratio, 1) + ")");
    }
    const double target = -0.09 * 200.0 / 401.0;
    const double off = std::abs(last - target);
    rec.check("partial_trace(200) within 2e-3 of -z^2 200/401", off <= 2e-3,
              "sum " + format_double(last.real()) + ", off by " + sci(off));
    const TraceReport r3 = partial_trace(OperatorFamily::power(Rational(3, 10)), z, 0, 200);
    rec.check("alpha = 0.3: |partial_trace(200)| <= 1e-2", std::abs(r3.partial_sum) <= 1e-2,
              "|sum| = " + sci(std::abs(r3.partial_sum)));
}

// Slopes of the residuals in n.
void criterion5(Recorder& rec) {
    std::vector<std::pair<int, double>> s4, s2;
    for (int n : kSlopeGrid) {
        s4.emplace_back(n, thm4_residual(1.0, n));
        s2.emplace_back(n, thm2_residual(0.0, 1.0, n));
    }
    const ResidualFit f4 = fit_slope("alpha = 1/2 four-term residual", s4, -6.0, 0.5);
    rec.check("alpha = 1/2 residual slope in [-6.5, -5.5]", f4.pass, "slope " + fixed(f4.fitted_slope, 3));
    const ResidualFit f2 = fit_slope("alpha = 0 bracket residual", s2, -5.0, 0.35);
    rec.check("alpha = 0 bracket residual slope in [-5.35, -4.65]", f2.pass, "slope " + fixed(f2.fitted_slope, 3));
}

// P_k recovery.
void criterion6(Recorder& rec) {
    std::vector<int> ns;
    for (int n = 16; n <= 64; n += 4) ns.push_back(n);
    const PkFit fit = pk_expansion_check({Complex(1.0)}, ns, 3, 0.02).front();
    const char* names[3] = {"P_1(1) = -1/4", "P_2(1) = -5/32", "P_3(1) = -3/32"};
    for (int k = 0; k < 3; ++k)
        rec.check(std::string(names[k]) + " within 2%", fit.relative_error[k] <= 0.02,
                  "recovered " + format_double(fit.recovered[k].real()) + ", rel err " + sci(fit.relative_error[k]));
}

// Localization on random z in Delta_n.
void criterion7(Recorder& rec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const Rational& alpha : {Rational(0), Rational(1, 2)}) {
        const OperatorFamily f = OperatorFamily::power(alpha);
        for (int n : {3, 5, 8}) {
            const double R = regions(f, n).R_n;
            int window_bad = 0, disk_bad = 0;
            double worst_even = 0.0;
            for (int s = 0; s < 20; ++s) {
                const Complex z = std::polar(R * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
                if (window_eigenvalues(f, z, n).size() != n) ++window_bad;
                const Eigen::VectorXcd plus = eigenvalues(f, z, 96);
                for (int m = n + 1; m <= 32; ++m) {
                    const Regions reg = regions(f, m);
                    int inside = 0;
                    for (Eigen::Index i = 0; i < plus.size(); ++i)
                        if (region_contains(reg, plus(i), Region::K)) ++inside;
                    if (inside != 1) ++disk_bad;
                }
                worst_even = std::max(worst_even, multiset_matching_distance(plus, eigenvalues(f, -z, 96)));
            }
            const std::string tag = "alpha = " + to_string(alpha) + ", n = " + std::to_string(n);
            rec.check(tag + ": window count = n", window_bad == 0, std::to_string(20 - window_bad) + "/20");
            rec.check(tag + ": one eigenvalue per K_m, m = n+1..32", disk_bad == 0,
                      std::to_string(disk_bad) + " failing (z, m) pairs");
            rec.check(tag + ": Sp(L+zB) = Sp(L-zB) to 1e-10", worst_even <= 1e-10, "max distance " + sci(worst_even));
        }
    }
}

double segment_distance(Complex p, Complex a, Complex b) {
    const Complex d = b - a;
    const double t = std::clamp(((p - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

double path_distance(const PathInC& path, Complex p) {
    const auto& w = path.waypoints();
    double best = std::abs(p - w.front());
    for (size_t i = 0; i + 1 < w.size(); ++i) best = std::min(best, segment_distance(p, w[i], w[i + 1]));
    return best;
}

// Largest deviation of the continued partial sum from its start value along
// the loop, and from the directly computed window sum at the sample points.
double single_valuedness_defect(const OperatorFamily& f, const PathInC& loop, int n) {
    std::vector<int> labels(n);
    for (int k = 0; k < n; ++k) labels[k] = k + 1;
    const auto branches = continue_branches(f, labels, loop);
    Complex start = 0.0;
    for (int k = 1; k <= n; ++k) start += f.q(k);
    Complex end = 0.0;
    for (const auto& b : branches) end += b.final_value();
    double worst = std::abs(end - start);
    const size_t samples = branches.front().samples.size();
    const size_t stride = std::max<size_t>(1, samples / 4);
    for (size_t s = stride; s < samples; s += stride) {
        const Complex z = branches.front().samples[s].first;
        Complex continued = 0.0;
        for (const auto& b : branches) continued += b.samples[s].second;
        const Complex direct = power_sum_sigma(f, z, 1, n, SigmaMethod::Contour, 1e-12);
        worst = std::max(worst, std::abs(continued - direct));
    }
    return worst;
}

// Branch points and monodromy for alpha = 0.
void criterion8(Recorder& rec, const AcceptanceOptions& options) {
    const OperatorFamily f = OperatorFamily::power(Rational(0));
    BranchSearchOptions search;
    search.jobs = options.jobs;
    const BranchPointSet two = find_branch_points(f, 2, search);
    rec.check("n = 2: branch point set in Delta_2 is nonempty", !two.points.empty(),
              std::to_string(two.points.size()) + " points for |z| <= " + fixed(two.search_radius) + " (R_2 = " +
                  fixed(two.R_n) + ")");

    // The remaining properties are exercised where Sigma_n is nonempty.
    const int n = 16;
    const BranchPointSet set = find_branch_points(f, n, search);
    if (!rec.check("n = 16: branch point set nonempty", !set.points.empty(),
                   std::to_string(set.points.size()) + " points for |z| <= " + fixed(set.search_radius)))
        return;
    const double tol = 1e-6;
    auto member = [&](Complex w) {
        for (const BranchPoint& p : set.points)
            if (std::abs(p.z_star - w) <= tol * std::max(1.0, std::abs(w))) return true;
        return false;
    };
    bool symmetric = true;
    double worst_gap = 0.0;
    for (const BranchPoint& p : set.points) {
        symmetric = symmetric && member(-p.z_star) && member(std::conj(p.z_star));
        worst_gap = std::max(worst_gap, p.gap);
    }
    rec.check("n = 16: set closed under z -> -z and z -> conj(z)", symmetric);
    rec.check("n = 16: eigenvalue gap < 1e-6 at every z_star", worst_gap < 1e-6, "largest gap " + sci(worst_gap));

    double worst_sv = 0.0;
    const BranchPoint& bp = set.points.front();
    double spacing = std::numeric_limits<double>::infinity();
    for (const BranchPoint& p : set.points)
        if (&p != &bp) spacing = std::min(spacing, std::abs(p.z_star - bp.z_star));
    const double small = std::min(0.05, 0.25 * spacing);
    const PathInC around = PathInC::loop_around(0.0, bp.z_star, small);
    const MonodromyResult m = monodromy(f, around, n);
    std::vector<int> expected(m.permutation.size());
    for (size_t k = 0; k < expected.size(); ++k) expected[k] = static_cast<int>(k) + 1;
    const auto [a, b] = bp.colliding_labels;
    if (a > 0 && b > 0) std::swap(expected[a - 1], expected[b - 1]);
    rec.check("small loop around " + format_complex(bp.z_star) + " swaps labels " + std::to_string(a) + ", " +
                  std::to_string(b),
              a > 0 && m.permutation == expected);
    worst_sv = std::max(worst_sv, single_valuedness_defect(f, around, n));

    const PathInC empty_loop = PathInC::loop_around(0.0, 0.9, 0.3);
    const MonodromyResult id = monodromy(f, empty_loop, n);
    rec.check("loop enclosing no branch point gives the identity", is_identity(id.permutation));
    worst_sv = std::max(worst_sv, single_valuedness_defect(f, empty_loop, n));

    // random loops; about half are centred near a branch point
    std::mt19937_64 rng(options.seed + 8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    // loops stay inside Delta_16, where no label above 16 takes part in a collision
    const double reach = 0.97 * set.R_n;
    auto random_loop = [&]() {
        for (;;) {
            Complex c;
            double r;
            if (u(rng) < 0.5) {
                const Complex z = set.points[static_cast<size_t>(u(rng) * set.points.size()) % set.points.size()].z_star;
                c = z + std::polar(0.04 * u(rng), 2.0 * std::numbers::pi * u(rng));
                r = 0.08 + 0.07 * u(rng);
            } else {
                c = std::polar(reach * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
                r = 0.05 + 0.45 * u(rng);
            }
            if (std::abs(c) + r > reach || std::abs(c) <= r) continue;
            PathInC loop = PathInC::loop_around(0.0, c, r, 48);
            bool clear = true;
            for (const BranchPoint& p : set.points) clear = clear && path_distance(loop, p.z_star) > 0.05;
            if (clear) return loop;
        }
    };
    int law_bad = 0, nontrivial = 0;
    for (int pair = 0; pair < 5; ++pair) {
        const PathInC l1 = random_loop(), l2 = random_loop();
        const auto p1 = monodromy(f, l1, n).permutation;
        const auto p2 = monodromy(f, l2, n).permutation;
        const auto p12 = monodromy(f, l1.then(l2), n).permutation;
        const auto p1inv = monodromy(f, l1.reversed(), n).permutation;
        if (p12 != compose(p2, p1) || p1inv != inverse(p1)) ++law_bad;
        if (!is_identity(p1) || !is_identity(p2)) ++nontrivial;
        worst_sv = std::max({worst_sv, single_valuedness_defect(f, l1, n), single_valuedness_defect(f, l2, n)});
    }
    rec.check("composition and inversion laws on 5 random loop pairs", law_bad == 0,
              std::to_string(5 - law_bad) + "/5 pairs, " + std::to_string(nontrivial) + " with a nontrivial loop");
    rec.check("partial sums single-valued along every loop to 1e-8", worst_sv <= 1e-8, "max defect " + sci(worst_sv));
}

// Irreducibility certificates.
void criterion9(Recorder& rec) {
    const IrreducibilityReport six = irreducibility_certificate(OperatorFamily::power(Rational(1, 2)), 6, 200);
    rec.check("alpha = 1/2, k = 6, N = 200: certified with one negative sign",
              six.verdict == Verdict::CertifiedIrreducible && six.pattern_holds && six.exceptional_index == 1 &&
                  six.values.at(0) < 0.0,
              to_string(six.verdict) + ", exceptional n = " + std::to_string(six.exceptional_index));
    int grid_bad = 0;
    for (int i = 0; i <= 20; ++i) {
        const HighFloat gamma = HighFloat(i) / 20;
        if (!(a4_tilde(gamma, 1) > 0) || !(a4_tilde(gamma, 2) < 0)) ++grid_bad;
    }
    rec.check("a~_4(gamma, 1) > 0 > a~_4(gamma, 2) on gamma = 0, 0.05, ..., 1", grid_bad == 0,
              std::to_string(21 - grid_bad) + "/21 grid points");
    struct Case {
        Rational alpha;
        Verdict expected;
    };
    for (const Case& c : {Case{Rational(1, 20), Verdict::CertifiedIrreducible},
                          Case{Rational(1, 5), Verdict::CertifiedIrreducible},
                          Case{Rational(3, 25), Verdict::Inconclusive}}) {
        const IrreducibilityReport r = irreducibility_certificate(OperatorFamily::power(c.alpha), 4);
        rec.check("alpha = " + format_double(to_double(c.alpha)) + ": " + to_string(c.expected), r.verdict == c.expected,
                  to_string(r.verdict));
    }
}

// A-priori coefficient bounds.
void criterion10(Recorder& rec) {
    for (const Rational& alpha : {Rational(0), Rational(1, 2)}) {
        const OperatorFamily f = OperatorFamily::power(alpha);
        int bad = 0;
        double worst = 0.0;
        for (int n = 1; n <= 20; ++n) {
            const TaylorSeries ts = solve_branch_equation(f, n, 5);
            for (int k = 1; k <= 5; ++k) {
                const auto [contour, walk] = coefficient_bounds(f, n, 2 * k);
                const double a = std::abs(ts.coefficient(k));
                if (!(a <= contour && a <= walk)) ++bad;
                worst = std::max(worst, a / std::min(contour, walk));
            }
        }
        rec.check("alpha = " + to_string(alpha) + ": |a_2k(n)| within both bounds, n <= 20, k <= 5", bad == 0,
                  std::to_string(bad) + " violations, largest ratio " + sci(worst));
    }
}

struct Spec {
    const char* title;
    double budget;
};

constexpr Spec kSpecs[kCriterionCount] = {
    {"exact fixtures", 5},
    {"oracle equivalence", 60},
    {"eigensolver/series cross-check", 120},
    {"trace at desk scale", 300},
    {"residual slopes", 300},
    {"P_k recovery", 120},
    {"localization properties", 120},
    {"spectral Riemann surface properties", 600},
    {"irreducibility certificates", 60},
    {"bound compliance", 60},
};

} // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
    if (id < 1 || id > kCriterionCount)
        throw Error(ErrorCode::InvalidParameter, "criterion id must be in 1.." + std::to_string(kCriterionCount));
    CriterionResult result;
    result.id = id;
    result.title = kSpecs[id - 1].title;
    result.budget_seconds = kSpecs[id - 1].budget;
    Recorder rec(result);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (id) {
        case 1: criterion1(rec); break;
        case 2: criterion2(rec); break;
        case 3: criterion3(rec); break;
        case 4: criterion4(rec); break;
        case 5: criterion5(rec); break;
        case 6: criterion6(rec); break;
        case 7: criterion7(rec, options.seed); break;
        case 8: criterion8(rec, options); break;
        case 9: criterion9(rec); break;
        case 10: criterion10(rec); break;
        }
    } catch (const std::exception& e) {
        rec.check("completed without error", false, e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool all = !result.checks.empty();
    for (const CheckLine& c : result.checks) all = all && c.pass;
    const bool in_time = result.seconds <= result.budget_seconds;
    if (!in_time) rec.check("runtime within budget", false, fixed(result.seconds, 1) + " s");
    result.pass = all && in_time;
    return result;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, const AcceptanceOptions& options) {
    std::vector<CriterionResult> out;
    for (int id : ids) out.push_back(run_criterion(id, options));
    return out;
}

std::string format_result(const CriterionResult& r, bool verbose) {
    std::ostringstream os;
    os << "C" << r.id << (r.id < 10 ? "  " : " ") << (r.pass ? "PASS" : "FAIL") << "  " << fixed(r.seconds, 1) << "s/"
       << r.budget_seconds << "s  " << r.title << "\n";
    if (verbose)
        for (const CheckLine& c : r.checks)
            os << "      [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
               << "\n";
    return os.str();
}

} // namespace trispec
