// trispec command-line front end. Every run is described by a RunConfig
// (JSON); flags only fill it in, so --dump-config output replays the run.

#include "trispec/acceptance.hpp"
#include "trispec/asymptotics.hpp"
#include "trispec/io.hpp"
#include "trispec/riemann.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/taylor.hpp"
#include "trispec/trace.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace trispec;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { Int, Double, Complex, String, Flag, IntList };

struct Param {
    const char* name;
    Kind kind;
    const char* fallback; ///< default as text; nullptr means "unset"
    const char* help;
};

const std::map<std::string, std::vector<Param>>& command_params() {
    static const std::map<std::string, std::vector<Param>> table{
        {"spectrum",
         {{"z", Kind::Complex, "0", "pencil parameter"}, {"N", Kind::Int, "16", "truncation size"}}},
        {"branch",
         {{"n", Kind::Int, "1", "branch label"},
          {"z", Kind::Complex, "0", "evaluation point"},
          {"N", Kind::Int, "0", "truncation (0: max(64, 8n))"}}},
        {"taylor",
         {{"n", Kind::Int, "1", "branch label"},
          {"kmax", Kind::Int, "3", "number of even coefficients a_2..a_2kmax"},
          {"z", Kind::Complex, nullptr, "also report the partial sum and tail bound at z"}}},
        {"trace",
         {{"z", Kind::Complex, "0.3", "pencil parameter"},
          {"N", Kind::Int, "100", "number of branches summed"},
          {"p", Kind::Int, "0", "1 subtracts a_2(n) z^2 from each term"}}},
        {"char-poly",
         {{"z", Kind::Complex, "0", "pencil parameter"},
          {"n", Kind::Int, "3", "degree"},
          {"method", Kind::String, "product", "product | newton"}}},
        {"branch-points",
         {{"n", Kind::Int, "2", "window index"},
          {"density", Kind::Int, "26", "grid squares per side"},
          {"radius", Kind::Double, "0", "search radius (0: 0.9 R_n)"}}},
        {"monodromy",
         {{"path", Kind::String, nullptr, "closed path from 0 as a JSON array of complex waypoints"},
          {"center", Kind::Complex, nullptr, "loop centre (used when --path is absent)"},
          {"radius", Kind::Double, "0.1", "loop radius"},
          {"sides", Kind::Int, "64", "polygon sides of the loop"},
          {"n", Kind::Int, "4", "labels to continue (raised to cover the fixed tail)"}}},
        {"irreducibility",
         {{"k", Kind::Int, "4", "coefficient index (4 or 6)"},
          {"N", Kind::Int, "50", "labels checked"},
          {"decreasing", Kind::Flag, "false", "decreasing-couplings certificate instead"}}},
        {"asymptotics",
         {{"kind", Kind::String, "thm4", "thm2 | thm4 | pk | radius | decay"},
          {"z", Kind::Complex, "1", "pencil parameter"},
          {"ns", Kind::IntList, "8,11,16,23,32,45,64", "sample labels"},
          {"k", Kind::Int, "2", "coefficient index for decay (a_2k), upper k for radius"},
          {"terms", Kind::Int, "3", "terms in the P_k fit"}}},
        {"verify",
         {{"criteria", Kind::IntList, "1,2,3,4,5,6,7,8,9,10", "criterion ids"},
          {"quiet", Kind::Flag, "false", "one line per criterion"}}},
    };
    return table;
}

std::string command_summary(const std::string& name) {
    static const std::map<std::string, std::string> text{
        {"spectrum", "eigenvalues of the N x N truncation at z"},
        {"branch", "E_n(z) by the eigensolver"},
        {"taylor", "Taylor coefficients a_2k(n) at z = 0"},
        {"trace", "partial trace sum_{n<=N} (E_n(z) - n^2)"},
        {"char-poly", "characteristic polynomial of the first n branches and its discriminant"},
        {"branch-points", "zeros of the discriminant in the disk of radius R_n"},
        {"monodromy", "permutation of branch labels along a closed loop"},
        {"irreducibility", "sign-pattern irreducibility certificate"},
        {"asymptotics", "residual slope fits, P_k recovery and radius probes"},
        {"verify", "run the acceptance criteria"},
    };
    return text.at(name);
}

Json parse_value(const Param& p, const std::string& text) {
    try {
        switch (p.kind) {
        case Kind::Int: {
            size_t pos = 0;
            const int v = std::stoi(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return v;
        }
        case Kind::Double: {
            size_t pos = 0;
            const double v = std::stod(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return v;
        }
        case Kind::Complex: return to_json(parse_complex(text));
        case Kind::String: return text;
        case Kind::Flag: return text == "true" || text == "1";
        case Kind::IntList: {
            Json list = Json::array();
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) list.push_back(parse_value({p.name, Kind::Int, nullptr, ""}, item));
            return list;
        }
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError(std::string("bad value for --") + p.name + ": '" + text + "'");
    }
    return nullptr;
}

Backend backend_from(const std::string& s) {
    if (s == "auto") return Backend::Auto;
    if (s == "exact") return Backend::Exact;
    if (s == "float") return Backend::Float;
    throw UsageError("precision backend must be auto, exact or float, got '" + s + "'");
}

std::string default_backend() {
    const char* env = std::getenv("TRISPEC_PRECISION");
    if (!env || !*env) return "auto";
    backend_from(env);
    return env;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(what + " is not valid JSON: " + e.what());
    }
}

const Json& param(const Json& config, const char* name) {
    const Json& params = config.at("params");
    if (!params.contains(name) || params.at(name).is_null())
        throw UsageError(std::string("missing parameter --") + name);
    return params.at(name);
}

bool has_param(const Json& config, const char* name) {
    return config.at("params").contains(name) && !config.at("params").at(name).is_null();
}

Complex cparam(const Json& c, const char* name) { return complex_from_json(param(c, name)); }
int iparam(const Json& c, const char* name) { return param(c, name).get<int>(); }

using Table = std::vector<std::vector<std::string>>;

std::string fmt(double v) { return format_double(v); }

struct Outcome {
    Json result;
    Table csv;
    std::string console; ///< printed instead of the JSON when no output path is set
    bool failed = false; ///< verify: some criterion failed
};

Outcome run_spectrum(const OperatorFamily& f, const Json& c) {
    const Complex z = cparam(c, "z");
    const int N = iparam(c, "N");
    if (N < 1) throw Error(ErrorCode::InvalidParameter, "N must be >= 1");
    const Eigen::VectorXcd ev = eigenvalues(f, z, N);
    Outcome o;
    o.result["z"] = to_json(z);
    o.result["N"] = N;
    Json list = Json::array();
    o.csv.push_back({"index", "re", "im"});
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        list.push_back(to_json(ev(i)));
        o.csv.push_back({std::to_string(i + 1), fmt(ev(i).real()), fmt(ev(i).imag())});
    }
    o.result["eigenvalues"] = list;
    return o;
}

Outcome run_branch(const OperatorFamily& f, const Json& c) {
    const int n = iparam(c, "n");
    const Complex z = cparam(c, "z");
    BranchOptions opt;
    opt.N = iparam(c, "N");
    const Complex d = branch_deviation(f, n, z, opt);
    const Complex E = f.q(n) + d;
    Outcome o;
    o.result["n"] = n;
    o.result["z"] = to_json(z);
    o.result["E"] = to_json(E);
    o.result["deviation"] = to_json(d);
    o.csv = {{"n", "z_re", "z_im", "E_re", "E_im", "deviation_re", "deviation_im"},
             {std::to_string(n), fmt(z.real()), fmt(z.imag()), fmt(E.real()), fmt(E.imag()), fmt(d.real()),
              fmt(d.imag())}};
    return o;
}

Outcome run_taylor(const OperatorFamily& f, const Json& c) {
    const TaylorSeries ts = solve_branch_equation(f, iparam(c, "n"), iparam(c, "kmax"),
                                                  backend_from(c.at("precision").at("backend").get<std::string>()));
    Outcome o;
    o.result = to_json(ts);
    o.csv.push_back({"index", "value", "approx"});
    for (int k = 1; k <= ts.k_max; ++k)
        o.csv.push_back({std::to_string(2 * k), to_json(ts.a.at(k)).get<std::string>(), fmt(ts.coefficient(k))});
    if (has_param(c, "z")) {
        const Complex z = cparam(c, "z");
        o.result["z"] = to_json(z);
        o.result["partial_sum"] = to_json(ts.partial_sum(z));
        try {
            o.result["tail_bound"] = tail_bound(ts, z, ts.k_max + 1);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Divergent) throw;
            o.result["tail_bound"] = nullptr;
        }
    }
    return o;
}

Outcome run_trace(const OperatorFamily& f, const Json& c) {
    const TraceReport r = partial_trace(f, cparam(c, "z"), iparam(c, "p"), iparam(c, "N"));
    Outcome o;
    o.result = to_json(r);
    const Complex lim = r.predicted_limit.value_or(Complex(NAN, NAN));
    o.csv = {{"N", "p", "z_re", "z_im", "partial_re", "partial_im", "predicted_re", "predicted_im", "residual_re",
              "residual_im", "rate"},
             {std::to_string(r.N), std::to_string(r.p), fmt(r.z.real()), fmt(r.z.imag()), fmt(r.partial_sum.real()),
              fmt(r.partial_sum.imag()), fmt(lim.real()), fmt(lim.imag()), fmt(r.telescoped_residual.real()),
              fmt(r.telescoped_residual.imag()), fmt(r.convergence_rate_estimate)}};
    return o;
}

Outcome run_char_poly(const OperatorFamily& f, const Json& c) {
    const std::string m = param(c, "method").get<std::string>();
    if (m != "product" && m != "newton") throw UsageError("--method must be product or newton");
    const CharPolyAtZ p =
        char_poly(f, cparam(c, "z"), iparam(c, "n"), m == "product" ? CharPolyMethod::Product : CharPolyMethod::Newton);
    Outcome o;
    o.result = to_json(p);
    o.result["method"] = m;
    o.csv.push_back({"power", "re", "im"});
    for (size_t j = 0; j < p.coeffs.size(); ++j)
        o.csv.push_back({std::to_string(j), fmt(p.coeffs[j].real()), fmt(p.coeffs[j].imag())});
    return o;
}

Outcome run_branch_points(const OperatorFamily& f, const Json& c) {
    BranchSearchOptions opt;
    opt.grid_density = iparam(c, "density");
    opt.radius = param(c, "radius").get<double>();
    opt.tol = c.at("precision").at("tol").get<double>();
    opt.jobs = c.at("jobs").get<int>();
    const BranchPointSet s = find_branch_points(f, iparam(c, "n"), opt);
    Outcome o;
    o.result = to_json(s);
    o.csv.push_back({"z_re", "z_im", "label_a", "label_b", "gap", "residual", "multiplicity", "low_confidence"});
    for (const BranchPoint& p : s.points)
        o.csv.push_back({fmt(p.z_star.real()), fmt(p.z_star.imag()), std::to_string(p.colliding_labels.first),
                         std::to_string(p.colliding_labels.second), fmt(p.gap), fmt(p.residual),
                         std::to_string(p.multiplicity_hint), p.low_confidence ? "true" : "false"});
    return o;
}

Outcome run_monodromy(const OperatorFamily& f, const Json& c) {
    PathInC path;
    if (has_param(c, "path")) {
        const Json pts = parse_json_text(param(c, "path").get<std::string>(), "--path");
        if (!pts.is_array()) throw UsageError("--path must be a JSON array");
        std::vector<Complex> w;
        for (const Json& v : pts) w.push_back(complex_from_json(v));
        path = PathInC(w, w.size() > 1 && w.front() == w.back());
    } else if (has_param(c, "center")) {
        path = PathInC::loop_around(0.0, cparam(c, "center"), param(c, "radius").get<double>(), iparam(c, "sides"));
    } else {
        throw UsageError("monodromy needs --path or --center");
    }
    const MonodromyResult m = monodromy(f, path, iparam(c, "n"), c.at("precision").at("tol").get<double>());
    Outcome o;
    o.result = to_json(m);
    o.csv.push_back({"label", "image", "final_re", "final_im"});
    for (size_t k = 0; k < m.permutation.size(); ++k)
        o.csv.push_back({std::to_string(k + 1), std::to_string(m.permutation[k]), fmt(m.final_values[k].real()),
                         fmt(m.final_values[k].imag())});
    return o;
}

Outcome run_irreducibility(const OperatorFamily& f, const Json& c) {
    const IrreducibilityReport r = param(c, "decreasing").get<bool>()
                                       ? decreasing_family_certificate(f, iparam(c, "N"))
                                       : irreducibility_certificate(f, iparam(c, "k"), iparam(c, "N"));
    Outcome o;
    o.result = to_json(r);
    o.csv.push_back({"n", "value", "sign"});
    for (size_t i = 0; i < r.values.size(); ++i)
        o.csv.push_back({std::to_string(i + 1), fmt(r.values[i]),
                         std::to_string(i < r.sign_pattern.size() ? r.sign_pattern[i] : 0)});
    return o;
}

Outcome run_asymptotics(const OperatorFamily& f, const Json& c) {
    const std::string kind = param(c, "kind").get<std::string>();
    const Complex z = cparam(c, "z");
    const std::vector<int> ns = param(c, "ns").get<std::vector<int>>();
    Outcome o;
    o.result["kind"] = kind;
    auto fit_table = [&](const ResidualFit& fit) {
        o.result["fit"] = to_json(fit);
        o.csv.push_back({"n", "value"});
        for (const auto& [n, r] : fit.samples) o.csv.push_back({std::to_string(n), fmt(r)});
    };
    if (kind == "thm2") {
        if (f.kind() != FamilyKind::Power) throw Error(ErrorCode::UnsupportedFamily, "thm2 needs the power family");
        const double a = f.growth_alpha();
        std::vector<std::pair<int, double>> s;
        for (int n : ns) s.emplace_back(n, thm2_residual(a, z, n));
        fit_table(fit_slope("bracket residual", s, thm2_target_slope(a)));
    } else if (kind == "thm4") {
        std::vector<std::pair<int, double>> s;
        for (int n : ns) s.emplace_back(n, thm4_residual(z, n));
        fit_table(fit_slope("alpha = 1/2 four-term residual", s, -6.0, 0.5));
    } else if (kind == "decay") {
        // the sharp alpha = 1/2 rates where tabulated, else the general O(n^{2k(alpha-1)})
        const int k = iparam(c, "k");
        const double a = f.growth_alpha();
        static const double sharp_half[] = {-2, -4, -8, -10, -14};
        const bool half = f.exact_alpha() && *f.exact_alpha() == Rational(1, 2) && k >= 1 && k <= 5;
        fit_table(coefficient_decay_fit(f, k, ns, half ? sharp_half[k - 1] : 2.0 * k * (a - 1.0), 0.4));
    } else if (kind == "pk") {
        const PkFit fit = pk_expansion_check({z}, ns, iparam(c, "terms")).front();
        o.result["fit"] = to_json(fit);
        o.csv.push_back({"k", "recovered_re", "recovered_im", "expected_re", "expected_im", "relative_error"});
        for (size_t k = 0; k < fit.recovered.size(); ++k)
            o.csv.push_back({std::to_string(k + 1), fmt(fit.recovered[k].real()), fmt(fit.recovered[k].imag()),
                             fmt(fit.expected[k].real()), fmt(fit.expected[k].imag()), fmt(fit.relative_error[k])});
    } else if (kind == "radius") {
        Json probes = Json::array();
        o.csv.push_back({"n", "R_n", "estimate"});
        for (int n : ns) {
            const RadiusProbe p = radius_probe(f, n, 2, std::max(3, iparam(c, "k")));
            probes.push_back(to_json(p));
            o.csv.push_back({std::to_string(n), fmt(p.R_n), fmt(p.estimate)});
        }
        o.result["probes"] = probes;
    } else {
        throw UsageError("--kind must be thm2, thm4, pk, radius or decay");
    }
    return o;
}

Outcome run_verify(const Json& c) {
    AcceptanceOptions opt;
    opt.seed = c.at("seed").get<std::uint64_t>();
    opt.jobs = c.at("jobs").get<int>();
    const bool quiet = param(c, "quiet").get<bool>();
    Outcome o;
    Json list = Json::array();
    std::ostringstream table;
    o.csv.push_back({"id", "title", "pass"});
    for (int id : param(c, "criteria").get<std::vector<int>>()) {
        if (id < 1 || id > kCriterionCount) throw UsageError("criterion ids run from 1 to 10");
        const CriterionResult r = run_criterion(id, opt);
        if (!quiet) std::cerr << format_result(r, false) << std::flush; // progress while later criteria run
        table << format_result(r, !quiet);
        Json j;
        j["id"] = r.id;
        j["title"] = r.title;
        j["pass"] = r.pass;
        Json checks = Json::array();
        for (const CheckLine& line : r.checks) checks.push_back({{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}});
        j["checks"] = checks;
        list.push_back(j);
        o.csv.push_back({std::to_string(r.id), r.title, r.pass ? "true" : "false"});
        o.failed = o.failed || !r.pass;
    }
    o.result["criteria"] = list;
    o.console = table.str();
    return o;
}

std::string csv_text(const Table& t) {
    std::ostringstream os;
    for (const auto& row : t) {
        for (size_t i = 0; i < row.size(); ++i) {
            const std::string& cell = row[i];
            const bool quote = cell.find_first_of(",\"\n") != std::string::npos;
            if (i) os << ',';
            if (quote) {
                os << '"';
                for (char ch : cell) os << (ch == '"' ? "\"\"" : std::string(1, ch));
                os << '"';
            } else {
                os << cell;
            }
        }
        os << '\n';
    }
    return os.str();
}

/// Validates a RunConfig and fills defaults; unknown keys are usage errors.
Json normalize_config(Json c) {
    if (!c.is_object()) throw UsageError("config must be a JSON object");
    for (auto it = c.begin(); it != c.end(); ++it) {
        static const char* keys[] = {"command", "family", "params", "output", "format", "precision", "seed", "jobs"};
        if (std::find(std::begin(keys), std::end(keys), it.key()) == std::end(keys))
            throw UsageError("unknown config field '" + it.key() + "'");
    }
    if (!c.contains("command")) throw UsageError("config has no command");
    const std::string cmd = c.at("command").get<std::string>();
    const auto found = command_params().find(cmd);
    if (found == command_params().end()) throw UsageError("unknown command '" + cmd + "'");
    Json params = c.value("params", Json::object());
    for (auto it = params.begin(); it != params.end(); ++it) {
        bool known = false;
        for (const Param& p : found->second) known = known || it.key() == p.name;
        if (!known) throw UsageError("unknown parameter '" + it.key() + "' for " + cmd);
    }
    Json ordered = Json::object();
    for (const Param& p : found->second) {
        if (params.contains(p.name))
            ordered[p.name] = params.at(p.name);
        else
            ordered[p.name] = p.fallback ? parse_value(p, p.fallback) : Json(nullptr);
    }
    Json out;
    out["command"] = cmd;
    out["family"] = c.value("family", Json(nullptr));
    if (cmd != "verify" && out["family"].is_null())
        out["family"] = Json{{"kind", "power"}, {"alpha", "1/2"}, {"M", 1.0}};
    out["params"] = ordered;
    out["output"] = c.value("output", std::string());
    out["format"] = c.value("format", std::string("json"));
    if (out["format"] != "json" && out["format"] != "csv") throw UsageError("format must be json or csv");
    Json precision = c.value("precision", Json::object());
    Json prec;
    prec["backend"] = precision.value("backend", default_backend());
    backend_from(prec["backend"].get<std::string>());
    prec["tol"] = precision.value("tol", 1e-10);
    out["precision"] = prec;
    out["seed"] = c.value("seed", std::uint64_t{20240611});
    out["jobs"] = c.value("jobs", 1);
    if (out["jobs"].get<int>() < 1) throw UsageError("jobs must be >= 1");
    return out;
}

int execute(const Json& config) {
    const std::string cmd = config.at("command").get<std::string>();
    Outcome o;
    Json family = nullptr;
    if (cmd == "verify") {
        o = run_verify(config);
    } else {
        const OperatorFamily f = family_from_json(config.at("family"));
        if (cmd == "spectrum") o = run_spectrum(f, config);
        else if (cmd == "branch") o = run_branch(f, config);
        else if (cmd == "taylor") o = run_taylor(f, config);
        else if (cmd == "trace") o = run_trace(f, config);
        else if (cmd == "char-poly") o = run_char_poly(f, config);
        else if (cmd == "branch-points") o = run_branch_points(f, config);
        else if (cmd == "monodromy") o = run_monodromy(f, config);
        else if (cmd == "irreducibility") o = run_irreducibility(f, config);
        else if (cmd == "asymptotics") o = run_asymptotics(f, config);
        family = family_to_json(f);
    }
    Json doc;
    doc["config"] = config;
    if (!family.is_null()) doc["family"] = family;
    doc["result"] = o.result;
    const std::string text = config.at("format") == "csv" ? csv_text(o.csv) : doc.dump(2) + "\n";
    const std::string out_path = config.at("output").get<std::string>();
    if (out_path.empty()) {
        std::cout << (o.console.empty() ? text : o.console);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + out_path + "'");
        out << text;
        if (!o.console.empty()) std::cout << o.console;
    }
    return o.failed ? 1 : 0;
}

void print_error(const std::string& code, const std::string& message) {
    Json e;
    e["error"] = {{"code", code}, {"message", message}};
    std::cerr << e.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral analysis of tri-diagonal pencils L + zB"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "trispec 1.0.0");

    struct Common {
        std::string config_path, family, alpha, t, parity, family_json, output, format, precision;
        bool exact = false, use_float = false, dump = false;
        double tol = 0;
        std::uint64_t seed = 0;
        int jobs = 0;
    };
    std::map<std::string, Common> common;
    std::map<std::string, std::map<std::string, std::string>> raw;
    std::map<std::string, std::map<std::string, CLI::Option*>> opts;
    std::map<std::string, std::map<std::string, CLI::Option*>> common_opts;

    for (const auto& [name, params] : command_params()) {
        CLI::App* sub = app.add_subcommand(name, command_summary(name));
        Common& cm = common[name];
        auto& co = common_opts[name];
        co["config"] = sub->add_option("--config", cm.config_path, "RunConfig JSON file");
        co["dump"] = sub->add_flag("--dump-config", cm.dump, "print the resolved RunConfig and exit");
        co["output"] = sub->add_option("-o,--output", cm.output, "output path (default: standard output)");
        co["format"] = sub->add_option("--format", cm.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
        co["seed"] = sub->add_option("--seed", cm.seed, "seed for randomized checks");
        co["jobs"] = sub->add_option("--jobs", cm.jobs, "worker threads for grid scans")->check(CLI::PositiveNumber);
        co["tol"] = sub->add_option("--tol", cm.tol, "numerical tolerance");
        co["precision"] = sub->add_option("--precision", cm.precision, "auto | exact | float (env TRISPEC_PRECISION)")
                              ->check(CLI::IsMember({"auto", "exact", "float"}));
        co["exact"] = sub->add_flag("--exact", cm.exact, "same as --precision exact");
        co["float"] = sub->add_flag("--float", cm.use_float, "same as --precision float");
        if (name != "verify") {
            co["family"] = sub->add_option("--family", cm.family,
                                           "power | mathieu | jaynes-cummings | whittaker-hill");
            co["alpha"] = sub->add_option("--alpha", cm.alpha, "growth exponent, e.g. 1/2");
            co["t"] = sub->add_option("--t", cm.t, "Whittaker-Hill parameter");
            co["parity"] = sub->add_option("--parity", cm.parity, "even | odd");
            co["family-json"] = sub->add_option("--family-json", cm.family_json, "family spec as JSON, or @file");
        }
        for (const Param& p : params) {
            std::string& slot = raw[name][p.name];
            if (p.kind == Kind::Flag)
                opts[name][p.name] = sub->add_flag_function(
                    std::string("--") + p.name, [&slot](std::int64_t) { slot = "true"; }, p.help);
            else
                opts[name][p.name] = sub->add_option(std::string("--") + p.name, slot, p.help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("UsageError", e.what());
        return 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        const Common& cm = common[name];
        auto given = [&](const char* key) { return common_opts[name].count(key) && common_opts[name][key]->count() > 0; };

        Json config = Json::object();
        if (given("config")) config = parse_json_text(read_file(cm.config_path), "--config");
        if (config.contains("command") && config["command"] != name)
            throw UsageError("config is for '" + config["command"].get<std::string>() + "', not '" + name + "'");
        config["command"] = name;

        if (name != "verify") {
            if (given("family-json")) {
                const std::string text = cm.family_json.rfind('@', 0) == 0 ? read_file(cm.family_json.substr(1))
                                                                          : cm.family_json;
                config["family"] = parse_json_text(text, "--family-json");
            } else if (given("family") || given("alpha") || given("t") || given("parity")) {
                Json fam = config.value("family", Json::object());
                if (given("family")) fam = Json{{"kind", cm.family}};
                if (!fam.contains("kind")) fam["kind"] = given("t") ? "whittaker-hill" : "power";
                if (given("alpha")) fam["alpha"] = cm.alpha;
                if (given("t")) fam["t"] = cm.t;
                if (given("parity")) fam["parity"] = cm.parity;
                config["family"] = fam;
            }
        }
        Json& params = config["params"];
        if (!params.is_object()) params = Json::object();
        for (const Param& p : command_params().at(name))
            if (opts[name][p.name]->count() > 0) params[p.name] = parse_value(p, raw[name][p.name]);
        if (given("output")) config["output"] = cm.output;
        if (given("format")) config["format"] = cm.format;
        if (given("seed")) config["seed"] = cm.seed;
        if (given("jobs")) config["jobs"] = cm.jobs;
        if (cm.exact && cm.use_float) throw UsageError("--exact and --float are exclusive");
        if (given("precision") || cm.exact || cm.use_float || given("tol")) {
            Json prec = config.value("precision", Json::object());
            if (given("precision")) prec["backend"] = cm.precision;
            if (cm.exact) prec["backend"] = "exact";
            if (cm.use_float) prec["backend"] = "float";
            if (given("tol")) prec["tol"] = cm.tol;
            config["precision"] = prec;
        }

        const Json resolved = normalize_config(config);
        if (cm.dump) {
            std::cout << resolved.dump(2) << "\n";
            return 0;
        }
        return execute(resolved);
    } catch (const UsageError& e) {
        print_error("UsageError", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        print_error("UsageError", std::string("malformed configuration: ") + e.what());
        return 2;
    } catch (const Error& e) {
        print_error(to_string(e.code()), e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error("InternalError", e.what());
        return 1;
    }
}
