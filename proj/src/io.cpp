#include "trispec/io.hpp"

#include <cmath>

namespace trispec {

namespace {

std::string lower(std::string s) {
    for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (char& ch : s)
        if (ch == '_') ch = '-';
    return s;
}

Parity parity_from_json(const Json& spec) {
    if (!spec.contains("parity")) return Parity::Even;
    const std::string p = lower(spec.at("parity").get<std::string>());
    if (p == "even") return Parity::Even;
    if (p == "odd") return Parity::Odd;
    throw Error(ErrorCode::InvalidParameter, "parity must be even or odd, got '" + p + "'");
}

/// Table entry as a complex value plus its exact form when it is a real rational.
struct Entry {
    Complex value;
    std::optional<Rational> exact;
};

Entry entry_from_json(const Json& v) {
    if (v.is_array()) return {complex_from_json(v), std::nullopt};
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find('i') != std::string::npos) return {parse_complex(s), std::nullopt};
    }
    if (v.is_number_float()) return {v.get<double>(), std::nullopt};
    Rational r = rational_from_json(v);
    return {to_double(r), r};
}

std::vector<Entry> table_from_json(const Json& spec, const char* key) {
    std::vector<Entry> out;
    if (!spec.contains(key)) return out;
    const Json& t = spec.at(key);
    if (!t.is_array()) throw Error(ErrorCode::InvalidParameter, std::string("table '") + key + "' must be an array");
    for (const Json& v : t) out.push_back(entry_from_json(v));
    return out;
}

void check_keys(const Json& spec, std::initializer_list<const char*> allowed) {
    for (auto it = spec.begin(); it != spec.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) throw Error(ErrorCode::InvalidParameter, "unknown family field '" + it.key() + "'");
    }
}

} // namespace

Rational rational_from_json(const Json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_float()) {
        // the shortest decimal of the double, so 0.05 reads as 1/20
        return parse_rational(format_double(value.get<double>()));
    }
    throw Error(ErrorCode::InvalidParameter, "expected a rational, got " + value.dump());
}

Complex complex_from_json(const Json& value) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) return parse_complex(value.get<std::string>());
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number())
        return {value[0].get<double>(), value[1].get<double>()};
    throw Error(ErrorCode::InvalidParameter, "expected a complex number, got " + value.dump());
}

OperatorFamily family_from_json(const Json& spec) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw Error(ErrorCode::InvalidParameter, "family spec must be an object with a 'kind'");
    const std::string kind = lower(spec.at("kind").get<std::string>());
    // M is fixed by the built-in families; a stated M must agree with it
    auto checked = [&](OperatorFamily f) {
        if (spec.contains("M") && spec.at("M").get<double>() != f.growth_M())
            throw Error(ErrorCode::InvalidCertificate, "M = " + spec.at("M").dump() + " does not match the family's M = " +
                                                           format_double(f.growth_M()));
        return f;
    };
    if (kind == "power") {
        check_keys(spec, {"kind", "alpha", "M"});
        if (!spec.contains("alpha")) throw Error(ErrorCode::InvalidParameter, "power family needs alpha");
        return checked(OperatorFamily::power(rational_from_json(spec.at("alpha"))));
    }
    if (kind == "mathieu") {
        check_keys(spec, {"kind", "M"});
        return checked(OperatorFamily::power(Rational(0)));
    }
    if (kind == "jaynes-cummings") {
        check_keys(spec, {"kind", "M"});
        return checked(OperatorFamily::power(Rational(1, 2)));
    }
    if (kind == "whittaker-hill") {
        check_keys(spec, {"kind", "t", "parity", "M"});
        if (!spec.contains("t")) throw Error(ErrorCode::InvalidParameter, "whittaker-hill needs t");
        return checked(OperatorFamily::whittaker_hill(rational_from_json(spec.at("t")), parity_from_json(spec)));
    }
    if (kind == "custom") {
        check_keys(spec, {"kind", "tables", "M", "alpha", "label"});
        if (!spec.contains("tables") || !spec.contains("M") || !spec.contains("alpha"))
            throw Error(ErrorCode::InvalidCertificate, "custom family needs tables, M and alpha");
        const Json& tables = spec.at("tables");
        const auto q = table_from_json(tables, "q");
        const auto b = table_from_json(tables, "b");
        const auto c = table_from_json(tables, "c");
        if (b.empty() || c.empty()) throw Error(ErrorCode::InvalidParameter, "custom tables need b and c");
        CustomSequences seq;
        bool exact = true;
        for (const Entry& e : q) {
            if (e.value.imag() != 0.0) throw Error(ErrorCode::InvalidParameter, "q entries must be real");
            seq.q_table.push_back(e.value.real());
            exact = exact && e.exact.has_value();
        }
        for (const Entry& e : b) {
            seq.b_table.push_back(e.value);
            exact = exact && e.exact.has_value();
        }
        for (const Entry& e : c) {
            seq.c_table.push_back(e.value);
            exact = exact && e.exact.has_value();
        }
        if (exact) {
            for (const Entry& e : q) seq.exact_q_table.push_back(*e.exact);
            for (const Entry& e : b) seq.exact_b_table.push_back(*e.exact);
            for (const Entry& e : c) seq.exact_c_table.push_back(*e.exact);
            std::vector<Rational> ep;
            for (size_t k = 0; k < std::min(b.size(), c.size()); ++k) ep.push_back(*b[k].exact * *c[k].exact);
            if (!q.empty())
                seq.exact_q = [eq = seq.exact_q_table](int k) -> std::optional<Rational> { return eq.at(k - 1); };
            seq.exact_coupling = [ep](int k) -> std::optional<Rational> { return ep.at(k - 1); };
        }
        if (spec.contains("label")) seq.label = spec.at("label").get<std::string>();
        return OperatorFamily::custom(std::move(seq), spec.at("M").get<double>(),
                                      to_double(rational_from_json(spec.at("alpha"))));
    }
    throw Error(ErrorCode::UnsupportedFamily, "unknown family kind '" + kind + "'");
}

Json family_to_json(const OperatorFamily& family) {
    Json j;
    switch (family.kind()) {
    case FamilyKind::Power:
        j["kind"] = "power";
        j["alpha"] = to_string(*family.exact_alpha());
        j["M"] = family.growth_M();
        break;
    case FamilyKind::WhittakerHill:
        j["kind"] = "whittaker-hill";
        j["t"] = to_string(family.t_exact());
        j["parity"] = family.parity() == Parity::Even ? "even" : "odd";
        j["M"] = family.growth_M();
        break;
    case FamilyKind::Custom: {
        const CustomSequences* seq = family.custom_sequences();
        if (seq->q || seq->b || seq->c)
            throw Error(ErrorCode::UnsupportedFamily, "custom families with generator functions are not serializable");
        j["kind"] = "custom";
        if (!seq->label.empty()) j["label"] = seq->label;
        j["M"] = family.growth_M();
        j["alpha"] = family.growth_alpha();
        Json tables;
        auto write = [&](const char* key, const std::vector<Complex>& values, const std::vector<Rational>& exact) {
            if (values.empty()) return;
            Json t = Json::array();
            for (size_t k = 0; k < values.size(); ++k) {
                if (k < exact.size())
                    t.push_back(to_string(exact[k]));
                else if (values[k].imag() == 0.0)
                    t.push_back(values[k].real());
                else
                    t.push_back(to_json(values[k]));
            }
            tables[key] = t;
        };
        std::vector<Complex> q(seq->q_table.begin(), seq->q_table.end());
        write("q", q, seq->exact_q_table);
        write("b", seq->b_table, seq->exact_b_table);
        write("c", seq->c_table, seq->exact_c_table);
        j["tables"] = tables;
        break;
    }
    }
    return j;
}

Json to_json(Complex value) { return Json::array({value.real(), value.imag()}); }

Json to_json(const Coefficient& value) {
    if (const auto* r = std::get_if<Rational>(&value)) return to_string(*r);
    return format_high(std::get<HighFloat>(value));
}

Json to_json(const TaylorSeries& s) {
    Json j;
    j["n"] = s.n;
    j["k_max"] = s.k_max;
    j["exact"] = s.exact;
    j["q_n"] = s.q_n;
    Json coeffs = Json::array();
    for (int k = 1; k <= s.k_max; ++k) {
        Json c;
        c["index"] = 2 * k;
        c["value"] = to_json(s.a.at(k));
        c["approx"] = s.coefficient(k);
        coeffs.push_back(c);
    }
    j["coefficients"] = coeffs;
    return j;
}

Json to_json(const TraceReport& r) {
    Json j;
    j["family"] = r.family;
    j["z"] = to_json(r.z);
    j["p"] = r.p;
    j["N"] = r.N;
    j["N_matrix"] = r.N_matrix;
    j["partial_sum"] = to_json(r.partial_sum);
    j["predicted_limit"] = r.predicted_limit ? to_json(*r.predicted_limit) : Json(nullptr);
    j["telescoped_residual"] = to_json(r.telescoped_residual);
    j["convergence_rate_estimate"] = r.convergence_rate_estimate;
    return j;
}

Json to_json(const CharPolyAtZ& p) {
    Json j;
    j["n"] = p.n;
    j["z"] = to_json(p.z);
    Json c = Json::array(), roots = Json::array();
    for (Complex v : p.coeffs) c.push_back(to_json(v));
    for (Complex v : p.roots) roots.push_back(to_json(v));
    j["coeffs"] = c;
    j["roots"] = roots;
    j["discriminant"] = to_json(p.discriminant_value);
    return j;
}

Json to_json(const BranchPointSet& s) {
    Json j;
    j["n"] = s.n;
    j["R_n"] = s.R_n;
    j["search_radius"] = s.search_radius;
    j["grid_density"] = s.grid_density;
    Json pts = Json::array();
    for (const BranchPoint& p : s.points) {
        Json b;
        b["z_star"] = to_json(p.z_star);
        b["multiplicity_hint"] = p.multiplicity_hint;
        b["colliding_labels"] = Json::array({p.colliding_labels.first, p.colliding_labels.second});
        b["gap"] = p.gap;
        b["residual"] = p.residual;
        b["low_confidence"] = p.low_confidence;
        pts.push_back(b);
    }
    j["points"] = pts;
    return j;
}

Json to_json(const MonodromyResult& m) {
    Json j;
    Json path = Json::array();
    for (Complex w : m.path.waypoints()) path.push_back(to_json(w));
    j["path"] = path;
    j["n_max"] = m.n_max;
    j["permutation"] = m.permutation;
    j["tail_fixed_beyond"] = m.tail_fixed_beyond;
    Json fv = Json::array();
    for (Complex v : m.final_values) fv.push_back(to_json(v));
    j["final_values"] = fv;
    return j;
}

Json to_json(const IrreducibilityReport& r) {
    Json j;
    j["alpha"] = r.alpha;
    j["k_used"] = r.k_used;
    j["N_checked"] = r.N_checked;
    j["values"] = r.values;
    j["sign_pattern"] = r.sign_pattern;
    j["exceptional_index"] = r.exceptional_index;
    j["pattern_holds"] = r.pattern_holds;
    j["telescoped_sum_check"] = r.telescoped_sum_check;
    j["alpha_certified"] = r.alpha_certified;
    j["verdict"] = to_string(r.verdict);
    j["note"] = r.note;
    return j;
}

Json to_json(const ResidualFit& f) {
    Json j;
    j["description"] = f.description;
    Json s = Json::array();
    for (const auto& [n, r] : f.samples) s.push_back(Json::array({n, r}));
    j["samples"] = s;
    j["fitted_slope"] = f.fitted_slope;
    j["fitted_intercept"] = f.fitted_intercept;
    j["target_slope"] = f.target_slope;
    j["slope_tol"] = f.slope_tol;
    j["pass"] = f.pass;
    return j;
}

Json to_json(const PkFit& f) {
    Json j;
    j["z"] = to_json(f.z);
    j["terms"] = f.terms;
    j["ns"] = f.ns;
    Json rec = Json::array(), exp = Json::array();
    for (Complex v : f.recovered) rec.push_back(to_json(v));
    for (Complex v : f.expected) exp.push_back(to_json(v));
    j["recovered"] = rec;
    j["expected"] = exp;
    j["relative_error"] = f.relative_error;
    j["condition"] = f.condition;
    j["pass"] = f.pass;
    return j;
}

Json to_json(const RadiusProbe& p) {
    Json j;
    j["n"] = p.n;
    j["R_n"] = p.R_n;
    Json rt = Json::array();
    for (const auto& [k, r] : p.root_test) rt.push_back(Json::array({k, r}));
    j["root_test"] = rt;
    j["estimate"] = p.estimate;
    return j;
}

} // namespace trispec
