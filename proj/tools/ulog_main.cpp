// ulog: command-line front end for the series and identity checks.

#include "ulog/diffop.hpp"
#include "ulog/family_spec.hpp"
#include "ulog/ncpoly.hpp"
#include "ulog/report.hpp"
#include "ulog/sheffer.hpp"
#include "ulog/stirling.hpp"
#include "ulog/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ulog;

namespace {

struct Settings {
    std::string f = "exp1";
    int order = 10;
    std::optional<int> depth;
    bool json = false;
    std::string out;
    std::string config;
    bool order_given = false;
};

// Line and column of a byte offset, both 1-based.
std::pair<int, int> position(const std::string& text, std::size_t offset) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// Flags given on the command line win over the config file.
void apply_config(Settings& s, const CLI::App& app) {
    std::ifstream in(s.config);
    if (!in) throw std::runtime_error("cannot open config file " + s.config);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        const auto [line, column] = position(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        const auto colon = what.find(": ", what.find("column"));
        if (colon != std::string::npos) what = what.substr(colon + 2);
        throw ParseError("config: " + what, line, column);
    }
    if (!j.is_object()) throw ParseError("config: expected an object", 1, 1);
    auto given = [&](const char* flag) { return app.count(flag) > 0; };
    for (const auto& [key, value] : j.items()) {
        if (key == "f") {
            if (!given("--f")) s.f = value.get<std::string>();
        } else if (key == "order") {
            if (!given("--order")) {
                s.order = value.get<int>();
                s.order_given = true;
            }
        } else if (key == "depth") {
            if (!given("--depth")) s.depth = value.get<int>();
        } else if (key == "json") {
            if (!given("--json")) s.json = value.get<bool>();
        } else if (key == "out") {
            if (!given("--out")) s.out = value.get<std::string>();
        } else {
            const auto at = text.find("\"" + key + "\"");
            const auto [line, column] = position(text, at == std::string::npos ? 0 : at);
            throw ParseError("config: unknown key '" + key + "'", line, column);
        }
    }
}

FamilySpec spec_of(const Settings& s) {
    try {
        return parse_family_spec(s.f);
    } catch (const ParseError& e) {
        throw ParseError("--f: " + e.detail(), e.line(), e.column());
    }
}

std::string series_text(const QSeries& u) { return u.to_string(12); }

// Parses "[c0, c1, ...]" as a plain coefficient list (constant term included).
QSeries coefficient_list(const std::string& text, int order) {
    std::string t = text;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError("expected [c0, c1, ...]", 1, 1);
    std::vector<Rational> c;
    std::size_t start = 1;
    while (start < t.size() - 1) {
        std::size_t end = t.find(',', start);
        if (end == std::string::npos) end = t.size() - 1;
        try {
            c.push_back(parse_rational(t.substr(start, end - start)));
        } catch (const ParseError&) {
            throw ParseError("malformed coefficient", 1, static_cast<int>(start) + 1);
        }
        start = end + 1;
    }
    return QSeries(c, kExact).truncated(order);
}

struct Output {
    Json json = Json::object();
    std::string text;
};

Output cmd_pseq(const Settings& s) {
    const FamilySpec spec = spec_of(s);
    const PSequence seq = p_seq(make_family(spec, s.order), s.order);
    Output o;
    o.json["family"] = spec.to_string();
    Json rows = Json::array();
    for (std::size_t n = 0; n < seq.polys.size(); ++n) {
        rows.push_back(series_json(seq.polys[n]));
        o.text += "p_" + std::to_string(n) + "(a) = " + seq.polys[n].to_string(s.order + 1) + "\n";
    }
    o.json["p"] = rows;
    return o;
}

Output cmd_omega(const Settings& s) {
    const FamilySpec spec = spec_of(s);
    const BinomialFamily fam = make_family(spec, s.order);
    Output o;
    o.json["family"] = spec.to_string();
    for (const auto& [name, u] : {std::pair{"f", fam.f}, {"phi", fam.phi}, {"tau_f", fam.tau_f}, {"omega", fam.omega}}) {
        o.json[name] = series_json(u);
        o.text += std::string(name) + " = " + series_text(u) + "\n";
    }
    return o;
}

Output cmd_q(const Settings& s) {
    const FamilySpec spec = spec_of(s);
    const int depth = s.depth.value_or(4);
    const std::vector<ParamPoly> q = q_at_zero(make_family(spec, std::max(s.order, depth + 1)), depth);
    Output o;
    o.json["family"] = spec.to_string();
    Json rows = Json::array();
    for (std::size_t n = 0; n < q.size(); ++n) {
        rows.push_back(param_poly_json(q[n]));
        o.text += "q_" + std::to_string(n) + "(s) = " + q[n].to_string() + "\n";
    }
    o.json["q"] = rows;
    return o;
}

Output cmd_tn(const Settings& s) {
    const FamilySpec spec = spec_of(s);
    const int depth = s.depth.value_or(2);
    const BinomialFamily fam = make_family(spec, std::max(s.order, 2 * depth + 2));
    Output o;
    o.json["family"] = spec.to_string();
    Json rows = Json::array();
    for (int n = 0; n <= depth; ++n) {
        const std::vector<NCPoly> alphas = shape_coefficients(nu_power(n));
        const DiffOperator op = build_Tn(fam, n);
        Json words = Json::array();
        for (const auto& w : alphas) words.push_back(w.to_string());
        Json coeffs = Json::array();
        for (const auto& c : op.coeffs) coeffs.push_back(series_json(c));
        rows.push_back({{"n", n}, {"alpha", words}, {"operator", coeffs}});
        o.text += "T_" + std::to_string(n) + ":\n";
        for (std::size_t i = 0; i < alphas.size(); ++i)
            o.text += "  alpha_" + std::to_string(i) + " = " + alphas[i].to_string() + "\n";
        std::string op_text = op.to_string(4);
        for (std::size_t at = op_text.find('\n'); at != std::string::npos; at = op_text.find('\n', at + 5))
            op_text.replace(at, 1, "\n  + ");
        o.text += "  = " + op_text + "\n";
    }
    o.json["T"] = rows;
    return o;
}

Output cmd_stirling(const Settings& s) {
    const FamilySpec spec = spec_of(s);
    const int depth = s.depth.value_or(3);
    const StirlingExpansion ex = stirling_terms(make_family(spec, std::max(s.order, 2 * depth + 6)), depth);
    Output o;
    o.json["family"] = spec.to_string();
    o.json["integral_term"] = series_json(ex.integral_term);
    Json g = Json::array();
    o.text = "ln p_s(s/a) ~ s ln(s/a) + sum_k s^(2-k) g_k(a)\n";
    for (int k = 1; k <= ex.max_k(); ++k) {
        g.push_back(series_json(ex.term(k)));
        o.text += "g_" + std::to_string(k) + " = " + series_text(ex.term(k)) + "\n";
    }
    o.json["g"] = g;
    return o;
}

Output cmd_limits(const Settings& s, const std::string& alpha_text, int n_min, int n_max, int step) {
    const FamilySpec spec = spec_of(s);
    const Rational alpha = parse_rational(alpha_text);
    const BinomialFamily fam = make_family(spec, std::max(s.order, 90));
    Output o;
    o.json["family"] = spec.to_string();
    o.json["alpha"] = rational_json(alpha);
    Json all = Json::array();
    auto emit = [&](const LimitReport& l) {
        Json samples = Json::array();
        o.text += l.quantity + " -> " + l.target_text + " = " + to_decimal(l.target, 20) + "\n";
        for (const auto& x : l.samples) {
            samples.push_back({{"n", x.n}, {"value", to_decimal(x.value, 20)}, {"error", to_decimal(x.error, 6)}});
            o.text += "  n = " + std::to_string(x.n) + "  " + to_decimal(x.value, 16) + "  error " + to_decimal(x.error, 6) + "\n";
        }
        all.push_back({{"quantity", l.quantity}, {"target", to_decimal(l.target, 20)}, {"monotone", l.monotone}, {"samples", samples}});
    };
    for (LimitKind k : {LimitKind::Conclusion, LimitKind::First, LimitKind::Second})
        emit(limit_check(fam, k, alpha, n_min, n_max, step));
    emit(second_ratio_limit(fam, alpha, n_min, n_max, step));
    o.json["limits"] = all;
    return o;
}

Output cmd_sheffer(const Settings& s, const std::string& ell_text) {
    const FamilySpec spec = spec_of(s);
    const BinomialFamily fam = make_family(spec, s.order + 1);
    QSeries ell;
    if (ell_text == "one") ell = QSeries::constant(1, kExact);
    else if (ell_text == "bernoulli") ell = bernoulli_type(s.order + 1, 0).ell;
    else ell = coefficient_list(ell_text, s.order + 1);
    const ShefferFamily sf = tau_seq(fam, ell, s.order);
    Output o;
    o.json["family"] = spec.to_string();
    o.json["ell"] = series_json(ell);
    Json rows = Json::array();
    for (std::size_t n = 0; n < sf.tau_polys.size(); ++n) {
        rows.push_back(series_json(sf.tau_polys[n]));
        o.text += "tau_" + std::to_string(n) + "(a) = " + sf.tau_polys[n].to_string(s.order + 1) + "\n";
    }
    o.json["tau"] = rows;
    o.json["theta_eigenvalues"] = theta_check(sf, s.order);
    o.text += std::string("theta tau_n = n tau_n: ") + (theta_check(sf, s.order) ? "yes" : "no") + "\n";
    return o;
}

Output cmd_verify(const Settings& s, const std::string& which, bool& all_passed) {
    SuiteOptions opts;
    if (s.depth) opts.depth = s.depth;
    if (s.order_given) opts.order = s.order;
    std::vector<std::string> names;
    if (which == "all") {
        for (const auto& info : suites()) names.push_back(info.name);
    } else {
        names.push_back(which);
    }
    Output o;
    Json reports = Json::array();
    all_passed = true;
    for (const auto& name : names) {
        const Report r = run_suite(name, opts);
        all_passed = all_passed && r.passed();
        reports.push_back(to_json(r));
        o.text += to_text(r);
    }
    o.json["passed"] = all_passed;
    o.json["reports"] = reports;
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact binomial-type series, their operator expansions and identity checks"};
    app.require_subcommand(1);
    Settings s;
    app.add_option("--f", s.f, "family: id, exp1, geom, nu, poly(c1, ..., cd) or [f0, f1, ...]");
    app.add_option("--order", s.order, "truncation order")->check(CLI::Range(1, 2000));
    app.add_option("--depth", s.depth, "depth in powers of 1/a")->check(CLI::Range(0, 64));
    app.add_flag("--json", s.json, "structured output");
    app.add_option("--out", s.out, "write output to this file");
    app.add_option("--config", s.config, "JSON file with the same keys as the flags");

    auto* pseq = app.add_subcommand("pseq", "polynomials p_0..p_order");
    auto* omega = app.add_subcommand("omega", "f, its inverse, f/f' and omega");
    auto* q = app.add_subcommand("q", "q_n(s) = n! [x^n] (x/f)^s");
    auto* tn = app.add_subcommand("tn", "operators T_0..T_depth");
    auto* stirling = app.add_subcommand("stirling", "terms of the expansion of ln p_s(s/a)");
    auto* limits = app.add_subcommand("limits", "limit formulas sampled along n");
    std::string alpha = "2";
    int n_min = 8, n_max = 64, step = 8;
    limits->add_option("--alpha", alpha, "the point a (rational)");
    limits->add_option("--n-min", n_min);
    limits->add_option("--n-max", n_max);
    limits->add_option("--step", step)->check(CLI::PositiveNumber);
    auto* sheffer = app.add_subcommand("sheffer", "Sheffer polynomials tau_n = l(D) p_n");
    std::string ell = "bernoulli";
    sheffer->add_option("--ell", ell, "one, bernoulli or [l0, l1, ...] with l0 = 1");
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string which = "all";
    std::vector<std::string> suite_names{"all"};
    for (const auto& info : suites()) suite_names.push_back(info.name);
    verify->add_option("suite", which, "suite name or all")->check(CLI::IsMember(suite_names));

    for (auto* sub : {pseq, omega, q, tn, stirling, limits, sheffer, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    int status = 0;
    Output out;
    try {
        s.order_given = app.count("--order") > 0;
        if (!s.config.empty()) apply_config(s, app);
        if (command == "pseq") out = cmd_pseq(s);
        else if (command == "omega") out = cmd_omega(s);
        else if (command == "q") out = cmd_q(s);
        else if (command == "tn") out = cmd_tn(s);
        else if (command == "stirling") out = cmd_stirling(s);
        else if (command == "limits") out = cmd_limits(s, alpha, n_min, n_max, step);
        else if (command == "sheffer") out = cmd_sheffer(s, ell);
        else {
            bool passed = false;
            out = cmd_verify(s, which, passed);
            status = passed ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "ulog " << command << ": parse error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationError& e) {
        std::cerr << "ulog " << command << ": truncation shortfall: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "ulog " << command << ": " << e.what() << "\n";
        return 4;
    }

    const std::string rendered = s.json ? out.json.dump(2) + "\n" : out.text;
    if (s.out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream f(s.out);
        if (!f) {
            std::cerr << "ulog: cannot write " << s.out << "\n";
            return 4;
        }
        f << rendered;
    }
    return status;
}
