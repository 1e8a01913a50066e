// lojex: exact Lojasiewicz exponents of weighted homogeneous plane
// polynomials, with a path-based oracle and a floating-point estimator.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lojex/error.hpp"
#include "lojex/exponent.hpp"
#include "lojex/numeric.hpp"
#include "lojex/parse.hpp"
#include "lojex/signature.hpp"
#include "lojex/wfilter.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitInternal = 3;

std::string decimal6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Analysis {
    std::string input;
    lojex::BiPoly poly;
    lojex::WeightSystem ws;
    lojex::CaseClassification cls;
    lojex::ExponentResult exponent;
};

lojex::WeightSystem resolve_weights(const lojex::BiPoly& p,
                                    const std::optional<std::pair<long long, long long>>& override_w) {
    if (!override_w) return lojex::infer_weights(p);
    auto [w1, w2] = *override_w;
    if (p.is_zero()) throw lojex::DomainError("zero polynomial");
    const auto& [e, c] = *p.terms().begin();
    long long d = e.first * w1 + e.second * w2;
    lojex::WeightSystem ws(w1, w2, d);
    if (!lojex::validate_weights(p, ws))
        throw lojex::DomainError("supplied weights do not type the polynomial");
    return ws;
}

Analysis analyze(const std::string& text,
                 const std::optional<std::pair<long long, long long>>& override_w) {
    Analysis a;
    a.input = text;
    a.poly = lojex::parse_polynomial(text);
    a.ws = resolve_weights(a.poly, override_w);
    a.cls = lojex::classify(a.poly, a.ws);
    a.exponent = lojex::lojasiewicz_exponent(a.poly, a.ws, a.cls);
    return a;
}

json exponent_json(const lojex::ExponentResult& res) {
    if (res.infinite) return "inf";
    return json{{"num", numerator(res.value).str()}, {"den", denominator(res.value).str()}};
}

json witness_json(const lojex::ExponentResult& res) {
    if (!res.witness_path) return nullptr;
    const auto& w = *res.witness_path;
    json j;
    j["anchor"] = w.anchor;
    j["ord_phi"] = w.ord_phi;
    if (w.grad_vanishes)
        j["ord_grad"] = "inf";
    else
        j["ord_grad"] = w.ord_grad;
    if (!w.grad_vanishes)
        j["ratio"] = {{"num", numerator(w.ratio).str()}, {"den", denominator(w.ratio).str()}};
    return j;
}

json analysis_json(const Analysis& a) {
    json j;
    j["input"] = a.input;
    j["variables"] = {"x", "y"};
    j["weights"] = {a.ws.w1, a.ws.w2};
    j["degree"] = a.ws.d;
    j["swapped"] = a.cls.swapped;
    j["nondegenerate"] = a.cls.nondegenerate;
    j["case"] = lojex::case_tag_name(a.exponent.case_tag);
    j["lojasiewicz_exponent"] = exponent_json(a.exponent);
    j["exponent_decimal"] =
        a.exponent.infinite ? "inf" : decimal6(lojex::rational_to_double(a.exponent.value));
    if (a.exponent.sufficiency_degree)
        j["sufficiency_degree"] = *a.exponent.sufficiency_degree;
    else
        j["sufficiency_degree"] = nullptr;
    j["witness_path"] = witness_json(a.exponent);
    j["diagnostics"] = a.cls.diagnostics;
    return j;
}

void print_analysis_text(const Analysis& a) {
    std::cout << "input: " << lojex::format_polynomial(a.poly) << "\n";
    std::cout << "type: (" << a.ws.d << "; " << a.ws.w1 << ", " << a.ws.w2 << ")"
              << (a.cls.swapped ? "  [axes swapped internally]" : "") << "\n";
    std::cout << "nondegenerate: " << (a.cls.nondegenerate ? "yes" : "no") << "\n";
    std::cout << "case: " << lojex::case_tag_name(a.exponent.case_tag) << "\n";
    if (a.exponent.infinite) {
        std::cout << "L(f) = infinity\n";
    } else {
        std::cout << "L(f) = " << lojex::rational_to_string(a.exponent.value) << " ("
                  << decimal6(lojex::rational_to_double(a.exponent.value)) << ")\n";
        std::cout << "sufficiency degree: " << *a.exponent.sufficiency_degree << "\n";
        if (a.exponent.witness_path)
            std::cout << "witness path: " << a.exponent.witness_path->anchor << "\n";
    }
    for (const auto& d : a.cls.diagnostics) std::cout << "note: " << d << "\n";
}

int run_compute(const std::string& poly_text,
                const std::optional<std::pair<long long, long long>>& weights, bool as_json) {
    Analysis a = analyze(poly_text, weights);
    if (as_json)
        std::cout << analysis_json(a).dump(2) << "\n";
    else
        print_analysis_text(a);
    return a.exponent.infinite ? kExitDegenerate : kExitOk;
}

int run_check(const std::string& poly_text,
              const std::optional<std::pair<long long, long long>>& weights, bool as_json) {
    lojex::BiPoly p = lojex::parse_polynomial(poly_text);
    lojex::WeightSystem ws = resolve_weights(p, weights);
    lojex::CaseClassification cls = lojex::classify(p, ws);
    bool euler = lojex::check_euler_identity(p, ws);
    if (as_json) {
        json j;
        j["input"] = poly_text;
        j["variables"] = {"x", "y"};
        j["weights"] = {ws.w1, ws.w2};
        j["degree"] = ws.d;
        j["swapped"] = cls.swapped;
        j["homogeneous"] = cls.homogeneous;
        j["euler_identity"] = euler;
        j["nondegenerate"] = cls.nondegenerate;
        j["containment"] = cls.containment_holds;
        j["diagnostics"] = cls.diagnostics;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "input: " << lojex::format_polynomial(p) << "\n";
        std::cout << "type: (" << ws.d << "; " << ws.w1 << ", " << ws.w2 << ")"
                  << (cls.swapped ? "  [axes swapped internally]" : "") << "\n";
        std::cout << "euler identity: " << (euler ? "holds" : "fails") << "\n";
        std::cout << "nondegenerate: " << (cls.nondegenerate ? "yes" : "no") << "\n";
        std::cout << "containment {d1p=0} in {x2=0}: "
                  << (cls.containment_holds ? "yes" : "no") << "\n";
        for (const auto& d : cls.diagnostics) std::cout << "witness: " << d << "\n";
    }
    return kExitOk;
}

int run_paths(const std::string& poly_text,
              const std::optional<std::pair<long long, long long>>& weights, bool as_json) {
    lojex::BiPoly p = lojex::parse_polynomial(poly_text);
    lojex::WeightSystem ws = resolve_weights(p, weights);
    bool swapped = ws.w2 > ws.w1;
    lojex::BiPoly q = swapped ? p.swap_vars() : p;
    lojex::WeightSystem wq = swapped ? ws.swapped_axes() : ws;
    lojex::PathOracleResult oracle = lojex::path_oracle(q, wq);
    if (as_json) {
        json j;
        j["input"] = poly_text;
        j["weights"] = {ws.w1, ws.w2};
        j["degree"] = ws.d;
        j["swapped"] = swapped;
        json cands = json::array();
        for (const auto& c : oracle.candidates) {
            json cj;
            cj["anchor"] = c.anchor;
            cj["ord_phi"] = c.ord_phi;
            cj["ord_grad"] = c.grad_vanishes ? json("inf") : json(c.ord_grad);
            if (!c.grad_vanishes)
                cj["ratio"] = {{"num", numerator(c.ratio).str()},
                               {"den", denominator(c.ratio).str()}};
            cands.push_back(cj);
        }
        j["candidates"] = cands;
        j["max_ratio"] = oracle.max_infinite
                             ? json("inf")
                             : json{{"num", numerator(oracle.max_ratio).str()},
                                    {"den", denominator(oracle.max_ratio).str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "path candidates for " << lojex::format_polynomial(p) << " (type (" << ws.d
                  << "; " << ws.w1 << ", " << ws.w2 << "))"
                  << (swapped ? " [axes swapped internally]" : "") << ":\n";
        for (const auto& c : oracle.candidates) {
            std::cout << "  anchor " << c.anchor << ": ord_phi = " << c.ord_phi << ", ord_grad = ";
            if (c.grad_vanishes)
                std::cout << "inf, ratio = inf\n";
            else
                std::cout << c.ord_grad << ", ratio = " << lojex::rational_to_string(c.ratio)
                          << "\n";
        }
        std::cout << "max ratio: "
                  << (oracle.max_infinite ? "inf" : lojex::rational_to_string(oracle.max_ratio))
                  << "\n";
    }
    return oracle.max_infinite ? kExitDegenerate : kExitOk;
}

int run_estimate(const std::string& poly_text, const lojex::EstimateConfig& cfg, bool as_json) {
    lojex::BiPoly p = lojex::parse_polynomial(poly_text);
    std::optional<lojex::WeightSystem> ws;
    try {
        ws = lojex::infer_weights(p);
    } catch (const lojex::DomainError&) {
        // weighted ratios are simply omitted
    }
    lojex::EstimateReport report = lojex::estimate_exponent(p, cfg, ws);
    if (as_json) {
        json j;
        j["input"] = poly_text;
        j["radii"] = report.radii;
        j["minima"] = report.minima;
        j["fitted_slope"] = report.fitted_slope;
        j["slope_stderr"] = report.slope_stderr;
        if (report.weighted_ratio_min) {
            j["weighted_ratio_min"] = *report.weighted_ratio_min;
            j["weighted_ratio_max"] = *report.weighted_ratio_max;
        }
        j["warnings"] = report.warnings;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "fitted slope: " << decimal6(report.fitted_slope)
                  << " (stderr " << decimal6(report.slope_stderr) << ")\n";
        for (std::size_t i = 0; i < report.radii.size(); ++i)
            std::cout << "  r = " << decimal6(report.radii[i])
                      << "  min |grad| = " << decimal6(report.minima[i]) << "\n";
        if (report.weighted_ratio_min)
            std::cout << "weighted ratio extremes: [" << decimal6(*report.weighted_ratio_min)
                      << ", " << decimal6(*report.weighted_ratio_max) << "]\n";
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    }
    return kExitOk;
}

int run_complex(const std::vector<long long>& weights, long long degree, bool as_json) {
    lojex::Rational value = lojex::complex_exponent(weights, degree);
    if (as_json) {
        json j;
        j["weights"] = weights;
        j["degree"] = degree;
        j["exponent"] = {{"num", numerator(value).str()}, {"den", denominator(value).str()}};
        j["exponent_decimal"] = decimal6(lojex::rational_to_double(value));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "L(f) = " << lojex::rational_to_string(value) << " ("
                  << decimal6(lojex::rational_to_double(value)) << ")\n";
    }
    return kExitOk;
}

int run_corpus(const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open corpus file " << path << "\n";
        return kExitInputError;
    }
    int passed = 0, failed = 0;
    json cases = json::array();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() ||
            line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::string poly_text, expected;
        std::optional<std::pair<long long, long long>> weights;
        try {
            json c = json::parse(line);
            poly_text = c.at("poly").get<std::string>();
            expected = c.at("expected_L").get<std::string>();
            if (c.contains("weights"))
                weights = std::make_pair(c["weights"][0].get<long long>(),
                                         c["weights"][1].get<long long>());
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": malformed case: " << e.what() << "\n";
            ++failed;
            continue;
        }
        bool pass = false;
        std::string actual;
        try {
            Analysis a = analyze(poly_text, weights);
            actual = a.exponent.infinite ? "inf" : lojex::rational_to_string(a.exponent.value);
            if (expected == "inf") {
                pass = a.exponent.infinite;
            } else {
                pass = !a.exponent.infinite && a.exponent.value == lojex::Rational(expected);
            }
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what();
        }
        pass ? ++passed : ++failed;
        if (as_json) {
            cases.push_back({{"line", lineno},
                             {"poly", poly_text},
                             {"expected", expected},
                             {"actual", actual},
                             {"pass", pass}});
        } else {
            std::cout << (pass ? "PASS" : "FAIL") << " line " << lineno << ": " << poly_text
                      << " expected " << expected << " got " << actual << "\n";
        }
    }
    if (as_json) {
        json j;
        j["cases"] = cases;
        j["passed"] = passed;
        j["failed"] = failed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "summary: " << passed << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? kExitOk : kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lojasiewicz exponents of weighted homogeneous plane polynomials"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");

    std::string poly_text;
    std::string weights_text;
    auto weights_pair = [&]() -> std::optional<std::pair<long long, long long>> {
        if (weights_text.empty()) return std::nullopt;
        long long w1, w2;
        char comma;
        std::istringstream ss(weights_text);
        if (!(ss >> w1 >> comma >> w2) || comma != ',' || w1 < 1 || w2 < 1)
            throw lojex::DomainError("--weights expects 'w1,w2' with positive integers");
        return std::make_pair(w1, w2);
    };

    auto* compute = app.add_subcommand("compute", "classify and compute the exact exponent");
    compute->add_option("polynomial", poly_text, "polynomial in x, y")->required();
    compute->add_option("--weights", weights_text, "override weight inference (w1,w2)");

    auto* check = app.add_subcommand("check", "homogeneity, Euler, nondegeneracy, containment");
    check->add_option("polynomial", poly_text)->required();
    check->add_option("--weights", weights_text);

    auto* paths = app.add_subcommand("paths", "enumerate monomial path candidates");
    paths->add_option("polynomial", poly_text)->required();
    paths->add_option("--weights", weights_text);

    lojex::EstimateConfig cfg;
    if (const char* env_seed = std::getenv("LOJEX_SEED"))
        cfg.seed = std::strtoull(env_seed, nullptr, 0);
    auto* estimate = app.add_subcommand("estimate", "sphere-sampling slope estimate");
    estimate->add_option("polynomial", poly_text)->required();
    estimate->add_option("--r0", cfg.r0, "initial radius");
    estimate->add_option("--gamma", cfg.gamma, "radius ratio in (0,1)");
    estimate->add_option("--num-radii", cfg.num_radii, "rungs in the radius ladder");
    estimate->add_option("--samples", cfg.samples_per_circle, "samples per circle");
    estimate->add_option("--seed", cfg.seed, "jitter seed");

    std::string complex_weights;
    long long complex_degree = 0;
    auto* cplx = app.add_subcommand("complex", "max_i(d/w_i - 1) formula, any arity");
    cplx->add_option("--weights", complex_weights, "comma-separated weights")->required();
    cplx->add_option("--degree", complex_degree, "weighted degree d")->required();

    std::string corpus_path;
    auto* corpus = app.add_subcommand("corpus", "run a JSONL corpus of expected exponents");
    corpus->add_option("file", corpus_path, "newline-delimited JSON cases")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(poly_text, weights_pair(), as_json);
        if (check->parsed()) return run_check(poly_text, weights_pair(), as_json);
        if (paths->parsed()) return run_paths(poly_text, weights_pair(), as_json);
        if (estimate->parsed()) return run_estimate(poly_text, cfg, as_json);
        if (cplx->parsed()) {
            std::vector<long long> ws;
            std::istringstream ss(complex_weights);
            std::string tok;
            while (std::getline(ss, tok, ',')) ws.push_back(std::stoll(tok));
            return run_complex(ws, complex_degree, as_json);
        }
        if (corpus->parsed()) return run_corpus(corpus_path, as_json);
    } catch (const lojex::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const lojex::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
