#include "symq/bounds.hpp"
#include "symq/classdef.hpp"
#include "symq/jsonfmt.hpp"
#include "symq/phis.hpp"
#include "symq/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace symq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolations = 2;
constexpr int kExitInternal = 3;

struct CommonOpts {
    double lambda = 1.0, mu = 1.0, eta = 0.0, q = 0.9, rho = 1.0;
    std::string bernardi = "off";
    std::string phi_text = "caratheodory";
    std::string theorem = "hankel2";
    std::string output = "json";
    std::int64_t samples = 100000;
    std::uint64_t seed = 42;
    int order = 6;
    std::string config_file;

    ClassParams params() const {
        ClassParams p;
        p.q = q;
        p.lambda = lambda;
        p.mu = mu;
        p.eta = eta;
        p.bernardi_enabled = (bernardi == "on");
        p.validate();
        return p;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_file,
                    "key = value file; command-line flags override");
    cmd->add_option("--theorem", o.theorem, "hankel2 | coeffs | fekete")
        ->check(CLI::IsMember({"hankel2", "coeffs", "fekete"}));
    cmd->add_option("--lambda", o.lambda, "power parameter, >= 1");
    cmd->add_option("--mu", o.mu, "convex-combination parameter, >= 0");
    cmd->add_option("--eta", o.eta, "integral-operator parameter, > -1");
    cmd->add_option("--q", o.q, "deformation parameter in (0,1)");
    cmd->add_option("--bernardi", o.bernardi, "on | off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--phi", o.phi_text,
                    "caratheodory | janowski:A,B | crescent | custom:E1,E2,E3");
    cmd->add_option("--rho", o.rho, "Fekete-Szego parameter");
    cmd->add_option("--samples", o.samples, "Monte Carlo sample count");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--order", o.order, "series truncation order");
    cmd->add_option("--output", o.output, "json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
}

// Applies "key = value" lines for every key whose flag was not given on the
// command line.
void load_config(CLI::App* cmd, CommonOpts& o) {
    if (o.config_file.empty()) return;
    std::ifstream in(o.config_file);
    if (!in) throw std::invalid_argument("config: cannot open " + o.config_file);
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r\"");
        const auto b = s.find_last_not_of(" \t\r\"");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        if (cmd->count("--" + key) > 0) continue;  // flag wins
        if (key == "theorem") o.theorem = val;
        else if (key == "lambda") o.lambda = std::stod(val);
        else if (key == "mu") o.mu = std::stod(val);
        else if (key == "eta") o.eta = std::stod(val);
        else if (key == "q") o.q = std::stod(val);
        else if (key == "bernardi") o.bernardi = val;
        else if (key == "phi") o.phi_text = val;
        else if (key == "rho") o.rho = std::stod(val);
        else if (key == "samples") o.samples = std::stoll(val);
        else if (key == "seed") o.seed = std::stoull(val);
        else if (key == "order") o.order = std::stoi(val);
        else if (key == "output") o.output = val;
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

struct SweepAxis {
    std::string key;
    double start = 0.0, stop = 0.0;
    int count = 1;
};

SweepAxis parse_sweep(const std::string& text) {
    const auto eq = text.find('=');
    const auto c1 = text.find(':', eq);
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--sweep", "expected key=start:stop:count");
    SweepAxis a;
    a.key = text.substr(0, eq);
    a.start = std::stod(text.substr(eq + 1, c1 - eq - 1));
    a.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    a.count = std::stoi(text.substr(c2 + 1));
    if (a.count < 1) throw CLI::ValidationError("--sweep", "count must be >= 1");
    if (a.key != "lambda" && a.key != "mu" && a.key != "eta" && a.key != "q" && a.key != "rho")
        throw CLI::ValidationError("--sweep", "key must be one of lambda, mu, eta, q, rho");
    return a;
}

double axis_value(const SweepAxis& a, int i) {
    if (a.count == 1) return a.start;
    return a.start + (a.stop - a.start) * i / (a.count - 1);
}

void apply_axis(CommonOpts& o, const std::string& key, double v) {
    if (key == "lambda") o.lambda = v;
    else if (key == "mu") o.mu = v;
    else if (key == "eta") o.eta = v;
    else if (key == "q") o.q = v;
    else if (key == "rho") o.rho = v;
}

std::string bound_json(const CommonOpts& o, const ClassParams& p, const PhiSpec& phi) {
    std::ostringstream out;
    out << "{\"schema\":1,\"theorem\":" << json_str(o.theorem)
        << ",\"params\":{\"q\":" << json_num(p.q)
        << ",\"lambda\":" << json_num(p.lambda)
        << ",\"mu\":" << json_num(p.mu)
        << ",\"eta\":" << json_num(p.eta)
        << ",\"bernardi\":" << json_bool(p.bernardi_enabled) << "}"
        << ",\"phi\":" << json_str(phi.label);
    if (o.theorem == "hankel2") {
        const double v = thm1_bound(p.lambda, p.q, phi);
        const HankelBoundParts pr = thm1_parts(p.lambda, p.q, phi, Variant::proof);
        const HankelBoundParts st = thm1_parts(p.lambda, p.q, phi, Variant::statement);
        const double table = quad_max_case_table(st.P, st.Q, st.R);
        out << ",\"value\":" << json_num(v)
            << ",\"parts\":{\"P\":" << json_num(pr.P) << ",\"Q\":" << json_num(pr.Q)
            << ",\"R\":" << json_num(pr.R) << "}"
            << ",\"flags\":[";
        bool first = true;
        auto flag = [&](const std::string& s) {
            if (!first) out << ",";
            out << json_str(s);
            first = false;
        };
        if (std::abs(st.P - pr.P) > 1e-12 || std::abs(st.Q - pr.Q) > 1e-12 ||
            std::abs(st.R - pr.R) > 1e-12)
            flag("statement-parts-differ-from-proof");
        if (std::isnan(table)) flag("statement-case-table-has-no-applicable-case");
        else if (std::abs(table - v) > 1e-12) flag("statement-case-table-differs");
        out << "],\"statement_parts\":{\"P\":" << json_num(st.P)
            << ",\"Q\":" << json_num(st.Q) << ",\"R\":" << json_num(st.R)
            << ",\"case_table_value\":" << json_num(table) << "}";
    } else if (o.theorem == "coeffs") {
        const A2A3Bounds b = thm2_bounds(p, phi);
        out << ",\"a2_bound\":" << json_num(b.a2_bound)
            << ",\"a3_bound\":" << json_num(b.a3_bound)
            << ",\"a2_entries\":[" << json_num(b.a2_entries[0]) << ","
            << json_num(b.a2_entries[1]) << "," << json_num(b.a2_entries[2]) << "]"
            << ",\"a3_first_term\":" << json_num(b.a3_first_term)
            << ",\"a3_entries\":[" << json_num(b.a3_entries[0]) << ","
            << json_num(b.a3_entries[1]) << "]"
            << ",\"Omega\":" << json_num(b.to.Omega)
            << ",\"Theta\":" << json_num(b.to.Theta)
            << ",\"flags\":[";
        for (size_t i = 0; i < b.flags.size(); ++i) {
            if (i) out << ",";
            out << json_str(b.flags[i]);
        }
        out << "]";
    } else {
        const double v = thm3_bound(p, phi, o.rho);
        out << ",\"rho\":" << json_num(o.rho) << ",\"value\":" << json_num(v) << ",\"flags\":[]";
    }
    out << "}";
    return out.str();
}

void bound_table(const CommonOpts& o, const ClassParams& p, const PhiSpec& phi) {
    std::cout << "theorem   " << o.theorem << "\n"
              << "phi       " << phi.label << "\n"
              << "q         " << json_num(p.q) << "\n"
              << "lambda    " << json_num(p.lambda) << "\n"
              << "mu        " << json_num(p.mu) << "\n"
              << "eta       " << json_num(p.eta) << "\n"
              << "bernardi  " << (p.bernardi_enabled ? "on" : "off") << "\n";
    if (o.theorem == "hankel2") {
        const HankelBoundParts pr = thm1_parts(p.lambda, p.q, phi, Variant::proof);
        const HankelBoundParts st = thm1_parts(p.lambda, p.q, phi, Variant::statement);
        std::cout << "bound     " << json_num(thm1_bound(p.lambda, p.q, phi)) << "\n"
                  << "P Q R     " << json_num(pr.P) << " " << json_num(pr.Q) << " "
                  << json_num(pr.R) << "\n";
        if (std::abs(st.P - pr.P) > 1e-12 || std::abs(st.Q - pr.Q) > 1e-12 ||
            std::abs(st.R - pr.R) > 1e-12)
            std::cout << "statement " << json_num(st.P) << " " << json_num(st.Q) << " "
                      << json_num(st.R) << " (differs from proof parts)\n";
    } else if (o.theorem == "coeffs") {
        const A2A3Bounds b = thm2_bounds(p, phi);
        std::cout << "|a2| <=   " << json_num(b.a2_bound) << "\n"
                  << "|a3| <=   " << json_num(b.a3_bound) << "\n";
        for (const auto& f : b.flags) std::cout << "flag      " << f << "\n";
    } else {
        std::cout << "rho       " << json_num(o.rho) << "\n"
                  << "bound     " << json_num(thm3_bound(p, phi, o.rho)) << "\n";
    }
}

std::vector<BoundReport> run_verify(const CommonOpts& o, const ClassParams& p, const PhiSpec& phi) {
    if (o.theorem == "hankel2")
        return {sup_hankel(p, phi, o.samples, o.seed)};
    if (o.theorem == "fekete") {
        BoundReport r = sup_fekete(p, phi, o.rho, o.samples, o.seed);
        return {r};
    }
    return sup_a2_a3(p, phi, o.samples, o.seed);
}

int emit_reports(const std::vector<BoundReport>& reports, const std::string& output) {
    bool violated = false;
    if (output == "json") {
        if (reports.size() == 1) {
            std::cout << reports[0].to_json() << "\n";
        } else {
            std::cout << "[";
            for (size_t i = 0; i < reports.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << reports[i].to_json();
            }
            std::cout << "]\n";
        }
    } else if (output == "csv") {
        std::cout << BoundReport::csv_header() << "\n";
        for (const auto& r : reports) std::cout << r.to_csv_row() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.theorem << "  closed_form " << json_num(r.closed_form)
                      << "  sampled_sup " << json_num(r.sampled_sup)
                      << "  gap " << json_num(r.gap)
                      << "  violations " << r.violations.size() << "\n";
        }
    }
    for (const auto& r : reports) violated = violated || !r.violations.empty();
    return violated ? kExitViolations : kExitOk;
}

int cmd_expand(const CommonOpts& o) {
    const ClassParams p = o.params();
    if (o.order < 4) throw std::invalid_argument("expand: order must be >= 4");
    const cplx a2(0.5, 0.25), a3(-0.25, 0.5), a4(0.125, -0.125);
    TruncatedSeries f(o.order);
    f.set(1, 1.0);
    f.set(2, a2);
    f.set(3, a3);
    f.set(4, a4);
    const TruncatedSeries lhs = build_lhs(f, p);
    const auto cf = closed_form_lhs_coeffs(p, a2, a3, a4);
    std::ostringstream out;
    out << "{\"schema\":1,\"engine\":" << lhs.to_json() << ",\"closed_form\":[";
    for (size_t i = 0; i < cf.size(); ++i) {
        if (i) out << ",";
        out << "[" << json_num(cf[i].real()) << "," << json_num(cf[i].imag()) << "]";
    }
    out << "],\"max_delta\":";
    double worst = 0.0;
    for (size_t i = 0; i < cf.size(); ++i)
        worst = std::max(worst, std::abs(lhs[static_cast<int>(i) + 1] - cf[i]));
    out << json_num(worst) << "}";
    std::cout << out.str() << "\n";
    return worst <= 1e-9 ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coefficient-bound calculator and numerical verifier for "
                 "symmetric q-calculus bi-univalent function classes"};
    app.require_subcommand(1);
    app.footer("CSV columns (verify/sweep): theorem,phi,q,lambda,mu,eta,bernardi,rho,"
               "closed_form,sampled_sup,gap,violations_count");

    CommonOpts o;
    std::vector<std::string> sweep_specs;

    CLI::App* bound = app.add_subcommand("bound", "print closed-form bounds");
    add_common(bound, o);
    CLI::App* verify = app.add_subcommand("verify", "sample the parameter box against a bound");
    add_common(verify, o);
    CLI::App* sweep = app.add_subcommand("sweep", "grid sweep, CSV output");
    add_common(sweep, o);
    sweep->add_option("--sweep", sweep_specs, "key=start:stop:count (repeatable)")
        ->required();
    CLI::App* expand = app.add_subcommand("expand", "series engine vs closed-form coefficients");
    add_common(expand, o);
    CLI::App* selftest = app.add_subcommand("selftest", "structural battery + discrepancy ledger");
    add_common(selftest, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (CLI::App* sub : {bound, verify, sweep, expand, selftest})
            if (sub->parsed()) load_config(sub, o);
        if (bound->parsed()) {
            const ClassParams p = o.params();
            const PhiSpec phi = parse_phi(o.phi_text, o.order);
            if (o.output == "table") bound_table(o, p, phi);
            else std::cout << bound_json(o, p, phi) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            const ClassParams p = o.params();
            const PhiSpec phi = parse_phi(o.phi_text, o.order);
            return emit_reports(run_verify(o, p, phi), o.output);
        }
        if (sweep->parsed()) {
            std::vector<SweepAxis> axes;
            for (const auto& s : sweep_specs) axes.push_back(parse_sweep(s));
            std::cout << BoundReport::csv_header() << "\n";
            bool violated = false;
            std::vector<int> idx(axes.size(), 0);
            for (;;) {
                CommonOpts point = o;
                for (size_t k = 0; k < axes.size(); ++k)
                    apply_axis(point, axes[k].key, axis_value(axes[k], idx[k]));
                const ClassParams p = point.params();
                const PhiSpec phi = parse_phi(point.phi_text, point.order);
                for (const auto& r : run_verify(point, p, phi)) {
                    std::cout << r.to_csv_row() << "\n";
                    violated = violated || !r.violations.empty();
                }
                size_t k = 0;
                while (k < axes.size() && ++idx[k] == axes[k].count) idx[k++] = 0;
                if (k == axes.size()) break;
            }
            return violated ? kExitViolations : kExitOk;
        }
        if (expand->parsed()) return cmd_expand(o);
        if (selftest->parsed()) {
            const ConsistencyReport rep = consistency_suite(o.seed);
            std::cout << rep.to_json() << "\n";
            return rep.all_pass() ? kExitOk : kExitInternal;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
