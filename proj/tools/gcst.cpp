#include <charconv>
#include <complex>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcst/freeprob.hpp"
#include "gcst/measures.hpp"
#include "gcst/moments.hpp"
#include "gcst/transforms.hpp"

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

namespace {

std::string fmt_double(double v) {
    if (v == 0.0) v = 0.0; // collapse -0
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt_complex(cplx z) {
    double re = z.real() == 0.0 ? 0.0 : z.real();
    double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return fmt_double(re) + (im < 0 ? "-" : "+") + fmt_double(std::abs(im)) + "i";
}

struct Options {
    int family = 1;
    double lambda = 1.0;
    int n = 2;
    int order = 8;
    std::string kind = "powered";
    std::string method;
    double re_min = 2.5;
    double re_max = 8.0;
    double im = 0.0;
    int points = 16;
    double tol = 1e-8;
    int quad_order = 256;
    std::string format = "json";
    std::string out;
    bool lambda_given = false;
    bool points_given = false;
    bool re_min_given = false;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw gcst::Error("cannot open output file: " + opt.out);
    file << text;
}

std::vector<cplx> build_grid(const Options& opt) {
    std::vector<cplx> grid;
    for (int i = 0; i < opt.points; ++i) {
        double re = opt.points == 1
                        ? opt.re_min
                        : opt.re_min + (opt.re_max - opt.re_min) * i / (opt.points - 1);
        grid.emplace_back(re, opt.im);
    }
    return grid;
}

json report_json(const gcst::transforms::VerificationReport& rep, bool with_constant) {
    json arr = json::array();
    for (size_t i = 0; i < rep.grid.size(); ++i) {
        json row;
        row["z"] = fmt_complex(rep.grid[i]);
        row["lhs"] = fmt_complex(rep.lhs[i]);
        row["rhs"] = fmt_complex(rep.rhs[i]);
        arr.push_back(row);
    }
    json out;
    out["points"] = std::move(arr);
    if (with_constant) out["fitted_constant"] = fmt_complex(rep.fitted_constant);
    return out;
}

int cmd_families(const Options& opt) {
    json rows = json::array();
    for (int id = 1; id <= 4; ++id) {
        json row;
        row["family"] = id;
        row["lambda_min"] = id == 1 ? 0.0 : 0.5;
        if (opt.lambda_given) {
            auto spec = gcst::measures::family(id, opt.lambda);
            row["jacobi_a"] = spec.jacobi_a;
            row["jacobi_b"] = spec.jacobi_b;
            row["alpha"] = spec.alpha;
            row["gamma"] = spec.gamma;
            row["m"] = spec.m;
            row["sigma"] = spec.sigma;
            row["affine_scale"] = spec.affine_scale;
            row["affine_shift"] = spec.affine_shift;
            row["utilde"] = gcst::measures::utilde_label(spec.utilde);
            row["gtilde"] = gcst::measures::gtilde_label(spec.gtilde);
        } else {
            auto spec = gcst::measures::family(id, 2.0); // structure only
            row["utilde"] = gcst::measures::utilde_label(spec.utilde);
            row["gtilde"] = gcst::measures::gtilde_label(spec.gtilde);
        }
        rows.push_back(row);
    }
    if (opt.format == "csv") {
        std::string text = "family,lambda_min,utilde,gtilde\n";
        for (auto& row : rows)
            text += std::to_string(row["family"].get<int>()) + "," +
                    fmt_double(row["lambda_min"].get<double>()) + "," +
                    row["utilde"].get<std::string>() + "," + row["gtilde"].get<std::string>() +
                    "\n";
        emit(opt, text);
        return 0;
    }
    json doc;
    doc["command"] = "families";
    json params = json::object();
    if (opt.lambda_given) params["lambda"] = opt.lambda;
    doc["params"] = params;
    doc["results"] = rows;
    emit(opt, doc.dump(2) + "\n");
    return 0;
}

int cmd_verify(const Options& opt, const std::string& kind) {
    auto spec = gcst::measures::family(opt.family, opt.lambda);
    auto grid = build_grid(opt);
    gcst::transforms::VerificationReport rep;
    if (kind == "powered")
        rep = gcst::transforms::verify_powered_identity(spec, grid, opt.tol, opt.quad_order);
    else if (kind == "markov")
        rep = gcst::transforms::verify_markov_identity(spec, grid, opt.tol, opt.quad_order);
    else
        throw gcst::DomainError("verify: kind must be powered or markov");

    if (opt.format != "json") throw gcst::UnsupportedError("verify: only json output");
    json doc;
    doc["command"] = "verify";
    json params;
    params["family"] = opt.family;
    params["lambda"] = opt.lambda;
    params["kind"] = kind;
    params["re_min"] = opt.re_min;
    params["re_max"] = opt.re_max;
    params["im"] = opt.im;
    params["points"] = opt.points;
    params["tol"] = opt.tol;
    params["quad_order"] = opt.quad_order;
    doc["params"] = params;
    doc["results"] = report_json(rep, kind == "powered");
    doc["max_rel_dev"] = rep.max_rel_dev;
    doc["passed"] = rep.passed;
    emit(opt, doc.dump(2) + "\n");
    return rep.passed ? 0 : 1;
}

int cmd_moments(const Options& opt) {
    std::string method = opt.method;
    if (method.empty() || method == "auto") {
        if (opt.family == 1) method = "rational";
        else if (opt.family == 2) method = "hyp3f2";
        else method = "series";
    }
    auto table = gcst::moments::moment_table(opt.family, opt.lambda, opt.order, method);

    if (opt.format == "csv") {
        std::string text = "order,value,exact\n";
        for (auto& e : table.entries) {
            text += std::to_string(e.order) + "," + fmt_double(e.value) + ",";
            if (e.exact) text += gcst::to_string(*e.exact);
            text += "\n";
        }
        emit(opt, text);
        return 0;
    }
    json doc;
    doc["command"] = "moments";
    json params;
    params["family"] = opt.family;
    params["lambda"] = opt.lambda;
    params["n"] = opt.order;
    params["method"] = method;
    doc["params"] = params;
    json rows = json::array();
    for (auto& e : table.entries) {
        json row;
        row["order"] = e.order;
        row["value"] = e.value;
        if (e.exact) row["exact"] = gcst::to_string(*e.exact);
        rows.push_back(row);
    }
    doc["results"] = rows;
    emit(opt, doc.dump(2) + "\n");
    return 0;
}

int cmd_cumulants(const Options& opt) {
    auto series = gcst::freeprob::series_k(opt.family, opt.n, opt.order);
    if (opt.format == "csv") {
        std::string text = "index,coeff\n";
        for (size_t j = 0; j < series.coeffs.size(); ++j)
            text += std::to_string(j) + "," + gcst::to_string(series.coeffs[j]) + "\n";
        emit(opt, text);
        return 0;
    }
    json doc;
    doc["command"] = "cumulants";
    json params;
    params["family"] = opt.family;
    params["n"] = opt.n;
    params["order"] = opt.order;
    doc["params"] = params;
    json rows = json::array();
    for (size_t j = 0; j < series.coeffs.size(); ++j) {
        json row;
        row["index"] = j;
        row["coeff"] = gcst::to_string(series.coeffs[j]);
        rows.push_back(row);
    }
    json res;
    res["leading"] = "1/z";
    res["coeffs"] = rows;
    doc["results"] = res;
    emit(opt, doc.dump(2) + "\n");
    return 0;
}

int cmd_density(const Options& opt) {
    auto spec = gcst::measures::family(opt.family, opt.lambda);
    int pts = opt.points;
    std::vector<std::pair<double, double>> values;
    for (int i = 0; i < pts; ++i) {
        double x = -2.0 + 4.0 * (i + 1) / (pts + 1);
        values.emplace_back(x, gcst::measures::nu_density(spec, x));
    }
    if (opt.format == "csv") {
        std::string text = "x,density\n";
        for (auto& [x, d] : values) text += fmt_double(x) + "," + fmt_double(d) + "\n";
        emit(opt, text);
        return 0;
    }
    json doc;
    doc["command"] = "density";
    json params;
    params["family"] = opt.family;
    params["lambda"] = opt.lambda;
    params["points"] = pts;
    doc["params"] = params;
    json rows = json::array();
    for (auto& [x, d] : values) {
        json row;
        row["x"] = x;
        row["density"] = d;
        rows.push_back(row);
    }
    doc["results"] = rows;
    emit(opt, doc.dump(2) + "\n");
    return 0;
}

int cmd_invert(const Options& opt) {
    cplx w(opt.re_min, opt.im);
    bool allow = opt.method == "newton";
    cplx z = gcst::freeprob::invert_utilde(opt.family, opt.n, w, allow);
    double residual = std::abs(gcst::freeprob::utilde_value(opt.family, opt.n, z) - w);
    if (opt.format != "json") throw gcst::UnsupportedError("invert: only json output");
    json doc;
    doc["command"] = "invert";
    json params;
    params["family"] = opt.family;
    params["n"] = opt.n;
    params["w"] = fmt_complex(w);
    params["method"] = allow ? "newton" : "radical";
    doc["params"] = params;
    json res;
    res["z"] = fmt_complex(z);
    res["residual"] = residual;
    doc["results"] = res;
    emit(opt, doc.dump(2) + "\n");
    return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--family", opt.family, "Family id (1-4)");
    cmd->add_option("--lambda", opt.lambda, "Family parameter lambda")
        ->each([&](const std::string&) { opt.lambda_given = true; });
    cmd->add_option("--n", opt.n, "Power / polynomial degree");
    cmd->add_option("--order", opt.order, "Max order (moments, cumulants)");
    cmd->add_option("--method", opt.method, "Computation route");
    cmd->add_option("--re-min", opt.re_min, "Grid: smallest real part (or Re w)")
        ->each([&](const std::string&) { opt.re_min_given = true; });
    cmd->add_option("--re-max", opt.re_max, "Grid: largest real part");
    cmd->add_option("--im", opt.im, "Grid: imaginary part (or Im w)");
    cmd->add_option("--points", opt.points, "Grid size")
        ->each([&](const std::string&) { opt.points_given = true; });
    cmd->add_option("--tol", opt.tol, "Verification tolerance");
    cmd->add_option("--quad-order", opt.quad_order, "Quadrature order");
    cmd->add_option("--format", opt.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out, "Write output to file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral-measure transform and moment toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto* families = app.add_subcommand("families", "List the measure family table");
    auto* verify = app.add_subcommand("verify", "Cross-check a transform identity on a grid");
    verify->add_option("--kind", opt.kind, "powered or markov");
    auto* markov = app.add_subcommand("markov-check", "Shorthand for verify --kind markov");
    auto* moments = app.add_subcommand("moments", "Moment table of the image measure");
    auto* cumulants = app.add_subcommand("cumulants", "Laurent coefficients of the K-transform");
    auto* density = app.add_subcommand("density", "Sample the image-measure density");
    auto* invert = app.add_subcommand("invert", "Invert the auxiliary map at w = re + im*i");
    for (auto* cmd : {families, verify, markov, moments, cumulants, density, invert})
        add_common(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (families->parsed()) return cmd_families(opt);
        if (verify->parsed()) return cmd_verify(opt, opt.kind);
        if (markov->parsed()) return cmd_verify(opt, "markov");
        if (moments->parsed()) return cmd_moments(opt);
        if (cumulants->parsed()) return cmd_cumulants(opt);
        if (density->parsed()) {
            if (!opt.points_given) opt.points = 9; // grid default is too coarse here
            return cmd_density(opt);
        }
        if (invert->parsed()) {
            if (!opt.re_min_given) opt.re_min = 0.25; // grid default is outside |w| <= 0.35
            return cmd_invert(opt);
        }
    } catch (const gcst::DomainError& e) { // includes NotAProbabilityMeasure
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const gcst::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const gcst::Error& e) { // convergence / numerical / branch
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
