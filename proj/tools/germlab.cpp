// germlab: exact analysis of finite holomorphic map-germs from the command line.

#include "germlab/io.hpp"
#include "germlab/models.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace germlab;
using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    std::string format = "json";
};

json envelope(const std::string& command, json inputs, json results,
              std::vector<std::string> warnings = {}, std::vector<std::string> provenance = {}) {
    json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    if (!warnings.empty())
        j["warnings"] = warnings;
    if (!provenance.empty())
        j["provenance"] = provenance;
    return j;
}

void emit(const json& report, const Output& out, const std::string& text_summary) {
    if (out.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text_summary;
    }
}

void apply_budget_env() {
    if (const char* env = std::getenv("GERMLAB_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            GroebnerConfig::global().spair_budget = static_cast<size_t>(v);
        else
            std::cerr << "germlab: ignoring malformed GERMLAB_BUDGET\n";
    }
}

std::string window_text(const DegreeWindow& w) {
    std::string s = w.theorem_name() + ": {";
    bool first = true;
    for (int q : w.degrees) {
        if (!first)
            s += ", ";
        s += std::to_string(q);
        first = false;
    }
    s += "}";
    return s;
}

int cmd_analyze(const std::string& file, const std::string& dspec, int kmax,
                const Output& out) {
    io::GermFile gf = io::germ_from_json(io::load_json_file(file));
    AnalyzeOptions opts;
    if (dspec == "empty")
        opts.d_empty = true;
    else if (dspec == "auto-bigerm")
        opts.d_bigerm_auto = true;
    else
        opts.d = std::stoi(dspec);
    opts.k_max = kmax;
    if (gf.unfolding)
        opts.unfolding = &*gf.unfolding;
    AnalyzeReport rep = analyze(gf.germ, opts);
    json inputs;
    inputs["file"] = file;
    inputs["d"] = dspec;
    json report = envelope("analyze", inputs, io::analyze_report_to_json(rep));
    std::string text = "analyze " + file + "\n";
    text += "  K-finite: " + std::string(rep.K_finite ? "yes" : "no") +
            ", corank: " + std::to_string(rep.corank_value) + "\n";
    for (const auto& we : rep.windows)
        text += "  " + window_text(we.window) + " bounds " + we.target + "\n";
    for (const auto& r : rep.refusals)
        text += "  refused: " + r + "\n";
    for (const auto& w : rep.warnings)
        text += "  warning: " + w + "\n";
    emit(report, out, text);
    return 0;
}

int cmd_mpoints(const std::string& file, int k, const std::string& route, bool strict,
                const Output& out) {
    io::GermFile gf = io::germ_from_json(io::load_json_file(file));
    std::vector<MultiplePointSpace> spaces;
    if (strict) {
        spaces = strict_multiple_points(gf.germ, k);
    } else {
        const Unfolding* unf = nullptr;
        std::optional<Unfolding> canonical;
        if (route == "unfolding" || gf.unfolding) {
            if (gf.unfolding)
                unf = &*gf.unfolding;
            else if (is_hypersurface_bigerm(gf.germ)) {
                canonical = bigerm_stabilization(gf.germ);
                unf = &*canonical;
            } else {
                throw std::invalid_argument("route=unfolding needs one in the germ file");
            }
        } else if (gf.germ.is_multigerm() && is_hypersurface_bigerm(gf.germ)) {
            canonical = bigerm_stabilization(gf.germ);
            unf = &*canonical;
        }
        if (gf.germ.is_multigerm()) {
            if (!unf)
                throw std::invalid_argument("multigerm Gaffney spaces need an unfolding");
            spaces = gaffney_multiple_points_tuples(*unf, k);
        } else {
            spaces = {gaffney_multiple_points(gf.germ, k,
                                              route == "divided-diff" ? nullptr : unf)};
        }
    }
    json results = json::array();
    std::string text = "mpoints " + file + " k=" + std::to_string(k) +
                       (strict ? " (strict)\n" : "\n");
    for (const auto& s : spaces) {
        results.push_back(io::multiple_point_space_to_json(s));
        std::string dim = s.dim.empty ? "empty" : std::to_string(s.dim.dim);
        text += "  tuple [";
        for (size_t i = 0; i < s.branch_tuple.size(); ++i)
            text += (i ? "," : "") + std::to_string(s.branch_tuple[i] + 1);
        text += "]: dim " + dim + ", expected " + std::to_string(s.expected_dim);
        if (!s.dim.empty)
            text += s.dim.dim == s.expected_dim ? ", correct" : ", NOT correct";
        text += "\n";
    }
    json inputs;
    inputs["file"] = file;
    inputs["k"] = k;
    inputs["strict"] = strict;
    emit(envelope("mpoints", inputs, results), out, text);
    return 0;
}

int cmd_icss(const std::string& file, const Output& out) {
    json model_json = io::load_json_file(file);
    json inputs;
    inputs["file"] = file;
    if (io::model_json_is_absolute(model_json)) {
        AbsoluteIcssModel model = io::absolute_model_from_json(model_json);
        IcssResult res = run_absolute_icss(model);
        json results = io::icss_result_to_json(res);
        if (model_json.contains("image_cohomology")) {
            std::vector<int> want = model_json.at("image_cohomology").get<std::vector<int>>();
            results["augmented_complex_exact"] = check_augmented_exactness(model, want);
        }
        std::string text = "icss (absolute) " + file + "\n  H = [";
        for (size_t i = 0; i < res.total_betti.size(); ++i)
            text += (i ? ", " : "") + std::to_string(res.total_betti[i]);
        text += "]\n";
        emit(envelope("icss", inputs, results), out, text);
        return 0;
    }
    ICSSModel model = io::icss_model_from_json(model_json);
    IcssResult res = run_icss(model);
    std::string text = "icss " + file + "\n  reduced H(Y_delta) = [";
    for (size_t i = 0; i < res.total_betti.size(); ++i)
        text += (i ? ", " : "") + std::to_string(res.total_betti[i]);
    text += "]\n  stabilized at page " + std::to_string(res.stabilized_at) + "\n";
    emit(envelope("icss", inputs, io::icss_result_to_json(res)), out, text);
    return 0;
}

int cmd_monodromy(const std::string& file, bool propagate, const Output& out) {
    json inputs;
    inputs["file"] = file;
    if (propagate) {
        ICSSModel model = io::icss_model_from_json(io::load_json_file(file));
        IcssMonodromyReport rep = propagate_icss_monodromy(model);
        std::string text = "monodromy propagation " + file + "\n";
        for (const auto& d : rep.degrees) {
            text += "  degree " + std::to_string(d.degree) + ": J <= " +
                    std::to_string(d.j_upper) + (d.exact ? " (exact)" : "") + "\n";
        }
        emit(envelope("monodromy", inputs, io::icss_monodromy_to_json(rep)), out, text);
        return 0;
    }
    MonodromyMatrix m = io::monodromy_matrix_from_json(io::load_json_file(file));
    JordanModule data = jordan_data(m.matrix);
    json results;
    results["degree"] = m.degree;
    results["jordan"] = io::jordan_to_json(data);
    results["J"] = data.max_block_size();
    json supp = json::array();
    for (const auto& ev : data.support()) {
        json s;
        s["order"] = ev.order;
        s["exponent"] = ev.exponent;
        supp.push_back(s);
    }
    results["supp"] = supp;
    std::string text = "monodromy " + file + "\n  J = " +
                       std::to_string(data.max_block_size()) + ", supp = {";
    bool first = true;
    for (const auto& ev : data.support()) {
        text += (first ? "" : ", ") + ev.str();
        first = false;
    }
    text += "}\n";
    emit(envelope("monodromy", inputs, results), out, text);
    return 0;
}

int cmd_bigerm(const std::string& source, const std::string& emit_kind,
               const std::string& betti_spec, int mu, const std::string& outfile,
               const Output& out) {
    Polynomial g;
    std::ifstream probe(source);
    if (probe.good()) {
        json j = io::load_json_file(source);
        if (j.is_object() && j.contains("poly")) {
            if (j.contains("vars"))
                g = parse_polynomial(j.at("poly").get<std::string>(),
                                     j.at("vars").get<std::vector<std::string>>());
            else
                g = parse_polynomial(j.at("poly").get<std::string>());
        } else if (j.is_string()) {
            g = parse_polynomial(j.get<std::string>());
        } else {
            throw std::invalid_argument("polynomial file needs a \"poly\" entry");
        }
    } else {
        g = parse_polynomial(source);
    }

    json inputs;
    inputs["hypersurface"] = g.str();
    inputs["emit"] = emit_kind;

    if (emit_kind == "germ") {
        MapGerm bg = bigerm_from_hypersurface(g);
        json gj = io::germ_to_json(bg);
        json file = gj;
        {
            // ship the canonical stabilization along with the germ
            Unfolding stab = bigerm_stabilization(bg);
            json uj = io::unfolding_to_json(stab);
            file["params"] = uj["params"];
            file["unfolded_components"] = uj["unfolded_components"];
        }
        if (!outfile.empty()) {
            io::save_json_file(outfile, file);
            emit(envelope("bigerm", inputs, json{{"written", outfile}}), out,
                 "bigerm germ written to " + outfile + "\n");
        } else {
            emit(envelope("bigerm", inputs, file), out, file.dump(2) + "\n");
        }
        return 0;
    }
    if (emit_kind != "model")
        throw std::invalid_argument("--emit must be germ or model");

    std::vector<int> betti;
    std::vector<std::string> provenance;
    if (!betti_spec.empty()) {
        std::stringstream ss(betti_spec);
        std::string item;
        while (std::getline(ss, item, ','))
            betti.push_back(std::stoi(item));
    } else {
        // built-in A_mu profile: mu vanishing (n-1)-spheres, from the Milnor
        // algebra oracle unless given explicitly
        long mu_val = mu;
        if (mu_val < 0) {
            std::vector<Polynomial> jac;
            for (const auto& v : g.vars())
                jac.push_back(g.derivative(v));
            auto dim = vspace_dim(Ideal(g.vars(), jac));
            if (!dim)
                throw std::invalid_argument(
                    "non-isolated hypersurface singularity: pass --betti explicitly");
            mu_val = *dim;
            provenance.push_back("mu from the Milnor algebra oracle");
        }
        betti.assign(g.vars().size(), 0);
        betti[0] = 1;
        betti[g.vars().size() - 1] += static_cast<int>(mu_val);
    }
    ICSSModel model = bigerm_pair_model(betti, true);
    json mj;
    mj["k_max"] = 2;
    json col;
    col["k"] = 2;
    json fiber;
    fiber["dims"] = model.columns[0].fiber.dims;
    json dlist = json::array();
    for (const auto& d : model.columns[0].fiber.d)
        dlist.push_back(io::matrix_to_json(d));
    fiber["d"] = dlist;
    json action = json::array();
    json trans = json::array();
    for (const auto& a : model.columns[0].fiber.action[0])
        trans.push_back(io::matrix_to_json(a));
    action.push_back(trans);
    fiber["action"] = action;
    col["fiber"] = fiber;
    col["total"] = "cone";
    json mono = json::array();
    for (const auto& h : model.columns[0].fiber_monodromy)
        mono.push_back(io::matrix_to_json(h));
    col["monodromy"] = mono;
    mj["columns"] = json::array({col});
    mj["face_maps"] = json::array();

    if (!outfile.empty()) {
        io::save_json_file(outfile, mj);
        emit(envelope("bigerm", inputs, json{{"written", outfile}}, {}, provenance), out,
             "bigerm model written to " + outfile + "\n");
    } else {
        emit(envelope("bigerm", inputs, mj, {}, provenance), out, mj.dump(2) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"germlab: exact computer algebra for finite map-germs"};
    app.require_subcommand(1);
    apply_budget_env();

    Output out;

    auto* analyze_cmd = app.add_subcommand("analyze", "connectivity windows for a germ");
    std::string analyze_file, analyze_d = "0";
    int analyze_kmax = -1;
    analyze_cmd->add_option("file", analyze_file, "germ JSON file")->required();
    analyze_cmd->add_option("--d", analyze_d, "instability dimension: int, empty, auto-bigerm");
    analyze_cmd->add_option("--kmax", analyze_kmax, "largest multiple-point order to check");
    analyze_cmd->add_option("--format", out.format, "json|text");

    auto* mpoints_cmd = app.add_subcommand("mpoints", "multiple point spaces");
    std::string mp_file, mp_route = "auto";
    int mp_k = 2;
    bool mp_strict = false;
    mpoints_cmd->add_option("file", mp_file, "germ JSON file")->required();
    mpoints_cmd->add_option("-k", mp_k, "multiplicity")->required();
    mpoints_cmd->add_option("--route", mp_route, "divided-diff|unfolding|auto");
    mpoints_cmd->add_flag("--strict", mp_strict, "strict multiple point spaces");
    mpoints_cmd->add_option("--format", out.format, "json|text");

    auto* icss_cmd = app.add_subcommand("icss", "run the image-computing spectral sequence");
    std::string icss_file;
    icss_cmd->add_option("file", icss_file, "model JSON file")->required();
    icss_cmd->add_option("--format", out.format, "json|text");

    auto* mono_cmd = app.add_subcommand("monodromy", "Jordan data and bounds");
    std::string mono_file, mono_model;
    mono_cmd->add_option("file", mono_file, "matrix JSON file");
    mono_cmd->add_option("--propagate", mono_model, "ICSS model file with monodromy");
    mono_cmd->add_option("--format", out.format, "json|text");

    auto* bigerm_cmd = app.add_subcommand("bigerm", "hypersurface bi-germ constructions");
    std::string bg_src, bg_emit = "germ", bg_betti, bg_out;
    int bg_mu = -1;
    bigerm_cmd->add_option("--from-hypersurface", bg_src, "polynomial text or file")
        ->required();
    bigerm_cmd->add_option("--emit", bg_emit, "germ|model");
    bigerm_cmd->add_option("--betti", bg_betti, "fiber Betti profile, comma separated");
    bigerm_cmd->add_option("--mu", bg_mu, "Milnor number for the A_mu profile");
    bigerm_cmd->add_option("-o,--output", bg_out, "output file");
    bigerm_cmd->add_option("--format", out.format, "json|text");

    CLI11_PARSE(app, argc, argv);

    try {
        auto start = std::chrono::steady_clock::now();
        int rc = 1;
        if (*analyze_cmd)
            rc = cmd_analyze(analyze_file, analyze_d, analyze_kmax, out);
        else if (*mpoints_cmd)
            rc = cmd_mpoints(mp_file, mp_k, mp_route, mp_strict, out);
        else if (*icss_cmd)
            rc = cmd_icss(icss_file, out);
        else if (*mono_cmd) {
            if (!mono_model.empty())
                rc = cmd_monodromy(mono_model, true, out);
            else if (!mono_file.empty())
                rc = cmd_monodromy(mono_file, false, out);
            else
                throw std::invalid_argument("monodromy needs a matrix file or --propagate");
        } else if (*bigerm_cmd) {
            rc = cmd_bigerm(bg_src, bg_emit, bg_betti, bg_mu, bg_out, out);
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        std::cerr << "germlab: " << elapsed.count() << " ms\n";
        return rc;
    } catch (const ResourceLimitError& e) {
        std::cerr << "germlab: resource limit: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "germlab: parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "germlab: error: " << e.what() << "\n";
        return 2;
    }
}
