#include "germlab/io.hpp"

#include <fstream>

namespace germlab::io {

json ideal_to_json(const Ideal& ideal) {
    json j;
    j["vars"] = ideal.vars();
    json gens = json::array();
    for (const auto& g : ideal.gens())
        gens.push_back(g.str());
    j["gens"] = gens;
    return j;
}

Ideal ideal_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<Polynomial> gens;
    for (const auto& s : j.at("gens"))
        gens.push_back(parse_polynomial(s.get<std::string>(), vars));
    return Ideal(vars, std::move(gens));
}

GermFile germ_from_json(const json& j) {
    int n = j.at("n").get<int>();
    int p = j.at("p").get<int>();
    std::vector<Branch> branches;
    for (const auto& bj : j.at("branches")) {
        Branch b;
        b.vars = bj.at("vars").get<std::vector<std::string>>();
        for (const auto& c : bj.at("components"))
            b.components.push_back(parse_polynomial(c.get<std::string>(), b.vars));
        branches.push_back(std::move(b));
    }
    std::vector<std::string> target;
    if (j.contains("target_vars"))
        target = j.at("target_vars").get<std::vector<std::string>>();
    GermFile file{MapGerm(n, p, std::move(branches), target), std::nullopt};

    if (j.contains("params") && !j.at("params").empty()) {
        std::vector<std::string> params = j.at("params").get<std::vector<std::string>>();
        const json& uc = j.at("unfolded_components");
        std::vector<std::vector<Polynomial>> comps;
        // flat list accepted for single-branch germs
        bool nested = !uc.empty() && uc[0].is_array();
        size_t bi = 0;
        for (const auto& b : file.germ.branches()) {
            std::vector<std::string> ring = b.vars;
            ring.insert(ring.end(), params.begin(), params.end());
            std::vector<Polynomial> list;
            const json& src = nested ? uc.at(bi) : uc;
            for (const auto& c : src)
                list.push_back(parse_polynomial(c.get<std::string>(), ring));
            comps.push_back(std::move(list));
            ++bi;
            if (!nested)
                break;
        }
        file.unfolding = Unfolding(file.germ, params, std::move(comps));
    }
    return file;
}

json germ_to_json(const MapGerm& g) {
    json j;
    j["n"] = g.n();
    j["p"] = g.p();
    json branches = json::array();
    for (const auto& b : g.branches()) {
        json bj;
        bj["vars"] = b.vars;
        json comps = json::array();
        for (const auto& c : b.components)
            comps.push_back(c.str());
        bj["components"] = comps;
        branches.push_back(bj);
    }
    j["branches"] = branches;
    j["target_vars"] = g.target_vars();
    return j;
}

json unfolding_to_json(const Unfolding& f) {
    json j = germ_to_json(f.base());
    j["params"] = f.params();
    json uc = json::array();
    for (const auto& branch : f.branch_components()) {
        json list = json::array();
        for (const auto& c : branch)
            list.push_back(c.str());
        uc.push_back(list);
    }
    j["unfolded_components"] = uc;
    return j;
}

json origin_dim_to_json(const OriginDim& d) {
    json j;
    if (d.empty) {
        j["dim"] = "empty";
    } else {
        j["dim"] = d.dim;
        if (!d.certified_local)
            j["global_only"] = true;
    }
    return j;
}

json locus_report_to_json(const LocusReport& rep) {
    json j;
    j["ideal"] = ideal_to_json(rep.ideal);
    j["dim_at_origin"] = origin_dim_to_json(rep.dim);
    j["K_finite"] = rep.K_finite;
    if (rep.K_finite_warning)
        j["warning"] = "germ failed the K-finiteness test; result may be meaningless";
    if (rep.dim_delta_expected.has_value())
        j["dim_delta_expected"] = *rep.dim_delta_expected;
    return j;
}

json multiple_point_space_to_json(const MultiplePointSpace& mps) {
    json j;
    j["k"] = mps.k;
    j["kind"] = mps.kind == MpsKind::Strict ? "strict" : "gaffney";
    j["branch_tuple"] = mps.branch_tuple;
    j["vars"] = mps.ambient;
    json gens = json::array();
    for (const auto& g : mps.ideal.gens())
        gens.push_back(g.str());
    j["gens"] = gens;
    j["dim_at_origin"] = origin_dim_to_json(mps.dim);
    j["expected_dim"] = mps.expected_dim;
    j["swap_same_branch"] = mps.swap_same_branch;
    if (!mps.provenance.empty())
        j["provenance"] = mps.provenance;
    return j;
}

json dim_correctness_to_json(const DimCorrectnessReport& rep) {
    auto entries = [](const std::vector<DimEntry>& list) {
        json out = json::array();
        for (const auto& e : list) {
            json ej;
            ej["k"] = e.k;
            if (e.empty)
                ej["dim"] = "empty";
            else
                ej["dim"] = *e.dim;
            ej["expected"] = e.expected;
            ej["ok"] = e.ok;
            if (!e.certified_local)
                ej["global_only"] = true;
            out.push_back(ej);
        }
        return out;
    };
    json j;
    j["gaffney"] = entries(rep.gaffney);
    j["strict"] = entries(rep.strict);
    j["dimensionally_correct"] = rep.gaffney_ok;
    j["strictly_dimensionally_correct"] = rep.strict_ok;
    if (!rep.provenance.empty())
        j["provenance"] = rep.provenance;
    return j;
}

json degree_window_to_json(const DegreeWindow& w) {
    json j;
    j["theorem"] = w.theorem_name();
    j["degrees"] = w.degrees;
    j["n"] = w.n;
    j["p"] = w.p;
    if (w.d)
        j["d"] = *w.d;
    else
        j["d"] = "empty";
    return j;
}

json analyze_report_to_json(const AnalyzeReport& rep) {
    json j;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["branches"] = rep.branch_count;
    j["K_finite"] = rep.K_finite;
    j["corank"] = rep.corank_value;
    if (rep.d)
        j["d"] = *rep.d;
    else
        j["d"] = "empty";
    j["d_source"] = rep.d_source;
    if (rep.dim_correctness)
        j["dimensional_correctness"] = dim_correctness_to_json(*rep.dim_correctness);
    json windows = json::array();
    for (const auto& [w, target] : rep.windows) {
        json wj = degree_window_to_json(w);
        wj["bounds"] = target;
        windows.push_back(wj);
    }
    j["windows"] = windows;
    if (!rep.refusals.empty())
        j["refusals"] = rep.refusals;
    if (!rep.warnings.empty())
        j["warnings"] = rep.warnings;
    if (!rep.provenance.empty())
        j["provenance"] = rep.provenance;
    return j;
}

QMat matrix_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("matrix JSON must be an array of rows");
    size_t rows = j.size();
    size_t cols = rows ? j[0].size() : 0;
    QMat m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols)
            throw std::invalid_argument("ragged matrix JSON");
        for (size_t c = 0; c < cols; ++c) {
            const json& cell = j[r][c];
            m.at(r, c) = cell.is_string() ? rational_from_string(cell.get<std::string>())
                                          : Rational(cell.get<long>());
        }
    }
    return m;
}

json matrix_to_json(const QMat& m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

MonodromyMatrix monodromy_matrix_from_json(const json& j) {
    MonodromyMatrix m;
    m.degree = j.value("degree", 0);
    m.matrix = matrix_from_json(j.at("matrix"));
    return m;
}

json jordan_to_json(const JordanModule& m) {
    json out = json::array();
    for (const auto& [lambda, sizes] : m.blocks())
        for (const auto& [size, count] : sizes) {
            json e;
            e["order"] = lambda.order;
            e["exponent"] = lambda.exponent;
            e["size"] = size;
            e["count"] = count;
            out.push_back(e);
        }
    return out;
}

namespace {

std::vector<QMat> matrices_from_json(const json& j) {
    std::vector<QMat> out;
    for (const auto& m : j)
        out.push_back(matrix_from_json(m));
    return out;
}

} // namespace

EquivariantComplex complex_from_json(const json& j, int k) {
    EquivariantComplex c;
    c.k = k;
    c.dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("d"))
        c.d = matrices_from_json(j.at("d"));
    if (j.contains("action"))
        for (const auto& trans : j.at("action"))
            c.action.push_back(matrices_from_json(trans));
    return c;
}

bool model_json_is_absolute(const json& j) { return j.value("mode", "pair") == "absolute"; }

ICSSModel icss_model_from_json(const json& j) {
    ICSSModel m;
    m.k_max = j.at("k_max").get<int>();
    for (const auto& cj : j.at("columns")) {
        IcssColumn col;
        col.k = cj.at("k").get<int>();
        col.fiber = complex_from_json(cj.at("fiber"), col.k);
        if (cj.contains("total") && cj.at("total").is_object())
            col.total = complex_from_json(cj.at("total"), col.k);
        if (cj.contains("inclusion"))
            col.restriction = matrices_from_json(cj.at("inclusion"));
        if (cj.contains("monodromy"))
            col.fiber_monodromy = matrices_from_json(cj.at("monodromy"));
        m.columns.push_back(std::move(col));
    }
    if (j.contains("face_maps"))
        for (const auto& fj : j.at("face_maps")) {
            IcssFaceMap f;
            f.k = fj.at("k").get<int>();
            f.j = fj.at("j").get<int>();
            f.fiber = matrices_from_json(fj.at("fiber"));
            if (fj.contains("total"))
                f.total = matrices_from_json(fj.at("total"));
            m.face_maps.push_back(std::move(f));
        }
    return m;
}

AbsoluteIcssModel absolute_model_from_json(const json& j) {
    AbsoluteIcssModel m;
    m.k_max = j.at("k_max").get<int>();
    m.models.resize(static_cast<size_t>(m.k_max));
    std::vector<bool> seen(static_cast<size_t>(m.k_max), false);
    for (const auto& cj : j.at("columns")) {
        int k = cj.at("k").get<int>();
        if (k < 1 || k > m.k_max)
            throw std::invalid_argument("absolute model: column k out of range");
        m.models[static_cast<size_t>(k - 1)] = complex_from_json(cj.at("fiber"), k);
        seen[static_cast<size_t>(k - 1)] = true;
    }
    for (bool s : seen)
        if (!s)
            throw std::invalid_argument("absolute model: missing a column");
    if (j.contains("face_maps"))
        for (const auto& fj : j.at("face_maps")) {
            IcssFaceMap f;
            f.k = fj.at("k").get<int>();
            f.j = fj.at("j").get<int>();
            f.fiber = matrices_from_json(fj.at("fiber"));
            m.face_maps.push_back(std::move(f));
        }
    return m;
}

json icss_result_to_json(const IcssResult& r) {
    json j;
    json pages = json::array();
    for (const auto& p : r.pages) {
        json pj;
        pj["r"] = p.r;
        json entries = json::array();
        for (const auto& [ij, dim] : p.entries) {
            json e;
            e["i"] = ij.first;
            e["j"] = ij.second;
            e["dim"] = dim;
            auto mit = p.monodromy.find(ij);
            if (mit != p.monodromy.end())
                e["jordan"] = jordan_to_json(mit->second);
            entries.push_back(e);
        }
        pj["entries"] = entries;
        json diffs = json::array();
        for (const auto& [ij, mat] : p.differentials) {
            json e;
            e["from_i"] = ij.first;
            e["from_j"] = ij.second;
            e["matrix"] = matrix_to_json(mat);
            diffs.push_back(e);
        }
        pj["differentials"] = diffs;
        pages.push_back(pj);
    }
    j["pages"] = pages;
    j["reduced_betti"] = r.total_betti;
    j["stabilized_at_page"] = r.stabilized_at;
    return j;
}

json icss_monodromy_to_json(const IcssMonodromyReport& r) {
    json j = icss_result_to_json(r.icss);
    json degrees = json::array();
    for (const auto& d : r.degrees) {
        json e;
        e["degree"] = d.degree;
        json supp = json::array();
        for (const auto& ev : d.supp_superset) {
            json s;
            s["order"] = ev.order;
            s["exponent"] = ev.exponent;
            supp.push_back(s);
        }
        e["supp_superset"] = supp;
        e["J_upper_bound"] = d.j_upper;
        e["J_lower_bound"] = d.j_lower;
        e["exact"] = d.exact;
        if (d.exact_data)
            e["jordan"] = jordan_to_json(*d.exact_data);
        degrees.push_back(e);
    }
    j["monodromy_by_degree"] = degrees;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace germlab::io
