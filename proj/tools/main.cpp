// Command-line front end: identity checks, constructions, cohomology
// dimensions, exhaustive searches and family verification over algebra
// description files. Exit codes: 0 pass/true, 1 fail/false (witness in the
// report), 2 usage or parse error.

#include "jjalg/algfile.hpp"
#include "jjalg/cohomology.hpp"
#include "jjalg/deformation.hpp"
#include "jjalg/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace jjalg;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "jjalg-report/1";

/// Command-line misuse (unknown --what etc.); exits 2, unlike a failed check.
struct usage_error : error {
    using error::error;
};

json witness_json(const Check& c) {
    json w;
    w["condition"] = c.condition;
    json idx = json::array();
    for (std::size_t i : c.where) idx.push_back(i + 1);  // 1-based like e1..en
    w["indices"] = idx;
    w["value"] = c.value;
    return w;
}

struct Report {
    bool json_mode = false;
    json data;
    std::string text;

    int finish(const std::string& command, bool ok) {
        data["schema"] = kSchema;
        data["command"] = command;
        data["ok"] = ok;
        if (json_mode)
            std::cout << data.dump(2) << "\n";
        else
            std::cout << text;
        return ok ? 0 : 1;
    }
};

Scalar parse_rational_flag(const std::string& s, Field f) {
    std::size_t slash = s.find('/');
    long num = std::stol(slash == std::string::npos ? s : s.substr(0, slash));
    long den = slash == std::string::npos ? 1 : std::stol(s.substr(slash + 1));
    Scalar q = Scalar::fraction(num, den);
    return f.is_rational() ? q : q.to_field(f);
}

StructureKind kind_for_species(Species s) {
    switch (s) {
        case Species::jj: return StructureKind::jacobi_jordan;
        case Species::prejj_left: return StructureKind::left_prejj;
        case Species::prejj_right: return StructureKind::right_prejj;
        case Species::plain:
            throw usage_error("species 'plain' declares no identity; pass --kind");
    }
    throw error("bad species");
}

StructureKind parse_kind(const std::string& k) {
    if (k == "commutative") return StructureKind::commutative;
    if (k == "jacobi-jordan") return StructureKind::jacobi_jordan;
    if (k == "left-prejj") return StructureKind::left_prejj;
    if (k == "right-prejj") return StructureKind::right_prejj;
    if (k == "comm-assoc") return StructureKind::comm_assoc;
    throw usage_error("unknown --kind '" + k + "'");
}

bool is_prejj(Species s) { return s == Species::prejj_left || s == Species::prejj_right; }

LinearMap require_map(const std::optional<LinearMap>& m, const char* what) {
    if (!m) throw precondition_error(std::string("file has no ") + what + " section");
    return *m;
}

JJRelRB jj_context(const AlgebraFile& f) {
    return JJRelRB(f.representation(), require_map(f.op_t, "[operator T]"));
}

PreJJRelRB prejj_context(const AlgebraFile& f) {
    return PreJJRelRB(f.birepresentation(), require_map(f.op_t, "[operator T]"));
}

AlgebraFile reduce_file_mod(const AlgebraFile& f, Field target, bool allow_small_char) {
    AlgebraFile out = f;
    out.algebra = f.alg().to_field(target, allow_small_char);
    for (Matrix& m : out.rho) m = m.to_field(target);
    for (Matrix& m : out.mu) m = m.to_field(target);
    if (out.op_t) out.op_t = out.op_t->to_field(target);
    if (out.map_n) out.map_n = out.map_n->to_field(target);
    if (out.map_z) out.map_z = out.map_z->to_field(target);
    if (out.element_x) out.element_x = out.element_x->to_field(target);
    return out;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_line(const Matrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) s += "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += " ";
            s += m.at(r, c).str();
        }
    }
    return s;
}

int run_check(const AlgebraFile& f, const std::string& what, const std::string& kind_flag,
              Report& rep) {
    Check c;
    if (what == "structure") {
        StructureKind k = kind_flag.empty() ? kind_for_species(f.species) : parse_kind(kind_flag);
        c = check_structure(f.alg(), k);
        rep.data["kind"] = kind_name(k);
    } else if (what == "rep") {
        c = is_prejj(f.species) ? is_birepresentation(f.birepresentation())
                                : is_representation(f.representation());
    } else if (what == "rbo") {
        c = is_prejj(f.species) ? is_relative_rb(prejj_context(f))
                                : is_relative_rb(jj_context(f));
    } else if (what == "nijenhuis") {
        bool ok = is_nijenhuis_operator(f.alg(), require_map(f.map_n, "[map N]"));
        c = ok ? Check::pass() : Check::fail("nijenhuis", {}, "identity fails");
    } else if (what == "matched-pair") {
        if (!f.algebra2) throw precondition_error("file has no [algebra2] section");
        if (is_prejj(f.species))
            c = is_matched_pair(PreJJMatchedPair{f.alg(), *f.algebra2, f.rho1, f.mu1, f.rho2,
                                                 f.mu2});
        else
            c = is_matched_pair(JJMatchedPair{f.alg(), *f.algebra2, f.rho1, f.rho2});
    } else if (what == "deformation-generator") {
        LinearMap z = require_map(f.map_z, "[map Z]");
        c = is_prejj(f.species) ? generates_rb_deformation(prejj_context(f), z)
                                : generates_rb_deformation(jj_context(f), z);
    } else if (what == "nijenhuis-element") {
        if (!f.element_x) throw precondition_error("file has no [element x] section");
        bool ok = is_prejj(f.species) ? is_nijenhuis_element(prejj_context(f), *f.element_x)
                                      : is_nijenhuis_element(jj_context(f), *f.element_x);
        c = ok ? Check::pass() : Check::fail("nijenhuis_element", {}, "a condition fails");
    } else {
        throw usage_error("unknown --what '" + what + "'");
    }
    rep.data["witness"] = c.ok ? json(nullptr) : witness_json(c);
    rep.text = c.ok ? "pass\n" : "FAIL: " + c.describe(f.alg().labels()) + "\n";
    return rep.finish("check", c.ok);
}

int run_construct(const AlgebraFile& f, const std::string& what, const std::string& t_flag,
                  const std::string& lambda_flag, Report& rep) {
    Field fl = f.alg().field();
    AlgebraFile out;
    out.name = f.name.empty() ? what : f.name + "-" + what;
    if (what == "semidirect") {
        out.species = f.species;
        out.algebra = is_prejj(f.species) ? semidirect_product(f.birepresentation())
                                          : semidirect_product(f.representation());
    } else if (what == "bicrossed") {
        if (!f.algebra2) throw precondition_error("file has no [algebra2] section");
        out.species = f.species;
        out.algebra = is_prejj(f.species)
                          ? bicrossed_product(PreJJMatchedPair{f.alg(), *f.algebra2, f.rho1,
                                                               f.mu1, f.rho2, f.mu2})
                          : bicrossed_product(JJMatchedPair{f.alg(), *f.algebra2, f.rho1, f.rho2});
    } else if (what == "tensor") {
        if (!f.algebra2) throw precondition_error("file has no [algebra2] section");
        out.species = Species::jj;
        FDAlgebra t = tensor_product_jj(f.alg(), *f.algebra2);
        // tensor labels are composite; rebuild on default labels
        out.algebra = FDAlgebra(t.field(), t.dim(), t.structure(), {}, true);
    } else if (what == "subadjacent") {
        out.species = Species::jj;
        out.algebra = sub_adjacent(f.alg());
    } else if (what == "induced") {
        if (is_prejj(f.species)) {
            PreJJInduced ind = induced_structures(prejj_context(f));
            out.species = Species::prejj_left;
            out.algebra = ind.v_alg;
            out.has_representation = true;
            out.rep_dim = f.alg().dim();
            out.rho = ind.a_rep.rho;
            out.mu = ind.a_rep.mu;
        } else {
            JJInduced ind = induced_structures(jj_context(f));
            out.species = Species::jj;
            out.algebra = ind.v_alg;
            out.has_representation = true;
            out.rep_dim = f.alg().dim();
            out.rho = ind.a_rep.rho;
        }
    } else if (what == "AN") {
        out.species = f.species;
        out.algebra = deformed_algebra(f.alg(), require_map(f.map_n, "[map N]"),
                                       kind_for_species(f.species));
    } else if (what == "NT") {
        Scalar lambda = parse_rational_flag(lambda_flag.empty() ? "0" : lambda_flag, fl);
        NTResult nt = is_prejj(f.species)
                          ? build_nt(f.birepresentation(), require_map(f.op_t, "[operator T]"),
                                     lambda)
                          : build_nt(f.representation(), require_map(f.op_t, "[operator T]"),
                                     lambda);
        out.species = f.species;
        out.algebra = nt.semidirect;
        out.map_n = nt.nt;
    } else if (what == "trivial-deformation") {
        if (!f.element_x) throw precondition_error("file has no [element x] section");
        Scalar t = parse_rational_flag(t_flag.empty() ? "1" : t_flag, fl);
        out = f;
        out.name = f.name + "-deformed";
        out.op_t = is_prejj(f.species) ? trivial_deformation(prejj_context(f), *f.element_x, t)
                                       : trivial_deformation(jj_context(f), *f.element_x, t);
    } else {
        throw usage_error("unknown --what '" + what + "'");
    }
    std::string text = serialize(out);
    rep.data["algebra_file"] = text;
    rep.text = text;
    return rep.finish("construct", true);
}

int run_cohomology(const AlgebraFile& f, std::size_t degree, Report& rep) {
    CohomologyDims dims{};
    if (is_prejj(f.species)) {
        PreJJComplex cx(prejj_context(f));
        dims = cx.cohomology(degree);
    } else {
        JJComplex cx(jj_context(f));
        dims = cx.cohomology(degree);
    }
    rep.data["degree"] = degree;
    rep.data["dim_C"] = dims.dim_c;
    rep.data["dim_A"] = dims.dim_a;
    rep.data["dim_Z"] = dims.dim_z;
    rep.data["dim_B"] = dims.dim_b;
    rep.data["dim_H"] = dims.dim_h;
    rep.text = "degree " + std::to_string(degree) + ": dim C = " + std::to_string(dims.dim_c) +
               ", dim A = " + std::to_string(dims.dim_a) + ", dim Z = " +
               std::to_string(dims.dim_z) + ", dim B = " + std::to_string(dims.dim_b) +
               ", dim H = " + std::to_string(dims.dim_h) + "\n";
    return rep.finish("cohomology", true);
}

int run_search(const AlgebraFile& file, const std::string& what, std::uint32_t p,
               std::uint64_t budget, unsigned workers, bool allow_small_char, Report& rep) {
    Field target = Field::prime(p);
    if (!file.alg().field().is_rational() && !(file.alg().field() == target))
        throw precondition_error("file field does not match --field");
    AlgebraFile f =
        file.alg().field() == target ? file : reduce_file_mod(file, target, allow_small_char);
    search::EnumOptions opt{budget, workers};

    std::vector<Matrix> mats;
    std::vector<Vec> vecs;
    if (what == "rbo") {
        if (is_prejj(f.species))
            mats = search::enumerate_relative_rb(f.birepresentation(), opt);
        else
            mats = search::enumerate_relative_rb(f.representation(), opt);
    } else if (what == "nijenhuis") {
        mats = search::enumerate_nijenhuis(f.alg(), opt);
    } else if (what == "nijenhuis-elements") {
        if (is_prejj(f.species))
            vecs = search::enumerate_nijenhuis_elements(prejj_context(f), opt);
        else
            vecs = search::enumerate_nijenhuis_elements(jj_context(f), opt);
    } else {
        throw usage_error("unknown --what '" + what + "'");
    }

    rep.data["field"] = target.str();
    rep.data["count"] = mats.size() + vecs.size();
    json sols = json::array();
    for (const Matrix& m : mats) sols.push_back(matrix_json(m));
    for (const Vec& v : vecs) {
        json row = json::array();
        for (std::size_t i = 0; i < v.size(); ++i) row.push_back(v[i].str());
        sols.push_back(row);
    }
    rep.data["solutions"] = sols;
    rep.text = "count " + std::to_string(mats.size() + vecs.size()) + "\n";
    for (const Matrix& m : mats) rep.text += matrix_line(m) + "\n";
    for (const Vec& v : vecs) rep.text += format_lincomb(v, f.alg().labels()) + "\n";
    return rep.finish("search", true);
}

int run_verify_family(const AlgebraFile& f, const std::string& grid, Report& rep) {
    if (!f.family) throw precondition_error("file has no [operator family] section");
    std::size_t dots = grid.find("..");
    if (dots == std::string::npos)
        throw usage_error("--grid expects <lo>..<hi>, e.g. -2..2");
    long lo = std::stol(grid.substr(0, dots));
    long hi = std::stol(grid.substr(dots + 2));
    if (lo > hi) throw usage_error("--grid: lo > hi");
    Field fl = f.alg().field();

    std::function<Check(const LinearMap&)> pred;
    if (is_prejj(f.species)) {
        BiRepresentation r = f.birepresentation();
        pred = [r](const LinearMap& t) { return is_relative_rb(PreJJRelRB(r, t)); };
    } else {
        Representation r = f.representation();
        pred = [r](const LinearMap& t) { return is_relative_rb(JJRelRB(r, t)); };
    }
    std::vector<std::vector<Scalar>> axes(f.family->params.size(),
                                          search::integer_axis(lo, hi, fl));
    search::FamilyReport fr = search::verify_family(
        [&](const std::vector<Scalar>& params) { return f.family->instantiate(params); }, pred,
        axes);

    json points = json::array();
    for (const auto& pt : fr.points) {
        json p;
        json params = json::array();
        for (const Scalar& s : pt.params) params.push_back(s.str());
        p["params"] = params;
        p["pass"] = pt.pass;
        if (!pt.pass) p["witness"] = pt.witness;
        points.push_back(p);
        std::string line = "(";
        for (std::size_t i = 0; i < pt.params.size(); ++i)
            line += (i ? "," : "") + pt.params[i].str();
        line += pt.pass ? ") pass" : ") FAIL " + pt.witness;
        rep.text += line + "\n";
    }
    rep.data["points"] = points;
    rep.data["failures"] = fr.failures;
    rep.text += "failures " + std::to_string(fr.failures) + "\n";
    return rep.finish("verify-family", fr.all_pass());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with (pre-)Jacobi-Jordan algebras, relative Rota-Baxter "
                 "operators, zigzag cohomology and linear deformations"};
    app.require_subcommand(1);
    bool json_mode = false;
    bool allow_small_char = false;
    app.add_flag("--json", json_mode, "emit a machine-readable report");
    app.add_flag("--allow-small-char", allow_small_char,
                 "permit algebras over F_2 and F_3 (excluded by default)");

    std::string file_path, what, kind, t_flag, lambda_flag, grid;
    std::size_t degree = 1;
    std::uint32_t field_p = 5;
    std::uint64_t budget = 10000000;
    unsigned workers = 0;

    CLI::App* check =
        app.add_subcommand("check", "verify an identity; exit 1 with a witness on failure");
    check->fallthrough();
    check->add_option("file", file_path)->required();
    check->add_option("--what", what,
                      "structure|rep|rbo|nijenhuis|matched-pair|deformation-generator|"
                      "nijenhuis-element")
        ->required();
    check->add_option("--kind", kind, "override the structure kind checked");

    CLI::App* construct = app.add_subcommand("construct", "build a derived object and print it");
    construct->fallthrough();
    construct->add_option("file", file_path)->required();
    construct->add_option("--what", what,
                          "semidirect|bicrossed|tensor|subadjacent|induced|AN|NT|"
                          "trivial-deformation")
        ->required();
    construct->add_option("--t", t_flag, "deformation parameter (rational)");
    construct->add_option("--lambda", lambda_flag, "N_T block parameter (rational)");

    CLI::App* cohom = app.add_subcommand("cohomology", "zigzag cohomology dimensions");
    cohom->fallthrough();
    cohom->add_option("file", file_path)->required();
    cohom->add_option("--degree", degree)->required();

    CLI::App* search_cmd = app.add_subcommand("search", "exhaustive F_p searches");
    search_cmd->fallthrough();
    search_cmd->add_option("file", file_path)->required();
    search_cmd->add_option("--what", what, "rbo|nijenhuis|nijenhuis-elements")->required();
    search_cmd->add_option("--field", field_p, "prime p");
    search_cmd->add_option("--budget", budget, "candidate budget");
    search_cmd->add_option("--workers", workers, "worker threads (0 = auto)");

    CLI::App* family = app.add_subcommand("verify-family", "check a parametric operator family");
    family->fallthrough();
    family->add_option("file", file_path)->required();
    family->add_option("--grid", grid, "<lo>..<hi> integer range for every parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    rep.json_mode = json_mode;
    std::optional<AlgebraFile> loaded;
    try {
        loaded = load_algebra_file(file_path, ParseOptions{allow_small_char});
    } catch (const error& e) {
        std::cerr << "cannot load " << file_path << ": " << e.what() << "\n";
        return 2;
    }
    try {
        AlgebraFile& f = *loaded;
        if (check->parsed()) return run_check(f, what, kind, rep);
        if (construct->parsed()) return run_construct(f, what, t_flag, lambda_flag, rep);
        if (cohom->parsed()) return run_cohomology(f, degree, rep);
        if (search_cmd->parsed())
            return run_search(f, what, field_p, budget, workers, allow_small_char, rep);
        if (family->parsed()) return run_verify_family(f, grid, rep);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 1;
    } catch (const singular_matrix_error& e) {
        std::cerr << "singular: " << e.what() << "\n";
        return 1;
    } catch (const budget_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
