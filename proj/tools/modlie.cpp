// modlie: command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 budget exhausted / incomplete,
// 3 internal invariant failure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "modlie/modlie.hpp"

using json = nlohmann::ordered_json;
using namespace modlie;

namespace {

struct Options {
    bool as_json = false;
    std::optional<unsigned long long> budget;
    unsigned threads = 1;
};

unsigned long long solver_budget(const Options& o) {
    if (o.budget) return *o.budget;
    if (const char* env = std::getenv("MODLIE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("MODLIE_BUDGET is not a number: '" + std::string(env) + "'");
        }
    }
    return kDefaultSolverBudget;
}

json algebra_json(const LieAlgebra& g) { return {{"dim", g.dim()}, {"field", g.ctx().describe()}}; }

json series_json(const SeriesReport& s) {
    json j;
    j["dims"] = s.dims();
    j["stabilized"] = s.stabilized;
    j["length"] = s.length ? json(*s.length) : json(nullptr);
    return j;
}

std::string length_text(const SeriesReport& s, const char* what) {
    if (s.length) return std::string(what) + " " + std::to_string(*s.length);
    return "stabilizes at dim " + std::to_string(s.limit().dim());
}

std::string dims_text(const std::vector<std::size_t>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " > " : "") + std::to_string(d[i]);
    return s;
}

json simplicity_json(const SimplicityReport& r) {
    json j{{"verdict", to_string(r.verdict)}, {"method", r.method}, {"closures_checked", r.closures_checked}};
    j["certificate"] = r.certificate ? json(*r.certificate) : json(nullptr);
    j["witness_dim"] = r.witness ? json(r.witness->dim()) : json(nullptr);
    return j;
}

/// Emits the report and returns the exit code.
int emit(const Options& o, const LieAlgebra& g, json result, const std::string& text, double seconds, bool complete = true,
         bool used_budget = false, unsigned long long budget = 0) {
    if (o.as_json) {
        json j;
        j["algebra"] = algebra_json(g);
        j["result"] = std::move(result);
        j["timings"] = {{"seconds", seconds}};
        j["budgets"] = used_budget ? json{{"solver_nodes", budget}} : json::object();
        j["complete"] = complete;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
    return complete ? 0 : 2;
}

class Timer {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

int cmd_validate(const Options& o, const std::string& file) {
    // parse_lie already rejects invalid tables; re-run for the report.
    Timer t;
    const LieAlgebra g = load_lie(file);
    const auto r = validate(g);
    return emit(o, g, {{"ok", r.ok}}, "ok: " + std::to_string(g.dim()) + "-dimensional Lie algebra over F_" + std::to_string(g.ctx().q()) + "\n",
                t.seconds());
}

int cmd_info(const Options& o, const std::string& file) {
    Timer t;
    const LieAlgebra g = load_lie(file);
    const auto ds = series(g, SeriesKind::Derived);
    const auto z = center(g);
    const auto simp = is_simple(g);
    const bool perfect = is_perfect(g);
    json r{{"perfect", perfect}, {"solvable", ds.length.has_value()}, {"derived", series_json(ds)}, {"center_dim", z.dim()},
           {"simplicity", simplicity_json(simp)}};
    std::string text = "dim " + std::to_string(g.dim()) + " over F_" + g.ctx().describe() + "\n";
    text += std::string("perfect: ") + (perfect ? "yes" : "no") + "\n";
    text += "derived series: " + dims_text(ds.dims()) + " (" + length_text(ds, "derived length") + ")\n";
    text += "center dim: " + std::to_string(z.dim()) + "\n";
    text += std::string("simple: ") + to_string(simp.verdict) + " (" + simp.method + ", " + std::to_string(simp.closures_checked) +
            " closures)";
    if (simp.certificate) text += std::string("; constructor certificate: ") + (*simp.certificate ? "simple" : "not simple");
    text += "\n";
    return emit(o, g, std::move(r), text, t.seconds());
}

int cmd_series(const Options& o, const std::string& file) {
    Timer t;
    const LieAlgebra g = load_lie(file);
    const auto ds = series(g, SeriesKind::Derived);
    const auto lc = series(g, SeriesKind::LowerCentral);
    std::vector<std::size_t> upper;
    for (const auto& s : upper_central_series(g)) upper.push_back(s.dim());
    json r{{"derived", series_json(ds)}, {"lower_central", series_json(lc)}, {"upper_central_dims", upper}};
    std::string text = "derived: " + dims_text(ds.dims()) + " (" + length_text(ds, "derived length") + ")\n";
    text += "lower central: " + dims_text(lc.dims()) + " (" + length_text(lc, "nilpotency class") + ")\n";
    std::string up;
    for (std::size_t i = 0; i < upper.size(); ++i) up += (i ? " < " : "") + std::to_string(upper[i]);
    text += "upper central: " + up + "\n";
    return emit(o, g, std::move(r), text, t.seconds());
}

int cmd_der(const Options& o, const std::string& file) {
    Timer t;
    const LieAlgebra g = load_lie(file);
    const DerAlgebra d = derivations(g);
    const auto os = out_solvability(d);
    const auto prof = out_heisenberg_profile(d);
    const auto c = centroid(g);
    const bool cs = c.dim() == 1 && is_simple(g).verdict == Simplicity::Simple;
    json r{{"der_dim", d.der_dim()},         {"inn_dim", d.inn_dim()},     {"out_dim", d.out_dim()},
           {"out_solvable", os.length.has_value()},
           {"out_derived_length", os.length ? json(*os.length) : json(nullptr)},
           {"out_derived_dims", os.dims()},  {"centroid_dim", c.dim()},    {"central_simple", cs},
           {"out_derived_profile",
            {{"dim", prof.derived_dim},
             {"nilpotency_class", prof.nilpotency_class ? json(*prof.nilpotency_class) : json(nullptr)},
             {"center_dim", prof.center_dim ? json(*prof.center_dim) : json(nullptr)}}}};
    std::string text = "dim Der = " + std::to_string(d.der_dim()) + ", dim Inn = " + std::to_string(d.inn_dim()) +
                       ", dim Out = " + std::to_string(d.out_dim()) + "\n";
    text += "Out derived series: " + dims_text(os.dims()) + " (" +
            (os.length ? "solvable, derived length " + std::to_string(*os.length) : std::string("not solvable")) + ")\n";
    text += "dim Out^(1) = " + std::to_string(prof.derived_dim);
    if (prof.derived_dim) {
        text += ", nilpotency class " + (prof.nilpotency_class ? std::to_string(*prof.nilpotency_class) : std::string("-")) +
                ", center dim " + std::to_string(*prof.center_dim);
        if (prof.is_heisenberg3()) text += " (Heisenberg profile)";
    }
    text += "\ncentroid dim " + std::to_string(c.dim()) + "; central simple: " + (cs ? "yes" : "no") + "\n";
    return emit(o, g, std::move(r), text, t.seconds());
}

int cmd_centroid(const Options& o, const std::string& file) {
    Timer t;
    const LieAlgebra g = load_lie(file);
    const auto c = centroid(g);
    const auto s = is_simple(g);
    const bool cs = c.dim() == 1 && s.verdict == Simplicity::Simple;
    json r{{"centroid_dim", c.dim()}, {"simple", to_string(s.verdict)}, {"central_simple", cs}};
    return emit(o, g, std::move(r),
                "centroid dim " + std::to_string(c.dim()) + "; simple: " + to_string(s.verdict) + "; central simple: " + (cs ? "yes" : "no") + "\n",
                t.seconds());
}

json classification_json(const CpaClassification& c) {
    json j{{"tag", to_string(c.tag)}, {"notes", c.notes}};
    if (c.phi) {
        json rows = json::array();
        for (std::size_t i = 0; i < c.phi->rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < c.phi->cols(); ++k) row.push_back(c.phi->ctx().format(c.phi->at(i, k)));
            rows.push_back(row);
        }
        j["phi"] = rows;
    }
    return j;
}

int cmd_cpa(const Options& o, const std::string& file, const std::string& check) {
    Timer t;
    const LieAlgebra g = load_lie(file);
    if (!check.empty()) {
        const SymProduct p = parse_prod(read_file(check), g);
        const CpaCheck c = is_cpa(g, p);
        json r{{"is_cpa", c.ok}};
        std::string text;
        if (c.ok) {
            const auto cl = classify(g, p);
            r["classification"] = classification_json(cl);
            text = std::string("CPA structure: ") + to_string(cl.tag) + "\n";
        } else {
            r["axiom"] = c.axiom;
            r["message"] = c.message;
            text = "not a CPA structure: " + c.message + "\n";
        }
        const int code = emit(o, g, std::move(r), text, t.seconds());
        return c.ok ? code : 1;
    }
    const unsigned long long budget = solver_budget(o);
    const CpaResult res = cpa_all(g, budget);
    json items = json::array();
    std::string names, body;
    for (std::size_t i = 0; i < res.products.size(); ++i) {
        const auto cl = classify(g, res.products[i]);
        json item{{"classification", classification_json(cl)}, {"table", print_prod(res.products[i], 'e', false)}};
        items.push_back(item);
        names += (i ? ", " : "") + std::string(to_string(cl.tag));
        body += "-- structure " + std::to_string(i + 1) + " (" + to_string(cl.tag) + ")\n";
        const std::string tab = print_prod(res.products[i], 'e', false);
        body += tab.empty() ? "all products zero\n" : tab;
    }
    json r{{"count", res.products.size()}, {"linear_dim", res.linear_dim}, {"equations", res.equations}, {"nodes", res.nodes},
           {"structures", items}};
    std::string text = std::to_string(res.products.size()) + " CPA structure" + (res.products.size() == 1 ? "" : "s") + ": " + names + "\n";
    text += body;
    text += "search " + std::string(res.complete ? "complete" : "INCOMPLETE (budget exhausted)") + "; " + std::to_string(res.nodes) + " of " +
            std::to_string(budget) + " nodes; linear stage dim " + std::to_string(res.linear_dim) + "\n";
    return emit(o, g, std::move(r), text, t.seconds(), res.complete, true, budget);
}

int cmd_taut(const Options& o, const std::string& file, bool assert_iso) {
    Timer t;
    const LieAlgebra g = load_lie(file);
    const unsigned long long budget = solver_budget(o);
    TautOptions to;
    to.budget = budget;
    to.assert_out_iso = assert_iso;
    const TautVerdict v = is_taut(g, to);
    json r{{"verdict", to_string(v.tag)}, {"reason", to_string(v.reason)}, {"der_dim", v.der_dim},
           {"inn_dim", v.inn_dim},        {"out_dim", v.out_dim},          {"notes", v.notes}};
    std::string text = to_string(v.tag);
    switch (v.reason) {
        case TautReason::OutZero: text += " (Out(g) = 0)"; break;
        case TautReason::OutSolvablePerfect: text += " (g perfect, Out(g) solvable)"; break;
        case TautReason::OutSmallerSimple: text += " (g simple, dim Out(g) < dim g)"; break;
        case TautReason::NoSplitSection: text += " (no split section; search complete)"; break;
        case TautReason::SplitSectionFound: text += " (split section found)"; break;
        default: text += " (criteria insufficient)"; break;
    }
    text += "\n";
    if (v.search) {
        r["split_search"] = {{"status", to_string(v.search->status)}, {"nodes", v.search->nodes},
                             {"variables", v.search->variables}, {"equations", v.search->equations}};
        text += "split-section search: " + std::string(to_string(v.search->status)) + ", " + std::to_string(v.search->variables) +
                " variables, " + std::to_string(v.search->equations) + " equations, " + std::to_string(v.search->nodes) + " of " +
                std::to_string(budget) + " nodes\n";
        if (!v.search->complete())
            text += "note: exhaustive section search grows exponentially with dim Inn * dim Out; instances with hundreds of "
                    "unknowns over small extension fields are beyond reach.\n";
    }
    if (v.witness) {
        json a = json::array();
        for (std::size_t i = 0; i < v.witness->A.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < v.witness->A.cols(); ++k) row.push_back(g.ctx().format(v.witness->A.at(i, k)));
            a.push_back(row);
        }
        r["section_A"] = a;
    }
    for (const auto& n : v.notes) text += "note: " + n + "\n";
    return emit(o, g, std::move(r), text, t.seconds(), v.complete, v.search.has_value(), budget);
}

int cmd_make(const Options& o, const std::vector<std::string>& args, const std::string& field, unsigned extend, bool restrict_,
             const std::string& out) {
    require(!args.empty(), "make: missing kind (gl, sl, psl, witt, hamiltonian, builtin)");
    const std::string& kind = args[0];
    auto arg_n = [&]() -> std::size_t {
        require(args.size() >= 2, "make " + kind + ": missing size argument");
        try {
            return std::stoul(args[1]);
        } catch (const std::exception&) {
            throw InputError("make " + kind + ": bad size '" + args[1] + "'");
        }
    };
    auto ctx = [&] {
        require(!field.empty(), "make " + kind + ": --field is required");
        return parse_field_spec(field);
    };
    LieAlgebra g;
    if (kind == "gl")
        g = gl(arg_n(), ctx());
    else if (kind == "sl")
        g = sl(arg_n(), ctx());
    else if (kind == "psl")
        g = psl(arg_n(), ctx());
    else if (kind == "witt")
        g = jacobson_witt(static_cast<unsigned>(arg_n()), ctx());
    else if (kind == "hamiltonian")
        g = hamiltonian_p2(ctx());
    else if (kind == "builtin") {
        require(args.size() >= 2, "make builtin: missing name");
        g = builtin(args[1]);
    } else
        throw InputError("make: unknown kind '" + kind + "'");
    if (extend > 1) g = extend_scalars(g, extend);
    if (restrict_) g = restrict_scalars(g);
    const std::string text = print_lie(g);
    if (!out.empty()) {
        std::ofstream f(out);
        require(static_cast<bool>(f), "cannot write '" + out + "'");
        f << text;
    }
    if (o.as_json) return emit(o, g, {{"lie", text}}, "", 0.0);
    if (out.empty()) std::cout << text;
    return 0;
}

int cmd_decompose(const Options& o, const std::string& file, const std::string& prod) {
    Timer t;
    const LieAlgebra g = load_lie(file);
    std::vector<SymProduct> products;
    bool complete = true;
    const unsigned long long budget = solver_budget(o);
    if (!prod.empty()) {
        const SymProduct p = parse_prod(read_file(prod), g);
        const CpaCheck c = is_cpa(g, p);
        require(c.ok, "not a CPA structure: " + c.message);
        products.push_back(p);
    } else {
        const CpaResult res = cpa_all(g, budget);
        complete = res.complete;
        products = res.products;
    }
    json items = json::array();
    std::string text;
    for (std::size_t i = 0; i < products.size(); ++i) {
        const auto cl = classify(g, products[i]);
        json item{{"classification", to_string(cl.tag)}};
        text += "-- structure " + std::to_string(i + 1) + ": " + to_string(cl.tag) + "\n";
        if (!cl.phi) {
            item["notes"] = cl.notes;
            text += "   no inner endomorphism; not decomposed\n";
            items.push_back(item);
            continue;
        }
        const EigenDecomposition e = eigen_decompose(g, *cl.phi);
        const NhReport nh = nh_properties(e);
        const CommutatorReport cf = commutator_formula_check(g, *cl.phi);
        json eig = json::array();
        std::string eigtext;
        for (const auto& [a, s] : e.spaces) {
            eig.push_back({{"eigenvalue", e.field.format(a)}, {"dim", s.dim()}});
            eigtext += " " + e.field.format(a) + ":" + std::to_string(s.dim());
        }
        json signs = json::array();
        std::string signtext;
        for (const auto& d : cf.depths) {
            signs.push_back({{"depth", d.depth}, {"sign", d.sign()}, {"tuples", d.tuples}});
            signtext += " " + std::to_string(d.depth) + ":" + d.sign();
        }
        item["splitting_field"] = e.field.describe();
        item["charpoly"] = e.charpoly.format("X");
        item["eigenspaces"] = eig;
        item["n_dim"] = e.n.dim();
        item["h_dim"] = e.h.dim();
        item["nh_properties"] = {{"componentwise", nh.componentwise},
                                 {"n_inf_annihilates_n", nh.n_inf_annihilates_n},
                                 {"h_metabelian", nh.h_metabelian ? json(*nh.h_metabelian) : json(nullptr)},
                                 {"h_adjoint", nh.h_adjoint ? json(*nh.h_adjoint) : json(nullptr)},
                                 {"all", nh.all()}};
        item["commutator_formula"] = {{"ok", cf.ok}, {"signs", signs}};
        items.push_back(item);
        text += "   charpoly(phi) = " + e.charpoly.format("X") + ", split over F_" + e.field.describe() + "\n";
        text += "   eigenvalues (dim):" + eigtext + "; dim n = " + std::to_string(e.n.dim()) + ", dim h = " + std::to_string(e.h.dim()) + "\n";
        text += "   n/h properties: " + std::string(nh.all() ? "all hold" : "FAILED") + "; commutator formula " +
                (cf.ok ? "holds" : "FAILS") + ", signs" + signtext + "\n";
    }
    text += prod.empty() ? "search " + std::string(complete ? "complete" : "INCOMPLETE (budget exhausted)") + "\n" : "";
    return emit(o, g, {{"structures", items}}, text, t.seconds(), complete, prod.empty(), budget);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modlie: modular Lie algebras over finite fields"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.as_json, "Emit a JSON report");
    app.add_option("--budget", o.budget, "Solver node budget (default 10^7, or MODLIE_BUDGET)");
    app.add_option("--threads", o.threads, "Worker cap (computations are single-threaded; accepted for compatibility)");

    std::string file, check, prod, field, out;
    bool assert_iso = false, restrict_ = false;
    unsigned extend = 1;
    std::vector<std::string> make_args;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, ".lie file")->required();
        sub->add_flag("--json", o.as_json, "Emit a JSON report");
        sub->add_option("--budget", o.budget, "Solver node budget");
        sub->add_option("--threads", o.threads, "Worker cap (ignored)");
    };
    auto* v = app.add_subcommand("validate", "Check alternation and the Jacobi identity");
    add_file(v);
    auto* info = app.add_subcommand("info", "Dimension, series, center and simplicity");
    add_file(info);
    auto* ser = app.add_subcommand("series", "Derived, lower and upper central series");
    add_file(ser);
    auto* der = app.add_subcommand("der", "Der, Inn, Out and the centroid");
    add_file(der);
    auto* cen = app.add_subcommand("centroid", "Centroid and central simplicity");
    add_file(cen);
    auto* cpa = app.add_subcommand("cpa", "Enumerate CPA-structures, or check one with --check");
    add_file(cpa);
    cpa->add_option("--check", check, ".prod file to verify");
    auto* taut = app.add_subcommand("taut", "Decide tautness");
    add_file(taut);
    taut->add_flag("--assert-out-iso", assert_iso, "Assume g is isomorphic to Out(g)");
    auto* make = app.add_subcommand("make", "Write a constructed algebra as a .lie file");
    make->add_option("args", make_args, "gl|sl|psl N, witt M, hamiltonian, builtin NAME")->required();
    make->add_option("--field", field, "Field, e.g. 3 or \"2^2 t^2+t+1\"");
    make->add_option("--extend", extend, "Extend scalars to degree K");
    make->add_flag("--restrict", restrict_, "Restrict scalars to the prime field");
    make->add_option("-o,--output", out, "Output file");
    make->add_flag("--json", o.as_json, "Emit a JSON report");
    auto* dec = app.add_subcommand("decompose", "Eigenspace decomposition g = n + h of inner CPA-structures");
    add_file(dec);
    dec->add_option("prod", prod, ".prod file (default: every structure found by enumeration)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        if (*v) return cmd_validate(o, file);
        if (*info) return cmd_info(o, file);
        if (*ser) return cmd_series(o, file);
        if (*der) return cmd_der(o, file);
        if (*cen) return cmd_centroid(o, file);
        if (*cpa) return cmd_cpa(o, file, check);
        if (*taut) return cmd_taut(o, file, assert_iso);
        if (*make) return cmd_make(o, make_args, field, extend, restrict_, out);
        if (*dec) return cmd_decompose(o, file, prod);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
