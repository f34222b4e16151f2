#include "tencode/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "tencode/fixtures.hpp"
#include "tencode/golden.hpp"
#include "tencode/invariants.hpp"
#include "tencode/io.hpp"
#include "tencode/moments.hpp"
#include "tencode/roth.hpp"

namespace tencode {

namespace {

struct Options {
    std::string input;
    std::string family;
    bool dual = false;
    std::string format = "json";
    std::optional<std::uint64_t> objects, rank_nodes;
    std::size_t mu = 2, nu = 0;
    int field = 2;
    std::vector<int> modulus;
    std::string fixtures;
};

Family family_arg(const Options& o) {
    if (o.family.empty()) throw InputError("input.family", "--family is required");
    try {
        return parse_family(o.family);
    } catch (const std::exception&) {
        throw InputError("input.family", "unknown family '" + o.family + "'");
    }
}

Limits limits_from(const Options& o) {
    Limits l;
    if (const char* env = std::getenv("TENCODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (!*env || *end || v == 0) throw InputError("input.args", "TENCODE_BUDGET must be a positive integer");
        l.objects = v;
    }
    if (o.objects) l.objects = *o.objects;
    if (o.rank_nodes) l.rank_nodes = *o.rank_nodes;
    if (l.objects == 0 || l.rank_nodes == 0) throw InputError("input.args", "budgets must be positive");
    return l;
}

Json opt_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json report(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

Json cmd_params(const Options& o, const Limits& lim) {
    auto c = read_code_file(o.input);
    auto p = code_params(c, lim);
    Json j = report("params");
    j["field"] = field_to_json(*c.field());
    j["dims"] = p.dims;
    j["length"] = p.length;
    j["dim"] = p.dim;
    j["min_distance"] = opt_size(p.min_distance);
    j["max_rank"] = p.max_rank;
    j["tensor_rank"] = p.tensor_rank;
    Json cl = Json::array();
    for (const auto& s : c.closure()) cl.push_back(Json{{"dim", s.dim()}, {"basis", subspace_to_json(s)}});
    j["closure"] = cl;
    return j;
}

Json cmd_weights(const Options& o, const Limits& lim) {
    auto c = read_code_file(o.input);
    Family fam = family_arg(o);
    if (o.dual && fam == Family::Perfect)
        throw InputError("input.family", "dual weights are not defined for the perfect family");
    Json j = report("weights");
    j["family"] = family_name(fam);
    j["dual"] = o.dual;
    j["dim"] = c.dim();
    j["profile"] = o.dual ? dual_weight_profile(c, fam, lim) : weight_profile(c, fam, lim);
    return j;
}

Json cmd_moments(const Options& o, const Limits& lim) {
    auto c = read_code_file(o.input);
    Family fam = family_arg(o);
    auto lat = build_family_lattice(fam, c.field(), c.dims(), lim);
    std::vector<Integer> orphans;
    auto w = member_weights(c, lat, lim, &orphans);
    auto b = member_moments(c, lat);
    auto zeta = bw_transform(lat, w, Direction::WeightsToMoments);
    auto table = binomial_moments(c, fam, lim);
    auto cases = moment_case_violations(c, fam, table, lim);

    Json first = nullptr;
    for (std::size_t m = 0; m < lat.members.size() && first.is_null(); ++m)
        for (std::size_t jj = 0; jj < b[m].size(); ++jj)
            if (b[m][jj] != zeta[m][jj]) {
                first = Json{{"member", anticode_to_json(lat.members[m])}, {"j", jj},
                             {"moment", rational_to_json(b[m][jj])}, {"zeta_of_weights", rational_to_json(zeta[m][jj])}};
                break;
            }
    if (first.is_null() && !cases.empty()) first = Json{{"case", cases.front()}};

    Json orph = Json::array();
    for (const auto& x : orphans) orph.push_back(integer_to_json(x));
    Json j = report("moments");
    j["family"] = family_name(fam);
    j["dim"] = c.dim();
    j["length"] = c.length();
    j["moments"] = table_to_json(table);
    j["weights"] = table_to_json(aggregate(lat, w));
    j["orphan_subcodes"] = orph;
    j["verified"] = first.is_null();
    j["first_counterexample"] = first;
    return j;
}

Json cmd_macwilliams(const Options& o, const Limits& lim) {
    auto c = read_code_file(o.input);
    Family fam = family_arg(o);
    if (fam == Family::Perfect) throw InputError("input.family", "the identity needs a dual family; perfect has none");
    auto r = macwilliams_check(c, fam, lim);
    std::size_t pairs = dual_intersection_violations(c, fam, lim);
    Json j = report("macwilliams");
    j["family"] = family_name(fam);
    j["dual_family"] = family_name(dual_family(fam));
    j["cells"] = r.cells;
    j["verified"] = r.holds && pairs == 0;
    j["first_counterexample"] =
        r.holds ? Json(nullptr)
                : Json{{"a", *r.bad_a}, {"j", *r.bad_j}, {"lhs", rational_to_json(r.lhs)}, {"rhs", rational_to_json(r.rhs)}};
    j["intersection_violations"] = pairs;
    j["code_moments"] = table_to_json(r.code_moments);
    j["dual_moments"] = table_to_json(r.dual_moments);
    return j;
}

Json cmd_tbmd(const Options& o, const Limits& lim) {
    auto c = read_code_file(o.input);
    Family fam = family_arg(o);
    if (fam == Family::Perfect) throw InputError("input.family", "TBMD is not defined for the perfect family");
    auto r = tbmd_classify(c, fam, lim);
    Json j = report("tbmd");
    j["family"] = family_name(fam);
    j["length"] = c.length();
    j["t"] = r.t;
    j["dual_s1"] = opt_size(r.dual_s1);
    j["tbmd"] = r.tbmd;
    j["minimal_j"] = opt_size(r.minimal_j);
    auto bad = profile_violations(c, fam, r.t);
    j["verified"] = bad.empty();
    j["first_counterexample"] = bad.empty() ? Json(nullptr) : Json(bad.front());
    return j;
}

Json cmd_roth(const Options& o, const Limits& lim) {
    RothParams params;
    try {
        std::optional<std::vector<int>> mod;
        if (!o.modulus.empty()) mod = o.modulus;
        params = roth_params(o.mu, o.nu ? o.nu : o.mu + 1, o.field, mod);
    } catch (const std::invalid_argument& e) {
        throw InputError("input.args", e.what());
    }
    auto m = build_matrices(params, lim);
    auto code = roth_code(params, lim);
    auto ker = roth_code_kernel(params, lim);
    bool syndromes = true;
    for (const auto& x : code.basis())
        for (Elem s : roth_syndrome(params, m, x)) syndromes = syndromes && s == 0;
    const Field& e = *params.ext;
    auto mat = [&](const Matrix& a) {
        Json rows = Json::array();
        for (const auto& r : a) rows.push_back(vec_to_json(e, r));
        return rows;
    };
    auto pairs = [](const std::vector<IndexPair>& v) {
        Json a = Json::array();
        for (auto [l, s] : v) a.push_back(Json::array({l, s}));
        return a;
    };
    Json j = report("roth");
    j["label"] = params.label();
    j["extension"] = field_to_json(e);
    j["S"] = pairs(m.sets.s);
    j["S_bar"] = pairs(m.sets.s_bar);
    j["H"] = mat(m.h);
    j["G"] = mat(m.g);
    j["alpha_dual"] = vec_to_json(e, Vec(m.alpha_dual.elems.begin(), m.alpha_dual.elems.end()));
    j["beta_dual"] = vec_to_json(e, Vec(m.beta_dual.elems.begin(), m.beta_dual.elems.end()));
    j["code"] = code_to_json(code);
    j["verified"] = code == ker && syndromes;
    return j;
}

// Shipped fixture files name the built-in example they encode.
std::optional<TensorCode> builtin_code(const std::string& name) {
    using namespace fixtures;
    if (name == "closure") return closure_example().code;
    if (name == "gabidulin-C") return gabidulin_example().c;
    if (name == "gabidulin-D") return gabidulin_example().d;
    if (name == "roth-2-3-3") {
        auto ex = roth_small();
        return TensorCode(ex.params.base, ex.params.dims(), ex.generators);
    }
    if (name == "roth-3-4-3") {
        auto ex = roth_large();
        return TensorCode(ex.params.base, ex.params.dims(), ex.generators);
    }
    if (name == "symmetric") {
        auto ex = symmetric_example();
        return TensorCode(ex.field, ex.dims, {ex.x});
    }
    if (name == "incomparable-M") {
        auto ex = incomparable_example();
        return TensorCode(ex.field, ex.dims, {ex.m});
    }
    if (name == "incomparable-N") {
        auto ex = incomparable_example();
        return TensorCode(ex.field, ex.dims, {ex.n});
    }
    return std::nullopt;
}

Json cmd_verify(const Options& o, const Limits& lim, bool& all_pass) {
    auto results = run_golden_suite(lim);
    if (!o.fixtures.empty()) {
        namespace fs = std::filesystem;
        if (!fs::is_directory(o.fixtures)) throw InputError("input.io", "not a directory: " + o.fixtures);
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(o.fixtures))
            if (e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& p : files) {
            GoldenResult r{"fixture." + p.filename().string(), false, ""};
            try {
                auto j = read_json_file(p.string());
                auto code = code_from_json(j);
                std::string name = j.value("name", "");
                auto want = builtin_code(name);
                if (!want) {
                    r.detail = "unknown fixture name '" + name + "'";
                } else {
                    r.pass = code == *want;
                    r.detail = r.pass ? "matches " + name : "differs from " + name;
                }
            } catch (const std::exception& e) {
                r.detail = e.what();
            }
            results.push_back(r);
        }
    }
    Json list = Json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        passed += r.pass;
        list.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    all_pass = passed == results.size();
    Json j = report("verify-suite");
    j["results"] = list;
    j["passed"] = passed;
    j["failed"] = results.size() - passed;
    return j;
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Aligned key/value layout; numeric tables are printed as right-aligned grids.
void print_table(const Json& j, std::ostream& out) {
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        std::string key = it.key();
        key.resize(width, ' ');
        bool grid = v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& r) {
            return r.is_array() && std::all_of(r.begin(), r.end(), [](const Json& x) { return x.is_primitive(); });
        });
        if (it.key() == "results") {
            out << key << '\n';
            for (const auto& r : v)
                out << "  " << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << scalar(r["name"]) << "  "
                    << scalar(r["detail"]) << '\n';
        } else if (grid) {
            std::size_t cw = 1;
            for (const auto& r : v)
                for (const auto& x : r) cw = std::max(cw, scalar(x).size());
            out << key << '\n';
            for (const auto& r : v) {
                out << ' ';
                for (const auto& x : r) {
                    std::string s = scalar(x);
                    out << ' ' << std::string(cw - s.size(), ' ') << s;
                }
                out << '\n';
            }
        } else {
            out << key << "  " << scalar(v) << '\n';
        }
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Invariants of tensor codes over finite fields", "tencode"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--budget-objects", o.objects, "Cap on enumerated objects (overrides TENCODE_BUDGET)");
    app.add_option("--budget-rank-nodes", o.rank_nodes, "Cap on nodes of one rank search");

    auto file_cmd = [&](const char* name, const char* help, bool family) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.input, "Code JSON file")->required();
        if (family) sub->add_option("--family", o.family, "cl | ps | dualcl | delsarte | ravagnani");
        return sub;
    };
    auto* params = file_cmd("params", "Dimension, distance, ranks and closure", false);
    auto* weights = file_cmd("weights", "Generalized tensor weights", true);
    weights->add_flag("--dual", o.dual, "Profile over the dual family");
    auto* moments = file_cmd("moments", "Binomial moments and weight distribution", true);
    auto* macw = file_cmd("macwilliams", "Check the MacWilliams identity for moments", true);
    auto* tbmd = file_cmd("tbmd", "TBMD classification", true);
    auto* roth = app.add_subcommand("roth", "Roth construction C(mu, nu, 3; p)");
    roth->add_option("--mu", o.mu, "Side length and extension degree")->required();
    roth->add_option("--nu", o.nu, "Label parameter (default mu + 1)");
    roth->add_option("--field", o.field, "Base prime field order");
    roth->add_option("--modulus", o.modulus, "Modulus coefficients c_0 .. c_mu of the extension")->delimiter(',');
    auto* verify = app.add_subcommand("verify-suite", "Run the golden examples");
    verify->add_option("--fixtures", o.fixtures, "Also check the code files in this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        out << error_json("input.args", e.what()).dump(2) << '\n';
        err << "tencode: " << e.what() << '\n';
        return kExitInput;
    }

    Json result;
    int code = kExitOk;
    try {
        Limits lim = limits_from(o);
        if (params->parsed()) result = cmd_params(o, lim);
        else if (weights->parsed()) result = cmd_weights(o, lim);
        else if (moments->parsed()) result = cmd_moments(o, lim);
        else if (macw->parsed()) result = cmd_macwilliams(o, lim);
        else if (tbmd->parsed()) result = cmd_tbmd(o, lim);
        else if (roth->parsed()) result = cmd_roth(o, lim);
        else if (verify->parsed()) {
            bool ok = true;
            result = cmd_verify(o, lim, ok);
            if (!ok) code = kExitFailed;
        }
    } catch (const InputError& e) {
        Json extra = Json::object();
        if (e.position()) extra["position"] = *e.position();
        result = error_json(e.code(), e.what(), extra);
        code = kExitInput;
    } catch (const BudgetExceeded& e) {
        Json extra{{"lower", e.lower() >= 0 ? Json(e.lower()) : Json(nullptr)},
                   {"upper", e.upper() >= 0 ? Json(e.upper()) : Json(nullptr)}};
        result = error_json("budget.exceeded", e.what(), extra);
        code = kExitBudget;
    } catch (const std::invalid_argument& e) {
        result = error_json("input.invalid", e.what());
        code = kExitInput;
    } catch (const std::exception& e) {
        result = error_json("internal", e.what());
        code = kExitInput;
    }

    if (result.contains("error")) err << "tencode: " << result["error"]["message"].get<std::string>() << '\n';
    if (o.format == "table" && !result.contains("error")) print_table(result, out);
    else out << result.dump(2) << '\n';
    return code;
}

} // namespace tencode
