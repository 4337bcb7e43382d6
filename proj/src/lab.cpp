#include "cayley/lab.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cayley/bbf.hpp"
#include "cayley/census.hpp"
#include "cayley/paths.hpp"

namespace cayley::lab {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kExperiments = {"census",   "genericity",  "conjugacy", "barriers",
                                               "contraction", "paths",    "bbf"};

GroupSpec spec_from(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("group spec needs a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "free_group" || kind == "free")
        return GroupSpec::free_group(j.at("rank").get<int>());
    if (kind == "cyclic") return GroupSpec::cyclic(j.at("order").get<int>());
    if (kind == "free_product")
        return GroupSpec::free_product(spec_from(j.at("left")), spec_from(j.at("right")));
    if (kind == "direct_product")
        return GroupSpec::direct_product(spec_from(j.at("left")), spec_from(j.at("right")));
    if (kind == "raag") {
        std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        return GroupSpec::raag(std::move(verts), std::move(edges));
    }
    throw std::invalid_argument("unknown group kind '" + kind + "'");
}

json spec_to(const GroupSpec& s) {
    json j;
    switch (s.kind) {
    case GroupSpec::Kind::FreeGroup:
        j["kind"] = "free_group";
        j["rank"] = s.rank;
        break;
    case GroupSpec::Kind::Cyclic:
        j["kind"] = "cyclic";
        j["order"] = s.order;
        break;
    case GroupSpec::Kind::FreeProduct:
    case GroupSpec::Kind::DirectProduct:
        j["kind"] = s.kind == GroupSpec::Kind::FreeProduct ? "free_product" : "direct_product";
        j["left"] = spec_to(*s.left);
        j["right"] = spec_to(*s.right);
        break;
    case GroupSpec::Kind::Raag: {
        j["kind"] = "raag";
        j["vertices"] = s.vertices;
        json edges = json::array();
        for (auto [u, v] : s.edges)
            edges.push_back({s.vertices[static_cast<std::size_t>(u)],
                             s.vertices[static_cast<std::size_t>(v)]});
        j["edges"] = edges;
        break;
    }
    }
    return j;
}

struct PredicateSpec {
    std::string name = "all";
    ElementPredicate fn; // null = all
};

PredicateSpec predicate_from(const GroupModel& m, const json& params) {
    PredicateSpec out;
    out.name = params.value("predicate", "all");
    if (out.name == "all") return out;
    if (out.name == "hyperbolic") out.fn = pred_free_product_hyperbolic();
    else if (out.name == "conjugate_into_factor") out.fn = pred_conj_into_factor();
    else if (out.name == "raag_join_bound") out.fn = pred_raag_join_bound();
    else if (out.name == "raag_rank1") out.fn = pred_raag_rank1_candidate();
    else if (out.name == "barrier_free") {
        BarrierQuery q;
        q.epsilon = params.value("epsilon", 0.0);
        q.big_m = params.value("big_m", 0.0);
        q.f = m.parse(params.at("barrier_word").get<std::string>());
        if (params.contains("power")) q.n_power = params.at("power").get<int>();
        out.fn = pred_barrier_free(q);
    } else {
        throw std::invalid_argument("unknown predicate '" + out.name + "'");
    }
    return out;
}

Budget budget_from(const json& params) {
    Budget b;
    b.max_streamed = params.value("max_streamed", b.max_streamed);
    b.max_retained = params.value("max_retained", b.max_retained);
    b.geodesic_cap = params.value("geodesic_cap", b.geodesic_cap);
    return b;
}

AxisSegment axis_from(const GroupModel& m, const json& j) {
    Elem h = m.parse(j.at("word").get<std::string>());
    int extent = j.value("extent", 4);
    std::vector<Elem> extras;
    for (const auto& e : j.value("extras", std::vector<std::string>{}))
        extras.push_back(m.parse(e));
    auto ax = build_axis(m, h, extent, extras);
    if (j.contains("translate")) {
        Elem t = m.parse(j.at("translate").get<std::string>());
        ax.points = translate(m, t, ax.points);
    }
    return ax;
}

json exponent_to_json(const ExponentEstimate& e) {
    json j;
    j["value"] = e.value;
    j["method"] = e.method == ExponentEstimate::Method::LogRegression ? "log-regression"
                  : e.method == ExponentEstimate::Method::Ratio       ? "ratio"
                                                                      : "exact-formula";
    j["window"] = {e.window.first, e.window.second};
    j["residual"] = e.residual;
    j["ratio_value"] = e.ratio_value;
    j["methods_agree"] = e.methods_agree;
    return j;
}

json witness_to_json(const GroupModel& m, const ContractionWitness& w) {
    json j;
    j["from"] = m.to_string(w.from);
    j["to"] = m.to_string(w.to);
    j["word"] = m.to_string(Elem{w.word});
    j["dist_to_set"] = w.dist_to_set;
    j["proj_diam"] = w.proj_diam;
    return j;
}

json verdict_to_json(const GroupModel& m, const ContractionVerdict& v) {
    json j;
    j["constant_tested"] = v.constant_tested;
    j["pass"] = v.pass;
    j["geodesics_examined"] = v.geodesics_examined;
    j["exhaustive"] = v.exhaustive;
    if (v.witness) j["witness"] = witness_to_json(m, *v.witness);
    return j;
}

class Outputs {
public:
    Outputs(std::string prefix, RunReport& report) : prefix_(std::move(prefix)), report_(&report) {}

    void write(const std::string& suffix, const std::string& content) {
        std::filesystem::path p(prefix_ + suffix);
        if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
        std::ofstream out(p);
        if (!out) throw std::runtime_error("cannot write " + p.string());
        out << content;
        report_->files.push_back(p.string());
    }

private:
    std::string prefix_;
    RunReport* report_;
};

std::string fmt_double(double v) {
    if (std::isinf(v)) return "inf";
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// CSV-first plotting: the optional "gnuplot" flag emits a companion script.
void maybe_gnuplot(const json& params, Outputs& out, const std::string& csv_name,
                   const std::string& ylabel, int ycol, bool logscale) {
    if (!params.value("gnuplot", false)) return;
    std::ostringstream gp;
    gp << "set datafile separator ','\n";
    gp << "set key off\nset xlabel 'n'\nset ylabel '" << ylabel << "'\n";
    if (logscale) gp << "set logscale y\n";
    gp << "plot '" << csv_name << "' using 1:" << ycol << " skip 1 with linespoints\n";
    out.write("plot.gp", gp.str());
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

void run_census(const GroupModel& m, const json& params, int threads, Outputs& out,
                RunReport& rep) {
    int n_max = params.at("n_max").get<int>();
    auto pred = predicate_from(m, params);
    auto table = census(m, n_max, pred.fn, budget_from(params), threads);

    std::ostringstream csv;
    csv << "n,total,filtered,ratio\n";
    for (const auto& row : table.rows) {
        std::uint64_t f = row.filtered.value_or(row.total);
        csv << row.n << "," << row.total << "," << f << ","
            << fmt_double(row.total ? static_cast<double>(f) / static_cast<double>(row.total) : 0)
            << "\n";
    }
    out.write("census.csv", csv.str());
    maybe_gnuplot(params, out, "census.csv", "count", 2, true);

    int delta = params.value("delta", 0);
    auto est = exponent(table, delta, false);
    json j;
    j["experiment"] = "census";
    j["model"] = m.model_label();
    j["predicate"] = pred.name;
    j["n_max"] = n_max;
    j["delta"] = delta;
    j["exponent"] = exponent_to_json(est);
    if (pred.fn) j["exponent_filtered"] = exponent_to_json(exponent(table, delta, true));
    out.write("report.json", j.dump(2) + "\n");
    rep.lines.push_back("census: exponent " + fmt_double(est.value) + " (ratio " +
                        fmt_double(est.ratio_value) + ")");
}

void run_genericity(const GroupModel& m, const json& params, int threads, Outputs& out,
                    RunReport& rep) {
    int n_max = params.at("n_max").get<int>();
    auto pred = predicate_from(m, params);
    if (!pred.fn) throw std::invalid_argument("genericity needs a non-trivial predicate");
    double thr = params.value("residual_threshold", 0.05);
    auto curve = genericity_curve(m, n_max, pred.fn, budget_from(params), threads, thr);

    std::ostringstream csv;
    csv << "n,total,filtered,ratio\n";
    for (const auto& r : curve.rows)
        csv << r.n << "," << r.total << "," << r.filtered << "," << fmt_double(r.ratio) << "\n";
    out.write("genericity.csv", csv.str());
    maybe_gnuplot(params, out, "genericity.csv", "ratio", 4, true);

    json j;
    j["experiment"] = "genericity";
    j["model"] = m.model_label();
    j["predicate"] = pred.name;
    j["n_max"] = n_max;
    j["decay"] = curve.decay;
    j["residual"] = curve.residual;
    j["exponential_genericity_observed"] = curve.exponential;
    out.write("report.json", j.dump(2) + "\n");
    rep.lines.push_back("genericity: decay " + fmt_double(curve.decay) + ", residual " +
                        fmt_double(curve.residual) +
                        (curve.exponential ? " [exponential genericity observed]" : ""));
}

void run_conjugacy(const GroupModel& m, const json& params, int threads, Outputs& out,
                   RunReport& rep) {
    int n_max = params.at("n_max").get<int>();
    auto pred = predicate_from(m, params);
    auto table = conj_census(m, n_max, pred.fn, budget_from(params), threads);

    std::ostringstream csv;
    csv << "n,classes_total,classes_filtered\n";
    for (const auto& row : table.rows)
        csv << row.n << "," << row.total << "," << row.filtered.value_or(row.total) << "\n";
    out.write("conjugacy.csv", csv.str());
    maybe_gnuplot(params, out, "conjugacy.csv", "classes", 2, true);

    int delta = params.value("delta", 0);
    json j;
    j["experiment"] = "conjugacy";
    j["model"] = m.model_label();
    j["predicate"] = pred.name;
    j["n_max"] = n_max;
    j["exponent_classes"] = exponent_to_json(exponent(table, delta, false));
    if (pred.fn) {
        auto gap = tightness_from_table(table, delta);
        j["exponent_filtered_classes"] = exponent_to_json(gap.subset);
        j["gap"] = gap.gap;
        rep.lines.push_back("conjugacy: class-growth gap " + fmt_double(gap.gap));
    } else {
        rep.lines.push_back("conjugacy: classes counted to " + std::to_string(n_max));
    }
    out.write("report.json", j.dump(2) + "\n");
}

void run_barriers(const GroupModel& m, const json& params, int threads, Outputs& out,
                  RunReport& rep) {
    int n_max = params.at("n_max").get<int>();
    BarrierQuery q;
    q.epsilon = params.value("epsilon", 0.0);
    q.big_m = params.value("big_m", 0.0);
    q.f = m.parse(params.at("barrier_word").get<std::string>());
    if (params.contains("power")) q.n_power = params.at("power").get<int>();
    auto vc = enumerate_V(m, n_max, q, budget_from(params), threads, false);

    std::ostringstream csv;
    csv << "n,sphere_count,v_count,ratio\n";
    CensusTable table;
    table.cumulative = false;
    table.model_label = m.model_label();
    table.filter_label = "barrier-free";
    for (const auto& row : vc.rows) {
        csv << row.n << "," << row.sphere << "," << row.barrier_free << ","
            << fmt_double(row.sphere ? static_cast<double>(row.barrier_free) /
                                           static_cast<double>(row.sphere)
                                     : 0)
            << "\n";
        table.rows.push_back(
            {row.n, row.sphere, row.barrier_free});
    }
    out.write("barriers.csv", csv.str());
    maybe_gnuplot(params, out, "barriers.csv", "barrier-free ratio", 4, false);

    int delta = params.value("delta", 0);
    auto gap = tightness_from_table(table, delta);
    json j;
    j["experiment"] = "barriers";
    j["model"] = m.model_label();
    j["epsilon"] = q.epsilon;
    j["big_m"] = q.big_m;
    j["barrier_word"] = m.to_string(q.f);
    if (q.n_power) j["power"] = *q.n_power;
    j["exponent_V"] = exponent_to_json(gap.subset);
    j["exponent_all"] = exponent_to_json(gap.whole);
    j["gap"] = gap.gap;
    out.write("report.json", j.dump(2) + "\n");
    rep.lines.push_back("barriers: tightness gap " + fmt_double(gap.gap));
}

void run_contraction(const GroupModel& m, const json& params, int, Outputs& out, RunReport& rep) {
    auto ax = axis_from(m, params.at("axis"));
    GeodesicBudget budget;
    budget.radius = params.value("radius", 4);
    budget.geodesics_per_pair = params.value("geodesic_cap", budget.geodesics_per_pair);
    if (params.value("sampled", false)) {
        budget.mode = GeodesicBudget::Mode::Sampled;
        budget.sample_pairs = params.value("sample_pairs", 10000);
        budget.seed = params.value("seed", 0);
    }

    json j;
    j["experiment"] = "contraction";
    j["model"] = m.model_label();
    j["set"] = ax.points.label;
    double c = estimate_contraction_constant(m, ax.points, budget);
    j["estimated_constant"] = std::isinf(c) ? json("inf") : json(c);
    if (params.contains("constant")) {
        double C = params.at("constant").get<double>();
        j["verdict"] = verdict_to_json(m, contraction_verdict(m, ax.points, C, budget));
    } else if (!std::isinf(c)) {
        j["verdict"] = verdict_to_json(m, contraction_verdict(m, ax.points, c, budget));
    } else {
        j["verdict"] =
            verdict_to_json(m, contraction_verdict(m, ax.points, budget.radius, budget));
    }
    out.write("report.json", j.dump(2) + "\n");
    rep.lines.push_back("contraction: estimated constant " + fmt_double(c));
}

void run_paths(const GroupModel& m, const json& params, int, Outputs& out, RunReport& rep) {
    AdmissibleDecomposition dec;
    dec.path = m.parse_word(params.at("path").get<std::string>());
    dec.D = params.at("D").get<double>();
    dec.tau = params.at("tau").get<double>();
    if (params.contains("L")) dec.uniform = {params.at("L").get<double>(),
                                             params.value("Delta", 0.0)};
    for (const auto& mk : params.at("marked")) {
        AdmissibleDecomposition::Marked mark;
        mark.begin = mk.at("begin").get<std::size_t>();
        mark.end = mk.at("end").get<std::size_t>();
        mark.set = axis_from(m, mk.at("axis")).points;
        dec.marked.push_back(std::move(mark));
    }

    auto rep_adm = check_admissible(m, dec);
    json j;
    j["experiment"] = "paths";
    j["model"] = m.model_label();
    // replayable decomposition: path word, marked ranges, point-set labels
    json decomposition;
    decomposition["path"] = m.to_string(Elem{dec.path});
    decomposition["D"] = dec.D;
    decomposition["tau"] = dec.tau;
    json marks = json::array();
    for (const auto& mk : dec.marked)
        marks.push_back({{"begin", mk.begin}, {"end", mk.end}, {"set", mk.set.label}});
    decomposition["marked"] = marks;
    j["decomposition"] = decomposition;
    j["admissible"] = rep_adm.verdict;
    j["vacuous"] = rep_adm.vacuous;
    json legs = json::array();
    for (const auto& l : rep_adm.ll1)
        legs.push_back({{"i", l.i}, {"length", l.length}, {"exempt", l.exempt}, {"ok", l.ok}});
    j["ll1"] = legs;
    json bps = json::array();
    for (const auto& b : rep_adm.bp)
        bps.push_back({{"i", b.i}, {"forward", b.forward}, {"backward", b.backward}, {"ok", b.ok}});
    j["bp"] = bps;
    json lls = json::array();
    for (const auto& l : rep_adm.ll2)
        lls.push_back({{"i", l.i}, {"gap", l.gap}, {"gap_ok", l.gap_ok},
                       {"bounded_ok", l.bounded_ok}, {"ok", l.ok}});
    j["ll2"] = lls;
    if (dec.uniform) j["uniform"] = check_uniform(m, dec);
    j["quasi_geodesic_constant"] = quasi_geodesic_constant(m, dec.path);
    if (params.contains("geodesic")) {
        Word geo = m.parse_word(params.at("geodesic").get<std::string>());
        j["fellow_travel_offset"] = fellow_travel_offset(m, geo, dec);
    }
    out.write("report.json", j.dump(2) + "\n");
    rep.lines.push_back(std::string("paths: admissible = ") + (rep_adm.verdict ? "yes" : "no"));
}

void run_bbf(const GroupModel& m, const json& params, int, Outputs& out, RunReport& rep) {
    std::vector<PointSet> members;
    for (const auto& mem : params.at("members")) members.push_back(axis_from(m, mem).points);
    ProjectionFamily family(m, std::move(members));
    double K = params.at("K").get<double>();
    double N = params.value("N", 2 * K);

    auto pk = build_projection_complex(family, K);
    out.write("complex.csv", graph_to_csv(pk, m));
    auto qts = build_quasi_tree_of_spaces(family, K, N);
    out.write("qts.csv", graph_to_csv(qts, m));
    out.write("complex.json", graph_to_json(pk, family) + "\n");

    json j;
    j["experiment"] = "bbf";
    j["model"] = m.model_label();
    j["K"] = K;
    j["N"] = N;
    double delta = params.value("bottleneck_delta", 1.0);
    auto cert = bottleneck_certify(pk, delta);
    j["bottleneck"] = {{"delta", delta}, {"pass", cert.pass}, {"pairs", cert.pairs_checked}};
    bool geodesic_members = true;
    for (std::size_t a = 0; a < qts.vertices.size(); ++a)
        for (std::size_t b = 0; b < qts.vertices.size(); ++b) {
            if (qts.vertices[a].member != qts.vertices[b].member) continue;
            if (qts.distance(static_cast<int>(a), static_cast<int>(b)) !=
                static_cast<double>(m.distance(qts.vertices[a].point, qts.vertices[b].point)))
                geodesic_members = false;
        }
    j["totally_geodesic_members"] = geodesic_members;
    if (params.contains("standard_path")) {
        const auto& sp = params.at("standard_path");
        auto spr = standard_path_check(qts, family, sp.at("y_member").get<int>(),
                                       m.parse(sp.at("y").get<std::string>()),
                                       sp.at("z_member").get<int>(),
                                       m.parse(sp.at("z").get<std::string>()),
                                       sp.at("K_tilde").get<double>(), sp.at("R").get<double>());
        j["standard_path"] = {{"pass", spr.pass}, {"geodesics", spr.geodesics}};
    }
    out.write("report.json", j.dump(2) + "\n");
    rep.lines.push_back(std::string("bbf: bottleneck ") + (cert.pass ? "pass" : "fail") +
                        ", totally geodesic members " + (geodesic_members ? "yes" : "no"));
}

json parse_config(const std::string& text) {
    json cfg = json::parse(text, nullptr, true, true); // allow comments
    if (!cfg.is_object()) throw std::invalid_argument("config must be a JSON object");
    return cfg;
}

} // namespace

GroupSpec group_spec_from_json(const std::string& json_text) {
    return spec_from(json::parse(json_text));
}

std::string group_spec_to_json(const GroupSpec& spec) { return spec_to(spec).dump(); }

namespace {
std::vector<Diagnostic> validate_impl(const std::string& config_json, bool with_cost_estimate);
}

std::vector<Diagnostic> validate_config(const std::string& config_json) {
    return validate_impl(config_json, true);
}

namespace {
std::vector<Diagnostic> validate_impl(const std::string& config_json, bool with_cost_estimate) {
    std::vector<Diagnostic> out;
    json cfg;
    try {
        cfg = parse_config(config_json);
    } catch (const std::exception& e) {
        out.push_back({"", e.what()});
        return out;
    }

    std::unique_ptr<GroupModel> model;
    if (!cfg.contains("group")) {
        out.push_back({"group", "missing"});
    } else {
        try {
            model = build_model(spec_from(cfg.at("group")));
        } catch (const std::exception& e) {
            out.push_back({"group", e.what()});
        }
    }

    std::string exp = cfg.value("experiment", "");
    if (std::find(kExperiments.begin(), kExperiments.end(), exp) == kExperiments.end())
        out.push_back({"experiment", "unknown experiment '" + exp + "'"});

    json params = cfg.value("params", json::object());
    if (exp == "census" || exp == "genericity" || exp == "conjugacy" || exp == "barriers") {
        if (!params.contains("n_max")) {
            out.push_back({"params.n_max", "missing"});
        } else if (model && with_cost_estimate) {
            // dry-run cost estimate from growth formulas
            int n_max = params.at("n_max").get<int>();
            double predicted;
            if (auto rate = exact_growth_rate(*model)) {
                predicted = 1;
                for (int i = 1; i <= n_max; ++i)
                    predicted += static_cast<double>(model->alphabet_size()) *
                                 std::exp(*rate * (i - 1));
            } else {
                int probe = std::min(n_max, 6);
                auto sizes = sphere_sizes(*model, probe, Budget{});
                predicted = 0;
                for (auto s : sizes) predicted += static_cast<double>(s);
                double last = static_cast<double>(sizes.back());
                double ratio = sizes.size() >= 2 && sizes[sizes.size() - 2] > 0
                                   ? last / static_cast<double>(sizes[sizes.size() - 2])
                                   : 1.0;
                for (int i = probe + 1; i <= n_max; ++i) {
                    last *= ratio;
                    predicted += last;
                }
            }
            Budget b = budget_from(params);
            if (predicted > static_cast<double>(b.max_streamed))
                out.push_back({"params.n_max", "predicted ball size " +
                                                   std::to_string(static_cast<std::uint64_t>(predicted)) +
                                                   " exceeds the streaming cap"});
        }
    }
    if (exp == "barriers" && !params.contains("barrier_word"))
        out.push_back({"params.barrier_word", "missing"});
    if (exp == "contraction" && !params.contains("axis"))
        out.push_back({"params.axis", "missing"});
    if (exp == "paths" && (!params.contains("path") || !params.contains("marked") ||
                           !params.contains("D") || !params.contains("tau")))
        out.push_back({"params", "paths needs path, marked, D, tau"});
    if (exp == "bbf" && (!params.contains("members") || !params.contains("K")))
        out.push_back({"params", "bbf needs members and K"});
    if (cfg.value("threads", 1) < 1) out.push_back({"threads", "must be >= 1"});
    return out;
}
} // namespace

RunReport run_config(const std::string& config_json, const std::string& experiment_override,
                     const std::string& out_override, int threads_override) {
    RunReport rep;
    auto started = std::chrono::steady_clock::now();
    try {
        json cfg = parse_config(config_json);
        if (!experiment_override.empty()) cfg["experiment"] = experiment_override;
        // schema only: the runtime budget enforces resource caps (exit 3)
        auto diags = validate_impl(cfg.dump(), false);
        if (!diags.empty()) {
            rep.exit_code = kConfigError;
            for (const auto& d : diags)
                rep.lines.push_back("config error: " + d.field + ": " + d.message);
            return rep;
        }
        auto model = build_model(spec_from(cfg.at("group")));
        json params = cfg.value("params", json::object());
        int threads = threads_override > 0 ? threads_override : cfg.value("threads", 0);
        if (threads <= 0) {
            if (const char* env = std::getenv("CAYLEY_THREADS")) threads = std::atoi(env);
            if (threads <= 0) threads = 1;
        }
        std::string prefix =
            !out_override.empty() ? out_override : cfg.value("output", std::string("out/run_"));
        Outputs out(prefix, rep);

        std::string exp = cfg.at("experiment").get<std::string>();
        if (exp == "census") run_census(*model, params, threads, out, rep);
        else if (exp == "genericity") run_genericity(*model, params, threads, out, rep);
        else if (exp == "conjugacy") run_conjugacy(*model, params, threads, out, rep);
        else if (exp == "barriers") run_barriers(*model, params, threads, out, rep);
        else if (exp == "contraction") run_contraction(*model, params, threads, out, rep);
        else if (exp == "paths") run_paths(*model, params, threads, out, rep);
        else if (exp == "bbf") run_bbf(*model, params, threads, out, rep);
    } catch (const budget_error& e) {
        rep.exit_code = kBudgetAbort;
        rep.lines.push_back(std::string("budget abort: ") + e.what());
    } catch (const invariant_violation& e) {
        rep.exit_code = kInvariantViolation;
        rep.lines.push_back(std::string("INVARIANT VIOLATION: ") + e.what());
    } catch (const std::exception& e) {
        rep.exit_code = kConfigError;
        rep.lines.push_back(std::string("config error: ") + e.what());
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

} // namespace cayley::lab
