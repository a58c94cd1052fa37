#include "majvote/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "majvote/asymptotics.hpp"
#include "majvote/montecarlo.hpp"

namespace majvote::cli {
namespace {

using nlohmann::json;

/// Bad flags, config values or combinations: exit status 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

constexpr const char* kHeader = "graph,n,theta,p,trials,seed,pe_hat,ci_low,ci_high,limit,bound";

const std::vector<double> kFigureP{0.1, 0.2, 0.3, 0.4};
const std::vector<double> kFigureN{11, 51, 101, 501, 1001, 5001};

/// Shortest decimal that round-trips.
std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string{}; }

/// Flag values after merging: --config supplies defaults, flags override.
class Settings {
public:
    void set(const std::string& key, json value) { values_[key] = std::move(value); }
    bool has(const std::string& key) const { return values_.contains(key) && !values_[key].is_null(); }

    std::string text(const std::string& key) const {
        const json& v = at(key);
        return v.is_string() ? v.get<std::string>() : v.dump();
    }

    double real(const std::string& key) const {
        const json& v = at(key);
        if (v.is_number()) return v.get<double>();
        return parse_real(key, text(key));
    }

    std::uint64_t unsigned_integer(const std::string& key) const {
        const json& v = at(key);
        if (v.is_number_unsigned()) return v.get<std::uint64_t>();
        if (v.is_number_integer() || v.is_number_float()) {
            const double d = v.get<double>();
            if (d < 0 || d != std::floor(d) || d > 1.8e19)
                throw UsageError("--" + key + ": expected a non-negative integer, got " + v.dump());
            return static_cast<std::uint64_t>(d);
        }
        const std::string s = text(key);
        std::uint64_t out = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw UsageError("--" + key + ": expected a non-negative integer, got '" + s + "'");
        return out;
    }

    int integer(const std::string& key) const {
        const std::uint64_t v = unsigned_integer(key);
        if (v > 1000000000ULL) throw UsageError("--" + key + ": value too large");
        return static_cast<int>(v);
    }

    std::vector<double> list(const std::string& key) const {
        const json& v = at(key);
        std::vector<double> out;
        if (v.is_array()) {
            for (const auto& item : v) {
                if (!item.is_number()) throw UsageError("--" + key + ": list entries must be numbers");
                out.push_back(item.get<double>());
            }
            return out;
        }
        std::stringstream ss(text(key));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(parse_real(key, item));
        return out;
    }

private:
    const json& at(const std::string& key) const {
        if (!has(key)) throw UsageError("--" + key + " is required");
        return values_[key];
    }

    static double parse_real(const std::string& key, const std::string& s) {
        double out = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw UsageError("--" + key + ": expected a number, got '" + s + "'");
        return out;
    }

    json values_ = json::object();
};

/// One subcommand's string flags, registered with CLI11 and merged into
/// Settings after parsing.
class FlagSet {
public:
    explicit FlagSet(CLI::App* app) : app_(app) {
        app_->add_option("--config", config_path_, "JSON file whose keys mirror the flags");
    }

    void add(const std::string& key, const std::string& help) {
        keys_.push_back(key);
        options_[key] = app_->add_option("--" + key, raw_[key], help);
    }

    bool parsed() const { return app_->parsed(); }

    Settings settings() const {
        Settings s;
        if (!config_path_.empty()) {
            std::ifstream in(config_path_);
            if (!in) throw UsageError("cannot open config file " + config_path_);
            json doc;
            try {
                doc = json::parse(in);
            } catch (const json::parse_error& e) {
                throw UsageError("config file " + config_path_ + " is not valid JSON");
            }
            if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
            for (const auto& [key, value] : doc.items()) {
                if (std::find(keys_.begin(), keys_.end(), key) == keys_.end())
                    throw UsageError("unknown config key '" + key + "' for " + app_->get_name());
                s.set(key, value);
            }
        }
        for (const auto& key : keys_)
            if (options_.at(key)->count() > 0) s.set(key, raw_.at(key));
        return s;
    }

private:
    CLI::App* app_;
    std::string config_path_;
    std::vector<std::string> keys_;
    std::map<std::string, std::string> raw_;
    std::map<std::string, CLI::Option*> options_;
};

void add_model_flags(FlagSet& flags) {
    flags.add("graph", "empty|chain|chain-pbc|complete|custom:PATH (complete:edgewise selects the coupling)");
    flags.add("coupling", "curie-weiss|edgewise (default curie-weiss on complete graphs)");
    flags.add("n", "number of members (odd)");
    flags.add("theta", "inverse temperature");
    flags.add("p", "BSC crossover probability in (0, 1/2)");
}

void add_run_flags(FlagSet& flags) {
    flags.add("trials", "Monte Carlo trials (default 100000)");
    flags.add("seed", "64-bit seed (default 0)");
    flags.add("confidence", "confidence level of the Wilson interval (default 0.99)");
    flags.add("burn-in-sweeps", "Glauber burn-in sweeps for custom graphs (default 100n)");
    flags.add("thinning", "Glauber single-site updates between custom-graph draws (default 10n)");
}

struct GraphChoice {
    GraphFamily family = GraphFamily::Empty;
    std::optional<Coupling> coupling;
    std::string custom_path;
};

GraphChoice parse_graph(const std::string& spec) {
    GraphChoice out;
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    try {
        out.family = parse_graph_family(head);
    } catch (const std::invalid_argument&) {
        throw UsageError("--graph: unknown graph '" + spec + "'");
    }
    if (colon == std::string::npos) {
        if (out.family == GraphFamily::Custom) throw UsageError("--graph: custom needs a path, as custom:PATH");
        return out;
    }
    const std::string tail = spec.substr(colon + 1);
    if (out.family == GraphFamily::Custom) {
        out.custom_path = tail;
    } else if (out.family == GraphFamily::Complete) {
        out.coupling = parse_coupling(tail);
    } else {
        throw UsageError("--graph: unexpected suffix in '" + spec + "'");
    }
    return out;
}

/// Graph column that reproduces the model when passed back to --graph.
std::string graph_cell(const ExperimentConfig& c) {
    switch (c.family) {
        case GraphFamily::Custom: return "custom:" + c.custom_path;
        case GraphFamily::Complete:
            return c.coupling == Coupling::CurieWeiss ? "complete" : "complete:edgewise";
        default: return std::string(to_string(c.family));
    }
}

ExperimentConfig model_config(const Settings& s) {
    ExperimentConfig c;
    const GraphChoice g = parse_graph(s.text("graph"));
    c.family = g.family;
    c.coupling = g.family == GraphFamily::Complete ? Coupling::CurieWeiss : Coupling::Edgewise;
    if (g.coupling) c.coupling = *g.coupling;
    if (s.has("coupling")) c.coupling = parse_coupling(s.text("coupling"));
    if (c.family == GraphFamily::Custom) {
        c.custom_path = g.custom_path;
        try {
            c.custom_graph = load_graph_file(g.custom_path);
        } catch (const std::exception& e) {
            throw UsageError("--graph: " + std::string(e.what()));
        }
        c.n = s.has("n") ? s.integer("n") : c.custom_graph->n();
    } else {
        c.n = s.integer("n");
    }
    if (c.family != GraphFamily::Empty) c.theta = s.real("theta");
    else if (s.has("theta")) c.theta = s.real("theta");
    c.p = s.real("p");
    return c;
}

ExperimentConfig run_config(const Settings& s) {
    ExperimentConfig c = model_config(s);
    if (s.has("trials")) c.trials = s.unsigned_integer("trials");
    if (s.has("seed")) c.seed = s.unsigned_integer("seed");
    if (s.has("confidence")) c.confidence = s.real("confidence");
    if (s.has("burn-in-sweeps")) c.glauber.burn_in_sweeps = s.unsigned_integer("burn-in-sweeps");
    if (s.has("thinning")) c.glauber.thinning_updates = s.unsigned_integer("thinning");
    c.validate();
    return c;
}

std::string csv_row(const ExperimentConfig& c, const Estimate& e, const std::optional<double>& limit,
                    const std::optional<double>& bound) {
    std::string row = graph_cell(c) + "," + std::to_string(c.n) + ",";
    if (c.family != GraphFamily::Empty) row += fmt(c.theta);
    row += "," + fmt(c.p) + "," + std::to_string(e.trials) + "," + std::to_string(e.seed) + "," + fmt(e.point) +
           "," + fmt(e.ci_low) + "," + fmt(e.ci_high) + "," + fmt(limit) + "," + fmt(bound);
    return row;
}

/// Writes to --output when given, else to the caller's stream.
class Sink {
public:
    Sink(const Settings& s, std::ostream& fallback) : stream_(&fallback) {
        if (s.has("output")) {
            file_.open(s.text("output"));
            if (!file_) throw std::runtime_error("cannot write " + s.text("output"));
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

// ---------------------------------------------------------------- svg

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
    bool dashed = false;
};

void write_svg(const std::string& path, const std::string& title, const std::string& x_label,
               const std::string& y_label, const std::vector<Series>& series, bool log_x) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    const double width = 640, height = 420, left = 70, right = 150, top = 40, bottom = 50;
    double x_lo = INFINITY, x_hi = -INFINITY, y_lo = 0.0, y_hi = -INFINITY;
    auto tx = [&](double x) { return log_x ? std::log10(x) : x; };
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            x_lo = std::min(x_lo, tx(x));
            x_hi = std::max(x_hi, tx(x));
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    if (!(x_hi > x_lo)) x_hi = x_lo + 1;
    if (!(y_hi > y_lo)) y_hi = y_lo + 1;
    const double plot_w = width - left - right, plot_h = height - top - bottom;
    auto px = [&](double x) { return left + (tx(x) - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return top + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h; };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n"
        << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = x_lo + (x_hi - x_lo) * i / 4.0, fy = y_lo + (y_hi - y_lo) * i / 4.0;
        const double xv = log_x ? std::pow(10.0, fx) : fx;
        out << "<text x=\"" << left + plot_w * i / 4.0 << "\" y=\"" << height - bottom + 16
            << "\" text-anchor=\"middle\">" << fmt(std::round(xv * 1000) / 1000) << "</text>\n"
            << "<text x=\"" << left - 6 << "\" y=\"" << py(fy) + 4 << "\" text-anchor=\"end\">"
            << fmt(std::round(fy * 10000) / 10000) << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">" << x_label
        << "</text>\n"
        << "<text x=\"16\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << top + plot_h / 2 << ")\">" << y_label << "</text>\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = colors[i % std::size(colors)];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
            << (series[i].dashed ? " stroke-dasharray=\"5,4\"" : "") << " points=\"";
        for (auto [x, y] : series[i].points) out << px(x) << ',' << py(y) << ' ';
        out << "\"/>\n"
            << "<text x=\"" << width - right + 10 << "\" y=\"" << top + 16 * (i + 1) << "\" fill=\"" << color
            << "\">" << series[i].label << "</text>\n";
    }
    out << "</svg>\n";
}

// ----------------------------------------------------------- commands

void cmd_simulate(const Settings& s, std::ostream& out) {
    const ExperimentConfig c = run_config(s);
    const Estimate e = estimate_pe(c);
    out << kHeader << '\n' << csv_row(c, e, limit_for(c), exact_bound_for(c)) << '\n';
}

void cmd_exact(const Settings& s, std::ostream& out) {
    ExperimentConfig c = model_config(s);
    c.validate();
    if (c.n > kMaxEnumerationSize) throw UsageError("exact: n must be <= 20, got " + std::to_string(c.n));
    const auto pmf = exact_magnetization_pmf(c.model());
    out << "graph,n,theta,p,pe_exact,bound,q_functional\n"
        << graph_cell(c) << ',' << c.n << ',' << (c.family == GraphFamily::Empty ? "" : fmt(c.theta)) << ','
        << fmt(c.p) << ',' << fmt(exact_error_prob(pmf, c.p)) << ',' << fmt(hoeffding_bound(pmf, c.p)) << ','
        << fmt(q_functional(pmf, c.p)) << '\n';
}

void cmd_limit(const Settings& s, std::ostream& out) {
    const GraphChoice g = parse_graph(s.text("graph"));
    const double p = s.real("p");
    check_crossover(p);
    Coupling coupling = g.family == GraphFamily::Complete ? Coupling::CurieWeiss : Coupling::Edgewise;
    if (g.coupling) coupling = *g.coupling;
    if (s.has("coupling")) coupling = parse_coupling(s.text("coupling"));
    switch (g.family) {
        case GraphFamily::Empty: out << fmt(pe_limit_iid(p)) << '\n'; return;
        case GraphFamily::Chain:
        case GraphFamily::ChainPBC: out << fmt(pe_limit_chain(p, s.real("theta"))) << '\n'; return;
        case GraphFamily::Complete: {
            if (coupling != Coupling::CurieWeiss)
                throw UsageError("limit: no closed form for the complete graph with edgewise coupling");
            const double theta = s.real("theta");
            if (theta < 0.5) out << fmt(pe_limit_complete_subcritical(p, theta)) << '\n';
            else if (theta > 0.5) out << fmt(error_exponent_lb(theta, p)) << '\n';
            else throw UsageError("limit: no closed form at the critical point theta = 1/2");
            return;
        }
        case GraphFamily::Custom: throw UsageError("limit: no closed form for custom graphs");
    }
}

void cmd_sweep(const Settings& s, std::ostream& fallback) {
    const SweepAxis axis = parse_sweep_axis(s.text("axis"));
    Settings base_settings = s;
    // The swept parameter may be absent from the base flags.
    const std::string axis_key = to_string(axis);
    if (!s.has(axis_key)) base_settings.set(axis_key, axis == SweepAxis::N ? json(1) : json(0.25));
    ExperimentConfig base = model_config(base_settings);
    if (s.has("trials")) base.trials = s.unsigned_integer("trials");
    if (s.has("seed")) base.seed = s.unsigned_integer("seed");
    if (s.has("confidence")) base.confidence = s.real("confidence");
    if (s.has("burn-in-sweeps")) base.glauber.burn_in_sweeps = s.unsigned_integer("burn-in-sweeps");
    if (s.has("thinning")) base.glauber.thinning_updates = s.unsigned_integer("thinning");
    const auto values = s.list("values");
    const auto rows = sweep(base, axis, values);
    Sink sink(s, fallback);
    *sink << kHeader << '\n';
    for (const auto& r : rows) *sink << csv_row(r.config, r.estimate, r.limit, r.bound) << '\n';
}

void cmd_exponent(const Settings& s, std::ostream& out) {
    const double theta = s.real("theta");
    const double p = s.real("p");
    check_crossover(p);
    if (!(theta > 0.5)) throw UsageError("exponent: theta must exceed 1/2");
    const double cp = c_p(p);
    out << "theta,p,c_p,f_max,f_max_shifted,exponent_lb\n"
        << fmt(theta) << ',' << fmt(p) << ',' << fmt(cp) << ',' << fmt(f_max(theta).max) << ','
        << fmt(f_max(theta - cp).max) << ',' << fmt(error_exponent_lb(theta, p)) << '\n';
}

void cmd_figure(const std::string& kind, const Settings& s, std::ostream& fallback) {
    Sink sink(s, fallback);
    std::ostream& out = *sink;

    if (kind == "ftheta") {
        out << "theta,f_max,s_star\n";
        Series curve{"f_max", {}};
        for (int i = 1; i <= 200; ++i) {
            const double theta = i / 100.0;
            const auto r = f_max(theta);
            out << fmt(theta) << ',' << fmt(r.max) << ',' << fmt(r.argmax) << '\n';
            curve.points.emplace_back(theta, r.max);
        }
        if (s.has("svg")) write_svg(s.text("svg"), "max_s f(theta, s)", "theta", "f_max", {curve}, false);
        return;
    }

    ExperimentConfig base;
    std::string title;
    if (kind == "empty") {
        base.family = GraphFamily::Empty;
        title = "Empty graph: P_e vs n";
    } else if (kind == "complete-sub" || kind == "complete-super") {
        base.family = GraphFamily::Complete;
        base.coupling = Coupling::CurieWeiss;
        base.theta = kind == "complete-sub" ? 0.3 : 0.7;
        title = "Curie-Weiss theta=" + fmt(base.theta) + ": P_e vs n";
    } else {
        throw UsageError("figure: unknown figure '" + kind + "' (expected empty, complete-sub, complete-super, ftheta)");
    }
    if (s.has("theta") && base.family != GraphFamily::Empty) base.theta = s.real("theta");
    if (s.has("trials")) base.trials = s.unsigned_integer("trials");
    if (s.has("seed")) base.seed = s.unsigned_integer("seed");
    if (s.has("confidence")) base.confidence = s.real("confidence");
    const auto ps = s.has("p-grid") ? s.list("p-grid") : kFigureP;
    const auto ns = s.has("n-grid") ? s.list("n-grid") : kFigureN;
    const bool super = kind == "complete-super";

    // Validate the full grid before spending any trials.
    std::vector<ExperimentConfig> grid;
    for (double p : ps)
        for (double n : ns) {
            ExperimentConfig c = base;
            if (n != std::floor(n) || n < 1 || n > 1e9) throw UsageError("figure: n values must be integers");
            c.n = static_cast<int>(n);
            c.p = p;
            c.seed = derive_seed(base.seed, grid.size());
            c.validate();
            grid.push_back(c);
        }

    out << kHeader << ",pe_exact" << (super ? ",neg_log_pe_per_n,neg_log_pe_exact_per_n" : "") << '\n';
    std::vector<Series> series;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& c = grid[i];
        const Estimate e = estimate_pe(c);
        const auto limit = limit_for(c);
        const double exact = exact_pe(c).point;
        out << csv_row(c, e, limit, exact_bound_for(c)) << ',' << fmt(exact);
        if (super) {
            const double nd = static_cast<double>(c.n);
            out << ',' << (e.point > 0 ? fmt(-std::log(e.point) / nd) : std::string{}) << ','
                << (exact > 0 ? fmt(-std::log(exact) / nd) : std::string{});
        }
        out << '\n';
        if (i % ns.size() == 0) {
            series.push_back({"p=" + fmt(c.p), {}});
            if (limit) series.push_back({"limit p=" + fmt(c.p), {}, true});
        }
        auto& curve = series[series.size() - (limit ? 2 : 1)];
        curve.points.emplace_back(c.n, e.point);
        if (limit) series.back().points.emplace_back(c.n, *limit);
    }
    if (s.has("svg")) write_svg(s.text("svg"), title, "n", "estimated P_e", series, true);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Majority-vote detection under Ising priors", "majvote"};
    app.require_subcommand(1);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the detection error");
    FlagSet simulate_flags(simulate);
    add_model_flags(simulate_flags);
    add_run_flags(simulate_flags);

    auto* exact = app.add_subcommand("exact", "Exact error, Hoeffding bound and Q-functional (n <= 20)");
    FlagSet exact_flags(exact);
    add_model_flags(exact_flags);

    auto* limit = app.add_subcommand("limit", "Large-n limit of the error (or the exponent bound above 1/2)");
    FlagSet limit_flags(limit);
    limit_flags.add("graph", "empty|chain|chain-pbc|complete");
    limit_flags.add("coupling", "curie-weiss|edgewise");
    limit_flags.add("theta", "inverse temperature");
    limit_flags.add("p", "BSC crossover probability");

    auto* sweep_cmd = app.add_subcommand("sweep", "Estimates along one parameter axis, as CSV");
    FlagSet sweep_flags(sweep_cmd);
    add_model_flags(sweep_flags);
    add_run_flags(sweep_flags);
    sweep_flags.add("axis", "n|theta|p");
    sweep_flags.add("values", "comma-separated axis values");
    sweep_flags.add("output", "CSV path (default stdout)");

    auto* exponent = app.add_subcommand("exponent", "Error-exponent lower bound for Curie-Weiss above 1/2");
    FlagSet exponent_flags(exponent);
    exponent_flags.add("theta", "inverse temperature (> 1/2)");
    exponent_flags.add("p", "BSC crossover probability");

    auto* figure = app.add_subcommand("figure", "CSV (and optional SVG) behind the reference figures");
    std::string figure_kind;
    figure->add_option("kind", figure_kind, "empty|complete-sub|complete-super|ftheta")->required();
    FlagSet figure_flags(figure);
    figure_flags.add("trials", "Monte Carlo trials per point (default 100000)");
    figure_flags.add("seed", "base seed (default 0)");
    figure_flags.add("confidence", "confidence level (default 0.99)");
    figure_flags.add("theta", "override the figure's theta");
    figure_flags.add("p-grid", "comma-separated p values");
    figure_flags.add("n-grid", "comma-separated n values");
    figure_flags.add("output", "CSV path (default stdout)");
    figure_flags.add("svg", "also write an SVG line plot here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        std::replace(what.begin(), what.end(), '\n', ' ');
        err << "error: " << what << '\n';
        return kUsageError;
    }

    try {
        if (simulate->parsed()) cmd_simulate(simulate_flags.settings(), out);
        else if (exact->parsed()) cmd_exact(exact_flags.settings(), out);
        else if (limit->parsed()) cmd_limit(limit_flags.settings(), out);
        else if (sweep_cmd->parsed()) cmd_sweep(sweep_flags.settings(), out);
        else if (exponent->parsed()) cmd_exponent(exponent_flags.settings(), out);
        else if (figure->parsed()) cmd_figure(figure_kind, figure_flags.settings(), out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return 0;
}

}  // namespace majvote::cli
