#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "helixforge/discover.hpp"
#include "helixforge/export.hpp"
#include "helixforge/helix.hpp"
#include "helixforge/identity.hpp"
#include "helixforge/sequence.hpp"

namespace helixforge::cli {
namespace {

namespace io = helixforge::io;

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

long long parse_ll_value(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::domain_error(what + ": invalid integer '" + s + "'");
    }
}

double parse_double_value(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::domain_error(what + ": invalid number '" + s + "'");
    }
}

std::size_t parse_size_value(const std::string& s, const std::string& what) {
    const long long v = parse_ll_value(s, what);
    if (v < 0) throw std::domain_error(what + ": must not be negative, got '" + s + "'");
    return static_cast<std::size_t>(v);
}

std::vector<long long> parse_ll_list(const std::string& s, const std::string& what) {
    std::vector<long long> out;
    std::istringstream stream(s);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const std::string t = trim(item);
        if (t.empty()) throw std::domain_error(what + ": empty entry in list '" + s + "'");
        out.push_back(parse_ll_value(t, what));
    }
    if (out.empty()) throw std::domain_error(what + ": empty list");
    return out;
}

// key=value lines, # comments, keys named after the long flags without the
// leading dashes. Anything the active subcommand has no option for is
// ignored so one file can serve several commands.
std::map<std::string, std::string> load_config() {
    std::map<std::string, std::string> cfg;
    const char* path = std::getenv("HELIXFORGE_CONFIG");
    if (path == nullptr || *path == '\0') return cfg;
    std::ifstream f(path);
    if (!f)
        throw std::domain_error(std::string("config file '") + path + "' is not readable");
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config line " + std::to_string(lineno) +
                                    " is not key=value: '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        if (key.empty())
            throw std::domain_error("config line " + std::to_string(lineno) +
                                    " has an empty key");
        cfg[key] = trim(t.substr(eq + 1));
    }
    return cfg;
}

// Explicit flags beat the config file, which beats built-in defaults: a
// binding only fires when its option went unused on the command line.
struct ConfigBindings {
    struct Entry {
        const CLI::App* sub;
        const CLI::Option* opt;
        std::string key;
        std::function<void(const std::string&)> apply;
    };
    std::vector<Entry> entries;

    void add(const CLI::App* sub, const CLI::Option* opt, std::string key,
             std::function<void(const std::string&)> apply) {
        entries.push_back({sub, opt, std::move(key), std::move(apply)});
    }

    void apply_to_parsed(const std::map<std::string, std::string>& cfg) const {
        for (const Entry& e : entries) {
            if (!e.sub->parsed() || e.opt->count() > 0) continue;
            const auto it = cfg.find(e.key);
            if (it != cfg.end()) e.apply(it->second);
        }
    }
};

std::string complex_str(Complex z) {
    std::string s = io::format_number(z.real());
    const std::string im = io::format_number(z.imag());
    if (!im.empty() && im[0] == '-')
        s += " - " + im.substr(1) + "i";
    else
        s += " + " + im + "i";
    return s;
}

void write_or_print(const std::string& text, const std::string& out_path,
                    std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::filesystem::path tmp(out_path + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        f << text;
        f.flush();
        if (!f) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, out_path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move temp file onto '" + out_path +
                                 "': " + ec.message());
    }
}

struct SeqOpts {
    long long P = 1;
    std::string kind = "both";
    long long k_min = 0;
    std::optional<long long> k_max;
};

int run_seq(const SeqOpts& o, std::ostream& out) {
    if (o.kind != "both" && o.kind != "lucas" && o.kind != "fibonacci")
        throw std::domain_error("seq: --kind must be lucas, fibonacci, or both");
    const SequenceCache seq(make_params(o.P));
    const auto print_one = [&](SequenceKind kind, long long k_hi) {
        if (o.k_min > k_hi)
            throw std::domain_error("seq: empty index range [" + std::to_string(o.k_min) +
                                    ", " + std::to_string(k_hi) + "]");
        out << kind_name(kind) << "(P=" << o.P << ", k=" << o.k_min << ".." << k_hi
            << "): ";
        for (long long k = o.k_min; k <= k_hi; ++k) {
            if (k > o.k_min) out << ",";
            out << seq.term(kind, k).value;
        }
        out << "\n";
    };
    // The classic openings: eight Lucas terms, nine Fibonacci terms.
    if (o.kind != "fibonacci") print_one(SequenceKind::Lucas, o.k_max.value_or(7));
    if (o.kind != "lucas") print_one(SequenceKind::Fibonacci, o.k_max.value_or(8));
    return 0;
}

struct EvalOpts {
    long long P = 1;
    std::string map;
    std::optional<double> t;
};

int run_eval(const EvalOpts& o, std::ostream& out) {
    if (o.map.empty()) throw std::domain_error("eval: --map is required");
    if (!o.t.has_value()) throw std::domain_error("eval: --t is required");
    const MetallicParams params = make_params(o.P);
    const double t = *o.t;
    if (o.map == "g" || o.map == "h") {
        const Complex v = o.map == "g" ? g_eval(params, t) : h_eval(params, t);
        out << o.map << "(" << io::format_number(t) << "; P=" << o.P
            << ") = " << complex_str(v) << "\n";
        return 0;
    }
    const MapId id = parse_map(o.map);
    out << map_name(id) << "(" << io::format_number(t) << "; P=" << o.P << ")\n";
    out << "  definition  = " << complex_str(psi_def(id, params, t)) << "\n";
    out << "  closed-form = " << complex_str(psi_closed(id, params, t)) << "\n";
    return 0;
}

struct StrandJobOpts {
    double tmin = 0.0;
    double tmax = 10.0;
    double dt = 0.005;
    std::string format;
    std::string projection = "xz";
    std::string out_path;
    bool projection_explicit = false;
};

io::ExportJob make_job(const StrandJobOpts& o, const char* who) {
    io::ExportJob job;
    job.format = io::parse_format(o.format);
    if (job.format == io::Format::Report)
        throw std::domain_error(std::string(who) +
                                ": the report format only applies to verify");
    if (job.format == io::Format::Svg)
        job.projection = io::parse_projection(o.projection);
    else if (o.projection_explicit)
        throw std::domain_error(std::string(who) + ": --projection only applies to svg");
    return job;
}

int finish_job(io::ExportJob job, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        io::run_export(job, out);
    else
        io::run_export(job, std::filesystem::path(out_path));
    return 0;
}

struct HelixOpts : StrandJobOpts {
    long long P = 1;
    std::string map;
};

int run_helix(const HelixOpts& o, std::ostream& out) {
    if (o.map.empty()) throw std::domain_error("helix: --map is required");
    io::ExportJob job = make_job(o, "helix");
    job.source = curve_sample(parse_map(o.map), make_params(o.P), o.tmin, o.tmax, o.dt);
    return finish_job(std::move(job), o.out_path, out);
}

struct ComposeOpts : StrandJobOpts {
    long long P = 1;
    std::string map;
    std::optional<std::string> map_b;
    std::optional<long long> P_b;
    std::size_t rung_stride = 200;
};

int run_compose(const ComposeOpts& o, std::ostream& out) {
    if (o.map.empty()) throw std::domain_error("compose: --map is required");
    io::ExportJob job = make_job(o, "compose");
    const HelixSpec a = make_spec(parse_map(o.map), make_params(o.P));
    const HelixSpec b = make_spec(parse_map(o.map_b.value_or(o.map)),
                                  make_params(o.P_b.value_or(o.P)));
    job.source = compose_double_helix(a, b, o.tmin, o.tmax, o.dt, o.rung_stride);
    return finish_job(std::move(job), o.out_path, out);
}

struct VerifyOpts {
    long long P = 1;
    std::string identity = "all";
    long long k_min = -50;
    long long k_max = 200;
    std::string out_path;
};

int run_verify(const VerifyOpts& o, std::ostream& out) {
    std::vector<IdentityId> ids;
    if (o.identity == "all")
        ids = consistent_catalog();
    else
        ids.push_back(parse_identity(o.identity));
    std::string text;
    bool any_failed = false;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const IdentityReport report = verify_identity(ids[i], o.P, o.k_min, o.k_max);
        any_failed = any_failed || !report.all_pass();
        if (i > 0) text += "\n";
        text += to_text(report);
    }
    write_or_print(text, o.out_path, out);
    return any_failed ? 2 : 0;
}

struct PellOpts {
    long long P = 1;
    long long k_min = -20;
    long long k_max = 100;
    std::string out_path;
};

int run_pell(const PellOpts& o, std::ostream& out) {
    if (o.k_min > o.k_max) throw std::domain_error("pell: empty index range");
    const MetallicParams params = make_params(o.P);
    std::string text = "pell(P=" + std::to_string(o.P) +
                       ", D=" + std::to_string(params.D) +
                       ", k=" + std::to_string(o.k_min) + ".." +
                       std::to_string(o.k_max) + ")\n";
    for (long long k = o.k_min; k <= o.k_max; ++k) {
        const PellWitness w = pell_certificate(params, k);
        text += "k=" + std::to_string(k) + ": x=" + w.x.get_str() +
                " y=" + w.y.get_str() + " x^2 - D*y^2 = " + w.rhs.get_str() + "\n";
    }
    write_or_print(text, o.out_path, out);
    return 0;
}

struct DiscoverOpts {
    std::string tmpl = "all";
    std::string P_set = "1,2,3";
    long long k_min = 0;
    long long k_max = 8;
    std::string out_path;
};

int run_discover(const DiscoverOpts& o, std::ostream& out) {
    if (o.k_min > o.k_max) throw std::domain_error("discover: empty index range");
    const std::vector<long long> Ps = parse_ll_list(o.P_set, "discover: --P-set");
    std::vector<long long> ks;
    for (long long k = o.k_min; k <= o.k_max; ++k) ks.push_back(k);
    std::vector<TemplateId> targets;
    if (o.tmpl == "all")
        targets = all_templates();
    else
        targets.push_back(parse_template(o.tmpl));
    std::string text;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (i > 0) text += "\n";
        text += to_text(discover_coefficients(targets[i], Ps, ks));
    }
    write_or_print(text, o.out_path, out);
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integer Lucas and Fibonacci families, their complex continuation, "
                 "and the helix curves they trace"};
    app.name("helixforge");
    app.require_subcommand(1);

    ConfigBindings bindings;
    const auto bind_ll = [&bindings](CLI::App* sub, CLI::Option* opt, const char* key,
                                     long long& var) {
        bindings.add(sub, opt, key, [&var, key](const std::string& s) {
            var = parse_ll_value(s, std::string("config key '") + key + "'");
        });
    };
    const auto bind_opt_ll = [&bindings](CLI::App* sub, CLI::Option* opt, const char* key,
                                         std::optional<long long>& var) {
        bindings.add(sub, opt, key, [&var, key](const std::string& s) {
            var = parse_ll_value(s, std::string("config key '") + key + "'");
        });
    };
    const auto bind_double = [&bindings](CLI::App* sub, CLI::Option* opt, const char* key,
                                         double& var) {
        bindings.add(sub, opt, key, [&var, key](const std::string& s) {
            var = parse_double_value(s, std::string("config key '") + key + "'");
        });
    };
    const auto bind_opt_double = [&bindings](CLI::App* sub, CLI::Option* opt,
                                             const char* key, std::optional<double>& var) {
        bindings.add(sub, opt, key, [&var, key](const std::string& s) {
            var = parse_double_value(s, std::string("config key '") + key + "'");
        });
    };
    const auto bind_size = [&bindings](CLI::App* sub, CLI::Option* opt, const char* key,
                                       std::size_t& var) {
        bindings.add(sub, opt, key, [&var, key](const std::string& s) {
            var = parse_size_value(s, std::string("config key '") + key + "'");
        });
    };
    const auto bind_string = [&bindings](CLI::App* sub, CLI::Option* opt, const char* key,
                                         std::string& var) {
        bindings.add(sub, opt, key,
                     [&var](const std::string& s) { var = s; });
    };
    const auto bind_opt_string = [&bindings](CLI::App* sub, CLI::Option* opt,
                                             const char* key,
                                             std::optional<std::string>& var) {
        bindings.add(sub, opt, key, [&var](const std::string& s) { var = s; });
    };

    SeqOpts seq_opts;
    CLI::App* seq_cmd = app.add_subcommand("seq", "Print exact sequence terms");
    bind_ll(seq_cmd, seq_cmd->add_option("--P", seq_opts.P, "Sequence parameter P >= 1"),
            "P", seq_opts.P);
    bind_string(seq_cmd,
                seq_cmd->add_option("--kind", seq_opts.kind,
                                    "Which family: lucas, fibonacci, or both"),
                "kind", seq_opts.kind);
    bind_ll(seq_cmd, seq_cmd->add_option("--k-min", seq_opts.k_min, "First index"),
            "k-min", seq_opts.k_min);
    bind_opt_ll(seq_cmd,
                seq_cmd->add_option("--k-max", seq_opts.k_max,
                                    "Last index (default 7 for lucas, 8 for fibonacci)"),
                "k-max", seq_opts.k_max);

    EvalOpts eval_opts;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "Evaluate g, h, or a curve map at one parameter value");
    bind_ll(eval_cmd, eval_cmd->add_option("--P", eval_opts.P, "Sequence parameter"),
            "P", eval_opts.P);
    bind_string(eval_cmd,
                eval_cmd->add_option("--map", eval_opts.map,
                                     "g, h, psi1..psi7, or lmap"),
                "map", eval_opts.map);
    bind_opt_double(eval_cmd, eval_cmd->add_option("--t", eval_opts.t, "Parameter value"),
                    "t", eval_opts.t);

    HelixOpts helix_opts;
    helix_opts.format = "csv";
    CLI::App* helix_cmd =
        app.add_subcommand("helix", "Sample one strand and export it");
    bind_ll(helix_cmd, helix_cmd->add_option("--P", helix_opts.P, "Sequence parameter"),
            "P", helix_opts.P);
    bind_string(helix_cmd,
                helix_cmd->add_option("--map", helix_opts.map, "psi1..psi7 or lmap"),
                "map", helix_opts.map);
    bind_double(helix_cmd, helix_cmd->add_option("--tmin", helix_opts.tmin, "Grid start"),
                "tmin", helix_opts.tmin);
    bind_double(helix_cmd, helix_cmd->add_option("--tmax", helix_opts.tmax, "Grid end"),
                "tmax", helix_opts.tmax);
    bind_double(helix_cmd, helix_cmd->add_option("--dt", helix_opts.dt, "Grid step"),
                "dt", helix_opts.dt);
    bind_string(helix_cmd,
                helix_cmd->add_option("--format", helix_opts.format,
                                      "csv, json, obj, or svg"),
                "format", helix_opts.format);
    CLI::Option* helix_proj = helix_cmd->add_option(
        "--projection", helix_opts.projection, "SVG plane: xy, xz, or yz");
    bind_string(helix_cmd, helix_proj, "projection", helix_opts.projection);
    bind_string(helix_cmd,
                helix_cmd->add_option("--out", helix_opts.out_path,
                                      "Write to this file instead of stdout"),
                "out", helix_opts.out_path);

    ComposeOpts compose_opts;
    compose_opts.format = "obj";
    CLI::App* compose_cmd =
        app.add_subcommand("compose", "Sample two strands over one grid and export them");
    bind_ll(compose_cmd,
            compose_cmd->add_option("--P", compose_opts.P, "Parameter of strand A"),
            "P", compose_opts.P);
    bind_string(compose_cmd,
                compose_cmd->add_option("--map", compose_opts.map, "Map of strand A"),
                "map", compose_opts.map);
    bind_opt_string(compose_cmd,
                    compose_cmd->add_option("--map-b", compose_opts.map_b,
                                            "Map of strand B (default: same as A)"),
                    "map-b", compose_opts.map_b);
    bind_opt_ll(compose_cmd,
                compose_cmd->add_option("--P-b", compose_opts.P_b,
                                        "Parameter of strand B (default: same as A)"),
                "P-b", compose_opts.P_b);
    bind_double(compose_cmd,
                compose_cmd->add_option("--tmin", compose_opts.tmin, "Grid start"),
                "tmin", compose_opts.tmin);
    bind_double(compose_cmd,
                compose_cmd->add_option("--tmax", compose_opts.tmax, "Grid end"),
                "tmax", compose_opts.tmax);
    bind_double(compose_cmd, compose_cmd->add_option("--dt", compose_opts.dt, "Grid step"),
                "dt", compose_opts.dt);
    bind_size(compose_cmd,
              compose_cmd->add_option("--rung-stride", compose_opts.rung_stride,
                                      "Samples between rungs"),
              "rung-stride", compose_opts.rung_stride);
    bind_string(compose_cmd,
                compose_cmd->add_option("--format", compose_opts.format,
                                        "json, obj, or svg"),
                "format", compose_opts.format);
    CLI::Option* compose_proj = compose_cmd->add_option(
        "--projection", compose_opts.projection, "SVG plane: xy, xz, or yz");
    bind_string(compose_cmd, compose_proj, "projection", compose_opts.projection);
    bind_string(compose_cmd,
                compose_cmd->add_option("--out", compose_opts.out_path,
                                        "Write to this file instead of stdout"),
                "out", compose_opts.out_path);

    VerifyOpts verify_opts;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Check integer identities exactly over an index range");
    bind_ll(verify_cmd,
            verify_cmd->add_option("--P", verify_opts.P, "Sequence parameter"),
            "P", verify_opts.P);
    bind_string(verify_cmd,
                verify_cmd->add_option("--identity", verify_opts.identity,
                                       "Identity name or 'all'"),
                "identity", verify_opts.identity);
    bind_ll(verify_cmd,
            verify_cmd->add_option("--k-min", verify_opts.k_min, "First index"),
            "k-min", verify_opts.k_min);
    bind_ll(verify_cmd,
            verify_cmd->add_option("--k-max", verify_opts.k_max, "Last index"),
            "k-max", verify_opts.k_max);
    bind_string(verify_cmd,
                verify_cmd->add_option("--out", verify_opts.out_path,
                                       "Write the report here instead of stdout"),
                "out", verify_opts.out_path);

    PellOpts pell_opts;
    CLI::App* pell_cmd = app.add_subcommand(
        "pell", "Emit certified solutions of x^2 - D y^2 = +-4");
    bind_ll(pell_cmd, pell_cmd->add_option("--P", pell_opts.P, "Sequence parameter"),
            "P", pell_opts.P);
    bind_ll(pell_cmd, pell_cmd->add_option("--k-min", pell_opts.k_min, "First index"),
            "k-min", pell_opts.k_min);
    bind_ll(pell_cmd, pell_cmd->add_option("--k-max", pell_opts.k_max, "Last index"),
            "k-max", pell_opts.k_max);
    bind_string(pell_cmd,
                pell_cmd->add_option("--out", pell_opts.out_path,
                                     "Write the certificates here instead of stdout"),
                "out", pell_opts.out_path);

    DiscoverOpts discover_opts;
    CLI::App* discover_cmd = app.add_subcommand(
        "discover", "Solve identity templates for their unknown coefficients");
    bind_string(discover_cmd,
                discover_cmd->add_option("--template", discover_opts.tmpl,
                                         "psi4, psi6, psi7, or 'all'"),
                "template", discover_opts.tmpl);
    bind_string(discover_cmd,
                discover_cmd->add_option("--P-set", discover_opts.P_set,
                                         "Comma-separated P values to sample"),
                "P-set", discover_opts.P_set);
    bind_ll(discover_cmd,
            discover_cmd->add_option("--k-min", discover_opts.k_min, "First index"),
            "k-min", discover_opts.k_min);
    bind_ll(discover_cmd,
            discover_cmd->add_option("--k-max", discover_opts.k_max, "Last index"),
            "k-max", discover_opts.k_max);
    bind_string(discover_cmd,
                discover_cmd->add_option("--out", discover_opts.out_path,
                                         "Write the solution here instead of stdout"),
                "out", discover_opts.out_path);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("helixforge");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, out, err);
        err << app.help();
        return 1;
    }

    try {
        bindings.apply_to_parsed(load_config());
        helix_opts.projection_explicit = helix_proj->count() > 0;
        compose_opts.projection_explicit = compose_proj->count() > 0;

        if (seq_cmd->parsed()) return run_seq(seq_opts, out);
        if (eval_cmd->parsed()) return run_eval(eval_opts, out);
        if (helix_cmd->parsed()) return run_helix(helix_opts, out);
        if (compose_cmd->parsed()) return run_compose(compose_opts, out);
        if (verify_cmd->parsed()) return run_verify(verify_opts, out);
        if (pell_cmd->parsed()) return run_pell(pell_opts, out);
        if (discover_cmd->parsed()) return run_discover(discover_opts, out);
        err << "error: no subcommand selected\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace helixforge::cli
