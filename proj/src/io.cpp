#include "landau/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "landau/errors.hpp"

namespace landau {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

static_assert(std::numeric_limits<double>::is_iec559, "IEEE-754 doubles required");

constexpr int kSnapshotFormatVersion = 1;

// ---------------------------------------------------------------- formatting

std::string format_g17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json json_number(double v) {
    if (std::isfinite(v)) return v;
    return format_g17(v);  // JSON has no inf/nan literals
}

// ------------------------------------------------------------------- crc64

const std::array<std::uint64_t, 256>& crc64_table() {
    static const std::array<std::uint64_t, 256> table = [] {
        std::array<std::uint64_t, 256> t{};
        constexpr std::uint64_t poly = 0x42F0E1EBA9EA3693ull;
        for (int b = 0; b < 256; ++b) {
            std::uint64_t crc = static_cast<std::uint64_t>(b) << 56;
            for (int i = 0; i < 8; ++i)
                crc = (crc & 0x8000000000000000ull) ? (crc << 1) ^ poly : crc << 1;
            t[b] = crc;
        }
        return t;
    }();
    return table;
}

// ------------------------------------------------------------ atomic writes

void atomic_write(const fs::path& path, const std::string& contents) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed: " + path.string() + " (" + ec.message() + ")");
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ------------------------------------------------------------ config schema

struct Violations {
    std::vector<std::string> items;
    void add(const std::string& s) { items.push_back(s); }
    void check_throw() const {
        if (items.empty()) return;
        std::string msg = "config validation failed:";
        for (const auto& s : items) msg += "\n  - " + s;
        throw ConfigError(msg);
    }
};

void require_keys(const json& obj, const std::string& where,
                  const std::vector<std::string>& allowed, Violations& v) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            v.add(where + ": unknown key \"" + it.key() + "\"");
    }
}

double get_number(const json& obj, const std::string& where, const std::string& key,
                  double fallback, Violations& v, bool required = false) {
    if (!obj.contains(key)) {
        if (required) v.add(where + ": missing required key \"" + key + "\"");
        return fallback;
    }
    if (!obj[key].is_number()) {
        v.add(where + "." + key + ": expected a number");
        return fallback;
    }
    return obj[key].get<double>();
}

InitialSpec parse_initial(const json& obj, const std::string& where, Violations& v) {
    InitialSpec spec;
    if (!obj.is_object()) {
        v.add(where + ": expected an object");
        return spec;
    }
    require_keys(obj, where,
                 {"type", "mu", "mean", "mass", "amplitude", "mode", "separation",
                  "match_g0_moments"},
                 v);
    const std::string type = obj.value("type", "maxwellian");
    if (type == "maxwellian") {
        spec.type = InitialSpec::Type::Maxwellian;
    } else if (type == "perturbed_maxwellian") {
        spec.type = InitialSpec::Type::PerturbedMaxwellian;
    } else if (type == "bimodal") {
        spec.type = InitialSpec::Type::Bimodal;
    } else {
        v.add(where + ".type: unknown initial data type \"" + type + "\"");
    }
    spec.mu = get_number(obj, where, "mu", spec.mu, v);
    spec.mass = get_number(obj, where, "mass", spec.mass, v);
    spec.amplitude = get_number(obj, where, "amplitude", spec.amplitude, v);
    spec.separation = get_number(obj, where, "separation", spec.separation, v);
    if (obj.contains("mode")) {
        if (!obj["mode"].is_number_integer())
            v.add(where + ".mode: expected an integer");
        else
            spec.mode = obj["mode"].get<int>();
    }
    if (obj.contains("mean")) {
        const auto& m = obj["mean"];
        if (!m.is_array() || m.size() != 3 || !m[0].is_number() || !m[1].is_number() ||
            !m[2].is_number())
            v.add(where + ".mean: expected an array of 3 numbers");
        else
            spec.mean = {m[0].get<double>(), m[1].get<double>(), m[2].get<double>()};
    }
    if (obj.contains("match_g0_moments")) {
        if (!obj["match_g0_moments"].is_boolean())
            v.add(where + ".match_g0_moments: expected a boolean");
        else
            spec.match_conserved_of_g0 = obj["match_g0_moments"].get<bool>();
    }
    return spec;
}

const std::vector<std::string>& known_experiments() {
    static const std::vector<std::string> names = {
        "weak_strong",     "entropy_identity",  "maxwellian_propagation",
        "moment_propagation", "maximum_principle", "interpolation"};
    return names;
}

}  // namespace

std::uint64_t crc64(std::span<const unsigned char> bytes) {
    const auto& table = crc64_table();
    std::uint64_t crc = 0;
    for (unsigned char b : bytes) crc = (crc << 8) ^ table[((crc >> 56) ^ b) & 0xFF];
    return crc;
}

std::uint64_t crc64(const std::string& text) {
    return crc64(std::span<const unsigned char>(
        reinterpret_cast<const unsigned char*>(text.data()), text.size()));
}

ExperimentConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    Violations v;
    if (!root.is_object()) {
        v.add("top level: expected an object");
        v.check_throw();
    }
    require_keys(root, "top level",
                 {"grid", "initial", "solver", "exponents", "experiments", "output", "tolerances"},
                 v);

    ExperimentConfig cfg;

    // grid
    double L = 6.0, gamma = -3.0;
    int N = 16;
    if (!root.contains("grid")) {
        v.add("top level: missing required key \"grid\"");
    } else {
        const json& grid = root["grid"];
        require_keys(grid, "grid", {"L", "N", "gamma"}, v);
        L = get_number(grid, "grid", "L", L, v, true);
        gamma = get_number(grid, "grid", "gamma", gamma, v, true);
        if (!grid.contains("N"))
            v.add("grid: missing required key \"N\"");
        else if (!grid["N"].is_number_integer())
            v.add("grid.N: expected an integer");
        else
            N = grid["N"].get<int>();
    }

    // initial
    if (!root.contains("initial")) {
        v.add("top level: missing required key \"initial\"");
    } else {
        const json& initial = root["initial"];
        require_keys(initial, "initial", {"g0", "f0"}, v);
        if (!initial.contains("g0"))
            v.add("initial: missing required key \"g0\"");
        else
            cfg.g0 = parse_initial(initial["g0"], "initial.g0", v);
        if (initial.contains("f0")) cfg.f0 = parse_initial(initial["f0"], "initial.f0", v);
    }

    // solver
    if (root.contains("solver")) {
        const json& solver = root["solver"];
        require_keys(solver, "solver", {"T", "cfl", "projection", "seed"}, v);
        cfg.T = get_number(solver, "solver", "T", cfg.T, v);
        cfg.cfl = get_number(solver, "solver", "cfl", cfg.cfl, v);
        if (solver.contains("projection")) {
            if (!solver["projection"].is_boolean())
                v.add("solver.projection: expected a boolean");
            else
                cfg.projection = solver["projection"].get<bool>();
        }
        if (solver.contains("seed")) {
            if (!solver["seed"].is_number_unsigned() && !solver["seed"].is_number_integer())
                v.add("solver.seed: expected an integer");
            else
                cfg.seed = solver["seed"].get<std::uint64_t>();
        }
    }
    if (!(cfg.T >= 0.0)) v.add("solver.T: must be >= 0");
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) v.add("solver.cfl: must lie in (0, 1]");

    // exponents
    if (root.contains("exponents")) {
        const json& e = root["exponents"];
        require_keys(e, "exponents", {"kappa", "nu", "zeta", "rho"}, v);
        cfg.kappa = get_number(e, "exponents", "kappa", cfg.kappa, v);
        cfg.nu = get_number(e, "exponents", "nu", cfg.nu, v);
        cfg.zeta = get_number(e, "exponents", "zeta", cfg.zeta, v);
        if (e.contains("rho")) {
            if (e["rho"].is_string()) {
                if (e["rho"].get<std::string>() != "auto")
                    v.add("exponents.rho: expected a number or \"auto\"");
                cfg.rho_auto = true;
            } else if (e["rho"].is_number()) {
                cfg.rho = e["rho"].get<double>();
                cfg.rho_auto = false;
            } else {
                v.add("exponents.rho: expected a number or \"auto\"");
            }
        }
    }
    if (cfg.kappa < 0.0) v.add("exponents.kappa: must be >= 0");
    if (cfg.nu < 0.0) v.add("exponents.nu: must be >= 0");
    if (cfg.zeta < 0.0) v.add("exponents.zeta: must be >= 0");

    // experiments
    if (root.contains("experiments")) {
        const json& ex = root["experiments"];
        if (!ex.is_array())
            v.add("experiments: expected an array of names");
        else
            for (const auto& item : ex) {
                if (!item.is_string()) {
                    v.add("experiments: entries must be strings");
                    continue;
                }
                const std::string name = item.get<std::string>();
                const auto& known = known_experiments();
                if (std::find(known.begin(), known.end(), name) == known.end())
                    v.add("experiments: unknown experiment \"" + name + "\"");
                else
                    cfg.experiments.push_back(name);
            }
    }

    // output
    if (root.contains("output")) {
        const json& out = root["output"];
        require_keys(out, "output", {"dir", "cadence", "snapshot_times"}, v);
        if (out.contains("dir")) {
            if (!out["dir"].is_string())
                v.add("output.dir: expected a string");
            else
                cfg.output_dir = out["dir"].get<std::string>();
        }
        if (out.contains("cadence")) {
            if (!out["cadence"].is_number_integer())
                v.add("output.cadence: expected an integer");
            else
                cfg.cadence = out["cadence"].get<int>();
        }
        if (out.contains("snapshot_times")) {
            if (!out["snapshot_times"].is_array())
                v.add("output.snapshot_times: expected an array of times");
            else
                for (const auto& s : out["snapshot_times"]) {
                    if (!s.is_number())
                        v.add("output.snapshot_times: entries must be numbers");
                    else
                        cfg.snapshot_times.push_back(s.get<double>());
                }
        }
    }
    if (cfg.cadence < 0) v.add("output.cadence: must be >= 0");

    // tolerances
    if (root.contains("tolerances")) {
        const json& tol = root["tolerances"];
        if (!tol.is_object())
            v.add("tolerances: expected an object of name -> number");
        else
            for (auto it = tol.begin(); it != tol.end(); ++it) {
                if (!default_tolerances().count(it.key()))
                    v.add("tolerances: unknown tolerance key \"" + it.key() + "\"");
                else if (!it.value().is_number())
                    v.add("tolerances." + it.key() + ": expected a number");
                else
                    cfg.tolerances[it.key()] = it.value().get<double>();
            }
    }

    // grid construction performs its own physical validation
    try {
        cfg.grid = make_grid(L, N, gamma);
    } catch (const ConfigError& e) {
        v.add(e.what());
    }
    v.check_throw();

    if (cfg.rho_auto) cfg.rho = auto_rho(cfg.kappa, cfg.nu, cfg.zeta, cfg.grid.gamma);
    cfg.config_hash = crc64(canonical_config(cfg));
    return cfg;
}

ExperimentConfig parse_config(const fs::path& path) {
    return parse_config_text(read_file(path));
}

std::string canonical_config(const ExperimentConfig& cfg) {
    auto initial_json = [](const InitialSpec& s) {
        json o;
        switch (s.type) {
            case InitialSpec::Type::Maxwellian: o["type"] = "maxwellian"; break;
            case InitialSpec::Type::PerturbedMaxwellian: o["type"] = "perturbed_maxwellian"; break;
            case InitialSpec::Type::Bimodal: o["type"] = "bimodal"; break;
        }
        o["mu"] = s.mu;
        o["mean"] = {s.mean.x, s.mean.y, s.mean.z};
        o["mass"] = s.mass;
        o["amplitude"] = s.amplitude;
        o["mode"] = s.mode;
        o["separation"] = s.separation;
        o["match_g0_moments"] = s.match_conserved_of_g0;
        return o;
    };
    json root;
    root["grid"] = {{"L", cfg.grid.half_width},
                    {"N", cfg.grid.points_per_axis},
                    {"gamma", cfg.grid.gamma}};
    root["initial"]["g0"] = initial_json(cfg.g0);
    if (cfg.f0) root["initial"]["f0"] = initial_json(*cfg.f0);
    root["solver"] = {{"T", cfg.T}, {"cfl", cfg.cfl}, {"projection", cfg.projection},
                      {"seed", cfg.seed}};
    root["exponents"] = {{"kappa", cfg.kappa}, {"nu", cfg.nu}, {"zeta", cfg.zeta}};
    if (cfg.rho_auto)
        root["exponents"]["rho"] = "auto";
    else
        root["exponents"]["rho"] = cfg.rho;
    root["exponents"]["rho_effective"] =
        cfg.rho_auto ? auto_rho(cfg.kappa, cfg.nu, cfg.zeta, cfg.grid.gamma) : cfg.rho;
    root["experiments"] = cfg.experiments;
    root["output"] = {{"dir", cfg.output_dir},
                      {"cadence", cfg.cadence},
                      {"snapshot_times", cfg.snapshot_times}};
    json tol = json::object();
    for (const auto& [k, val] : cfg.tolerances) tol[k] = val;
    root["tolerances"] = tol;
    return root.dump(2) + "\n";
}

// ------------------------------------------------------------------ snapshot

void write_snapshot(const fs::path& base, const ScalarField& field, double time) {
    const std::size_t count = field.values.size();
    std::string raw(count * sizeof(double), '\0');
    std::memcpy(raw.data(), field.values.data(), raw.size());
    const std::uint64_t checksum = crc64(raw);

    json sidecar;
    sidecar["format_version"] = kSnapshotFormatVersion;
    sidecar["grid"] = {{"L", field.grid.half_width},
                       {"N", field.grid.points_per_axis},
                       {"gamma", field.grid.gamma}};
    sidecar["time"] = time;
    sidecar["count"] = count;
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016" PRIx64, checksum);
    sidecar["checksum"] = hex;

    atomic_write(fs::path(base.string() + ".f64"), raw);
    atomic_write(fs::path(base.string() + ".json"), sidecar.dump(2) + "\n");
}

ScalarField read_snapshot(const fs::path& base, double* time_out) {
    json sidecar;
    try {
        sidecar = json::parse(read_file(fs::path(base.string() + ".json")));
    } catch (const json::parse_error& e) {
        throw IoError(std::string("snapshot sidecar parse error: ") + e.what());
    }
    if (sidecar.value("format_version", -1) != kSnapshotFormatVersion)
        throw IoError("snapshot: unsupported format version");
    const json& g = sidecar.at("grid");
    const GridSpec grid = make_grid(g.at("L").get<double>(), g.at("N").get<int>(),
                                    g.at("gamma").get<double>());
    const std::size_t count = sidecar.at("count").get<std::size_t>();
    if (count != grid.size())
        throw IoError("snapshot: grid mismatch (count does not equal N^3)");

    const std::string raw = read_file(fs::path(base.string() + ".f64"));
    if (raw.size() != count * sizeof(double))
        throw IoError("snapshot: grid mismatch (raw length does not match sidecar count)");
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016" PRIx64, crc64(raw));
    if (sidecar.at("checksum").get<std::string>() != hex)
        throw IoError("snapshot: checksum mismatch");

    ScalarField field(grid);
    std::memcpy(field.values.data(), raw.data(), raw.size());
    if (time_out) *time_out = sidecar.at("time").get<double>();
    return field;
}

// ---------------------------------------------------------------- timeseries

void write_timeseries(const fs::path& path, std::span<const DiagnosticsRow> rows) {
    std::string out = DiagnosticsRow::header();
    out += "\n";
    for (const auto& row : rows) {
        const auto a = row.as_array();
        for (int c = 0; c < DiagnosticsRow::kColumns; ++c) {
            if (c) out += ",";
            out += format_g17(a[c]);
        }
        out += "\n";
    }
    atomic_write(path, out);
}

std::vector<DiagnosticsRow> read_timeseries(const fs::path& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) throw IoError("timeseries: empty file");
    if (line != DiagnosticsRow::header()) throw IoError("timeseries: unexpected header");
    std::vector<DiagnosticsRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<double, DiagnosticsRow::kColumns> a{};
        std::size_t pos = 0;
        for (int c = 0; c < DiagnosticsRow::kColumns; ++c) {
            const std::size_t next = line.find(',', pos);
            const std::string tok = line.substr(pos, next == std::string::npos
                                                        ? std::string::npos
                                                        : next - pos);
            a[c] = std::strtod(tok.c_str(), nullptr);
            if (next == std::string::npos && c + 1 < DiagnosticsRow::kColumns)
                throw IoError("timeseries: short row");
            pos = next + 1;
        }
        rows.push_back(DiagnosticsRow::from_array(a));
    }
    return rows;
}

// ------------------------------------------------------------------ commands

namespace {

json gronwall_json(const GronwallReport& r) {
    json out;
    out["config_hash"] = r.config_hash;
    out["H0"] = json_number(r.H0);
    out["C_star"] = json_number(r.C_star);
    out["C_budget"] = json_number(r.C_budget);
    out["envelope_holds_fitted"] = r.envelope_holds_fitted;
    out["envelope_holds_budget"] = r.envelope_holds_budget;
    out["monotone_after_first"] = r.monotone_after_first;
    json samples = json::array();
    for (const auto& s : r.samples) {
        samples.push_back({{"t", s.t},
                           {"H", json_number(s.H)},
                           {"K1", s.K1},
                           {"K3", s.K3},
                           {"Mf", s.Mf},
                           {"Mg", s.Mg},
                           {"c0_f", s.c0_f},
                           {"intK", s.intK}});
    }
    out["samples"] = samples;
    return out;
}

json identity_json(const EntropyIdentityRefinement& r) {
    auto one = [](const EntropyIdentityReport& rep) {
        json out;
        out["max_abs_residual"] = json_number(rep.max_abs_residual);
        out["all_directions_ok"] = rep.all_directions_ok;
        json ws = json::array();
        for (const auto& w : rep.windows)
            ws.push_back({{"t_mid", w.t_mid},
                          {"slope", json_number(w.slope)},
                          {"rhs_mid", json_number(w.rhs_mid)},
                          {"residual", json_number(w.residual)},
                          {"direction_ok", w.direction_ok}});
        out["windows"] = ws;
        return out;
    };
    json out;
    out["config_hash"] = r.config_hash;
    out["coarse"] = one(r.coarse);
    out["fine"] = one(r.fine);
    out["residual_ratio"] = json_number(r.residual_ratio);
    return out;
}

json maxwell_json(const MaxwellPropagationReport& r) {
    json out;
    out["config_hash"] = r.config_hash;
    out["corridor_lo"] = r.corridor_lo;
    out["corridor_hi"] = r.corridor_hi;
    out["pass"] = r.pass;
    json series = json::array();
    for (std::size_t i = 0; i < r.times.size(); ++i)
        series.push_back({{"t", r.times[i]},
                          {"k_lo", json_number(r.envelopes[i].k_lo)},
                          {"K_hi", json_number(r.envelopes[i].K_hi)}});
    out["series"] = series;
    return out;
}

json moments_json(const MomentPropagationReport& r) {
    json out;
    out["config_hash"] = r.config_hash;
    out["moment_order"] = r.moment_order;
    out["growth_limit"] = r.growth_limit;
    out["pass"] = r.pass;
    out["times"] = r.times;
    out["moment_g"] = r.moment_g;
    out["moment_f"] = r.moment_f;
    return out;
}

json maxprinciple_json(const MaxPrincipleReport& r) {
    json out;
    out["config_hash"] = r.config_hash;
    out["max_subsolution"] = json_number(r.max_subsolution);
    out["max_supersolution"] = json_number(r.max_supersolution);
    out["max_sub_envelope"] = json_number(r.max_sub_envelope);
    out["max_super_envelope"] = json_number(r.max_super_envelope);
    out["control_max"] = json_number(r.control_max);
    out["omega_minus"] = r.omega_minus;
    out["omega_plus"] = r.omega_plus;
    out["tol"] = r.tol;
    out["pass"] = r.pass;
    return out;
}

json interpolation_json(const InterpolationReport& r) {
    json out;
    out["config_hash"] = r.config_hash;
    out["C_star"] = json_number(r.C_star);
    out["budget"] = r.budget;
    out["pass"] = r.pass;
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"field", c.field}, {"inequality", c.inequality},
                         {"required_C", json_number(c.required_C)}});
    out["cases"] = cases;
    return out;
}

int guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
}

}  // namespace

int cmd_simulate(const ExperimentConfig& cfg, const fs::path& out_dir) {
    return guarded([&] {
        fs::create_directories(out_dir);
        const fs::path marker = out_dir / ".incomplete";
        atomic_write(marker, "run in progress\n");
        atomic_write(out_dir / "config.json", canonical_config(cfg));

        ConvolutionEngine engine(cfg.grid);
        const ScalarField g0 = build_initial(cfg.grid, cfg.g0);
        SolverConfig sc;
        sc.T = cfg.T;
        sc.cfl = cfg.cfl;
        sc.projection = cfg.projection;
        sc.cadence = cfg.cadence;
        sc.snapshot_times = cfg.snapshot_times;
        sc.entropy_step_slack = tolerance(cfg, "entropy_step_slack");
        const Trajectory traj = evolve(g0, sc, engine);

        DiagnosticsContext ctx;
        ctx.kappa = cfg.kappa;
        ctx.nu = cfg.nu;
        ctx.zeta = cfg.zeta;
        ctx.rho = cfg.rho;
        ctx.mu_envelope = cfg.g0.mu;
        ctx.pair_opts.seed = cfg.seed;
        ctx.engine = &engine;
        std::vector<DiagnosticsRow> rows;
        for (const auto& s : traj.samples)
            rows.push_back(compute_diagnostics(s.t, s.g, nullptr,
                                               s.t > sc.t0 ? &s.report : nullptr, ctx));
        write_timeseries(out_dir / "timeseries.csv", rows);

        int snap_index = 0;
        for (const auto& s : traj.samples) {
            const bool wanted =
                s.t == cfg.T || std::any_of(cfg.snapshot_times.begin(), cfg.snapshot_times.end(),
                                            [&](double st) { return std::abs(st - s.t) <= 1e-12; });
            if (!wanted) continue;
            char name[32];
            std::snprintf(name, sizeof(name), "snapshot_%04d", snap_index++);
            write_snapshot(out_dir / name, s.g, s.t);
        }
        fs::remove(marker);
    });
}

int cmd_experiment(const ExperimentConfig& cfg, const fs::path& out_dir) {
    return guarded([&] {
        if (cfg.experiments.empty())
            throw ConfigError("experiment: config lists no experiments");
        fs::create_directories(out_dir);
        const fs::path marker = out_dir / ".incomplete";
        atomic_write(marker, "run in progress\n");
        atomic_write(out_dir / "config.json", canonical_config(cfg));

        for (const std::string& name : cfg.experiments) {
            const fs::path dir = out_dir / name;
            fs::create_directories(dir);
            json report;
            if (name == "weak_strong") {
                report = gronwall_json(run_weak_strong(cfg));
            } else if (name == "entropy_identity") {
                report = identity_json(run_entropy_identity(cfg));
            } else if (name == "maxwellian_propagation") {
                report = maxwell_json(run_maxwellian_propagation(cfg));
            } else if (name == "moment_propagation") {
                report = moments_json(run_moment_propagation(cfg));
            } else if (name == "maximum_principle") {
                report = maxprinciple_json(run_maximum_principle(cfg));
            } else if (name == "interpolation") {
                InterpolationReport r = run_interpolation_suite(
                    cfg.grid.half_width, tolerance(cfg, "interpolation_budget"));
                r.config_hash = cfg.config_hash;
                report = interpolation_json(r);
            } else {
                throw ConfigError("experiment: unknown experiment \"" + name + "\"");
            }
            atomic_write(dir / "report.json", report.dump(2) + "\n");
        }
        fs::remove(marker);
    });
}

int cmd_diagnose(const fs::path& f_base, const fs::path& g_base,
                 const std::vector<std::string>& functionals, std::string* table_out) {
    return guarded([&] {
        const ScalarField f = read_snapshot(f_base);
        std::optional<ScalarField> g;
        if (!g_base.empty()) g = read_snapshot(g_base);

        auto need_pair = [&]() -> const ScalarField& {
            if (!g) throw ConfigError("diagnose: functional requires a second snapshot (--g)");
            return *g;
        };

        std::string table;
        for (const std::string& name : functionals) {
            double value = 0.0;
            if (name == "mass") value = conserved_triple(f).mass;
            else if (name == "momentum_x") value = conserved_triple(f).momentum.x;
            else if (name == "momentum_y") value = conserved_triple(f).momentum.y;
            else if (name == "momentum_z") value = conserved_triple(f).momentum.z;
            else if (name == "energy") value = conserved_triple(f).energy;
            else if (name == "entropy") value = entropy(f);
            else if (name == "dissipation") value = entropy_dissipation(f).value;
            else if (name == "rel_entropy") value = relative_entropy(f, need_pair());
            else if (name == "pinsker_gap") value = pinsker_gap(f, need_pair());
            else if (name == "fisher") value = weighted_relative_fisher(f, need_pair());
            else if (name == "good_term") value = good_term(f, need_pair()).value;
            else if (name == "bad_term") value = bad_term(f, need_pair()).value;
            else if (name == "c0_hat") value = coercivity_c0(f).c0_hat;
            else if (name == "lambda_hat")
                value = ellipticity_constants(coeff_a_bar(f, KernelKind::Full)).lambda_hat;
            else if (name == "Lambda_hat")
                value = ellipticity_constants(coeff_a_bar(f, KernelKind::Full)).Lambda_hat;
            else throw ConfigError("diagnose: unknown functional \"" + name + "\"");
            table += name + "," + format_g17(value) + "\n";
        }
        std::fputs(table.c_str(), stdout);
        if (table_out) *table_out = table;
    });
}

}  // namespace landau
