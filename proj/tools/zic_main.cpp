#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "zic/gaussian.hpp"
#include "zic/regions.hpp"
#include "zic/schemes.hpp"
#include "zic/verifier.hpp"

namespace {

using zic::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    if (out.empty()) throw std::invalid_argument("empty list: '" + s + "'");
    return out;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& item : split_list(s)) {
        std::size_t pos = 0;
        out.push_back(std::stod(item, &pos));
        if (pos != item.size()) throw std::invalid_argument("bad number: '" + item + "'");
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& item : split_list(s)) {
        std::size_t pos = 0;
        out.push_back(std::stoi(item, &pos));
        if (pos != item.size()) throw std::invalid_argument("bad integer: '" + item + "'");
    }
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& item : split_list(s)) out.push_back(Rational::parse(item));
    return out;
}

// All output flows through here so --out and stdout behave identically.
struct Sink {
    std::optional<std::ofstream> file;
    std::ostream& stream() { return file ? *file : std::cout; }

    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file.emplace(path);
            if (!*file) throw std::runtime_error("cannot open output file: " + path);
        }
    }
};

int enum_cap_from_env() {
    const char* env = std::getenv("ZIC_ENUM_CAP");
    if (!env) return zic::verifier::kDefaultEnumCap;
    try {
        int cap = std::stoi(env);
        if (cap < 0) throw std::invalid_argument("negative");
        return cap;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("ZIC_ENUM_CAP must be a nonnegative integer, got '") +
                                    env + "'");
    }
}

json region_json(const zic::det::DetConfig& cfg) {
    const auto region = zic::regions::capacity_region(cfg);
    json j;
    j["m"] = cfg.m;
    j["n"] = cfg.n;
    j["C"] = cfg.C;
    j["regime"] = zic::det::regime_name(zic::det::regime(cfg));
    json cons = json::array();
    for (const auto& c : region.constraints)
        cons.push_back({{"a", c.a.str()}, {"b", c.b.str()}, {"c", c.c.str()}});
    j["constraints"] = cons;
    json verts = json::array();
    for (const auto& v : zic::regions::vertices(region))
        verts.push_back({v.first.str(), v.second.str()});
    j["vertices"] = verts;
    return j;
}

int run_det_region(int m, int n, int C, const std::string& format, Sink& sink) {
    auto cfg = zic::det::make_config(m, n, C);
    if (format == "json") {
        sink.stream() << region_json(cfg).dump(2) << "\n";
        return kExitOk;
    }
    sink.stream() << "R1,R2\n";
    for (const auto& v : zic::regions::vertices(zic::regions::capacity_region(cfg)))
        sink.stream() << v.first.str() << "," << v.second.str() << "\n";
    return kExitOk;
}

json report_json(const zic::verifier::VerificationReport& rep, const std::string& label) {
    json j;
    j["scheme"] = label;
    j["ratePair"] = {rep.rate_pair.first, rep.rate_pair.second};
    j["decodable1"] = rep.decodable1;
    j["decodable2"] = rep.decodable2;
    if (rep.mutual_info_bits) {
        j["mutualInfoBits"] = rep.mutual_info_bits->str_ratio();
        j["mutualInfoBitsFloat"] = rep.mutual_info_bits->to_double();
    } else {
        j["mutualInfoBits"] = nullptr;
        j["mutualInfoBitsFloat"] = nullptr;
    }
    j["secrecyAlgebraic"] = rep.secrecy_algebraic;
    j["coopBudgetOk"] = rep.coop_budget_ok;
    if (rep.warning) j["warning"] = *rep.warning;
    j["allGreen"] = rep.all_green();
    return j;
}

int run_det_verify(int m, int n, int C, const std::string& scheme_file, Sink& sink) {
    auto cfg = zic::det::make_config(m, n, C);
    const int cap = enum_cap_from_env();

    json out;
    out["m"] = cfg.m;
    out["n"] = cfg.n;
    out["C"] = cfg.C;
    out["regime"] = zic::det::regime_name(zic::det::regime(cfg));
    out["enumCap"] = cap;
    json reports = json::array();
    bool all_green = true;

    if (!scheme_file.empty()) {
        std::ifstream in(scheme_file);
        if (!in) throw std::runtime_error("cannot open scheme file: " + scheme_file);
        std::stringstream buf;
        buf << in.rdbuf();
        auto s = zic::schemes::from_json(buf.str());
        auto rep = zic::verifier::verify(cfg, s, cap);
        all_green = rep.all_green();
        reports.push_back(report_json(rep, scheme_file));
    } else {
        for (auto corner : zic::schemes::corners_for(zic::det::regime(cfg))) {
            auto s = zic::schemes::corner_scheme(cfg, corner);
            auto rep = zic::verifier::verify(cfg, s, cap);
            all_green = all_green && rep.all_green();
            reports.push_back(report_json(rep, zic::schemes::corner_name(corner)));
        }
    }
    out["reports"] = reports;
    out["allGreen"] = all_green;
    sink.stream() << out.dump(2) << "\n";
    return all_green ? kExitOk : kExitCheckFailed;
}

int run_det_sum_curve(int m, const std::string& c_list, const std::string& alpha_grid,
                      const std::string& format, Sink& sink) {
    std::vector<int> cs = c_list.empty() ? std::vector<int>{0} : parse_ints(c_list);
    std::vector<Rational> alphas;
    if (alpha_grid.empty()) {
        for (int k = 0; k <= 3 * m; ++k) alphas.push_back(Rational(k, m));
    } else {
        alphas = parse_rationals(alpha_grid);
    }

    if (format == "json") {
        json rows = json::array();
        for (int C : cs)
            for (const auto& pt : zic::regions::sum_capacity_curve(m, C, alphas))
                rows.push_back({{"alpha", pt.alpha.str()},
                                {"C", C},
                                {"norm_sum", pt.normalized_sum.str()}});
        sink.stream() << json{{"m", m}, {"rows", rows}}.dump(2) << "\n";
        return kExitOk;
    }
    sink.stream() << "alpha,C,norm_sum\n";
    for (int C : cs)
        for (const auto& pt : zic::regions::sum_capacity_curve(m, C, alphas))
            sink.stream() << fmt(pt.alpha.to_double()) << "," << C << ","
                          << fmt(pt.normalized_sum.to_double()) << "\n";
    return kExitOk;
}

int run_gauss_region(double P, double hd, double hc, double CG, int density,
                     const std::string& format, Sink& sink) {
    auto cfg = zic::gauss::make_config(P, hd, hc, CG);
    if (density < 2) throw std::invalid_argument("--grid-density must be at least 2");
    auto frontier = zic::gauss::achievable_region(cfg, zic::gauss::GridSpec::uniform(density));
    if (format == "json") {
        json pts = json::array();
        for (const auto& p : frontier) pts.push_back({p.first, p.second});
        sink.stream() << json{{"P", P},       {"hd", hd},          {"hc", hc},
                              {"CG", CG},     {"gridDensity", density},
                              {"frontier", pts}}
                             .dump(2)
                      << "\n";
        return kExitOk;
    }
    sink.stream() << "R1,R2\n";
    for (const auto& p : frontier)
        sink.stream() << fmt(p.first) << "," << fmt(p.second) << "\n";
    return kExitOk;
}

int run_gauss_gdof(const std::string& kappa_grid, const std::string& gamma_list,
                   const std::string& format, Sink& sink) {
    std::vector<double> kappas;
    if (kappa_grid.empty()) {
        for (int i = 0; i <= 20; ++i) kappas.push_back(i / 20.0);
    } else {
        kappas = parse_doubles(kappa_grid);
    }
    std::vector<double> gammas =
        gamma_list.empty() ? std::vector<double>{0, 0.5, 1} : parse_doubles(gamma_list);
    const std::vector<double> snrs = {1e6, 1e9, 1e12};

    if (format == "json") {
        json rows = json::array();
        for (double g : gammas)
            for (double k : kappas)
                rows.push_back({{"kappa", k},
                                {"gamma", g},
                                {"dsum_formula", zic::gauss::sum_gdof(k, g)},
                                {"dsum_numeric", zic::gauss::gdof_numeric(k, g, snrs)}});
        sink.stream() << json{{"rows", rows}}.dump(2) << "\n";
        return kExitOk;
    }
    sink.stream() << "kappa,gamma,dsum_formula,dsum_numeric\n";
    for (double g : gammas)
        for (double k : kappas)
            sink.stream() << fmt(k) << "," << fmt(g) << ","
                          << fmt(zic::gauss::sum_gdof(k, g)) << ","
                          << fmt(zic::gauss::gdof_numeric(k, g, snrs)) << "\n";
    return kExitOk;
}

int run_gauss_gap(const std::string& p_list, double hd, const std::string& hc_list,
                  const std::string& cg_list, const std::string& format, Sink& sink) {
    std::vector<double> ps = p_list.empty()
                                 ? std::vector<double>{10, 100, 1000, 10000, 100000, 1000000}
                                 : parse_doubles(p_list);
    std::vector<double> hcs = hc_list.empty()
                                  ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}
                                  : parse_doubles(hc_list);
    std::vector<double> cgs =
        cg_list.empty() ? std::vector<double>{0, 0.5, 1, 2, 10} : parse_doubles(cg_list);

    json rows = json::array();
    std::ostringstream csv;
    csv << "P,hc,CG,lower,outer,gap\n";
    for (double P : ps)
        for (double hc : hcs)
            for (double CG : cgs) {
                auto cfg = zic::gauss::make_config(P, hd, hc, CG);
                // Rows outside the lower bound's domain are skipped.
                if (!(cfg.inr() > 1.0) || !(cfg.inr() < cfg.snr())) continue;
                double lo = zic::gauss::sum_rate_lower(cfg);
                double hi = zic::gauss::sum_rate_outer(cfg);
                if (format == "json")
                    rows.push_back({{"P", P},
                                    {"hc", hc},
                                    {"CG", CG},
                                    {"lower", lo},
                                    {"outer", hi},
                                    {"gap", hi - lo}});
                else
                    csv << fmt(P) << "," << fmt(hc) << "," << fmt(CG) << "," << fmt(lo) << ","
                        << fmt(hi) << "," << fmt(hi - lo) << "\n";
            }
    if (format == "json")
        sink.stream() << json{{"hd", hd}, {"rows", rows}}.dump(2) << "\n";
    else
        sink.stream() << csv.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Z interference channel with unidirectional transmitter cooperation: "
                 "deterministic-model scheme verification and Gaussian-model bounds"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "csv";
    std::string out_path;

    int m = 0, n = 0, C = 0;
    std::string scheme_file, c_list, alpha_grid, kappa_grid, gamma_list;
    std::string p_list, hc_list, cg_list;
    double P = 100, hd = 1, hc = 0, CG = 0;
    int grid_density = 17;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    auto* det_region =
        app.add_subcommand("det-region", "capacity-region constraints and vertices");
    det_region->add_option("--m", m, "direct-link levels")->required();
    det_region->add_option("--n", n, "cross-link levels")->required();
    det_region->add_option("--C", C, "cooperative bits per use")->required();
    add_common(det_region);

    auto* det_verify = app.add_subcommand(
        "det-verify", "verify corner schemes (or a scheme file) for decodability, "
                      "exact secrecy, and cooperation budget");
    det_verify->add_option("--m", m)->required();
    det_verify->add_option("--n", n)->required();
    det_verify->add_option("--C", C)->required();
    det_verify->add_option("--scheme-file", scheme_file, "verify this JSON scheme instead");
    add_common(det_verify);

    auto* det_curve =
        app.add_subcommand("det-sum-curve", "normalized sum capacity against alpha");
    det_curve->add_option("--m", m)->required();
    det_curve->add_option("--C", c_list, "comma-separated C values (default 0)");
    det_curve->add_option("--alpha-grid", alpha_grid,
                          "comma-separated rationals (default k/m, k = 0..3m)");
    add_common(det_curve);

    auto* gauss_region =
        app.add_subcommand("gauss-region", "achievable secrecy rate frontier");
    gauss_region->add_option("--P", P)->required();
    gauss_region->add_option("--hd", hd)->capture_default_str();
    gauss_region->add_option("--hc", hc)->required();
    gauss_region->add_option("--CG", CG)->required();
    gauss_region->add_option("--grid-density", grid_density, "samples per codebook parameter")
        ->capture_default_str();
    add_common(gauss_region);

    auto* gauss_gdof = app.add_subcommand("gauss-gdof", "secure sum GDOF: formula vs numeric");
    gauss_gdof->add_option("--kappa-grid", kappa_grid,
                           "comma-separated kappa values (default 0..1 step 0.05)");
    gauss_gdof->add_option("--gamma", gamma_list, "comma-separated gamma values (default 0,0.5,1)");
    add_common(gauss_gdof);

    auto* gauss_gap =
        app.add_subcommand("gauss-gap", "lower/outer sum-rate bounds and their gap");
    gauss_gap->add_option("--P", p_list, "comma-separated powers (default decades 10..1e6)");
    gauss_gap->add_option("--hd", hd)->capture_default_str();
    gauss_gap->add_option("--hc", hc_list, "comma-separated cross gains (default 0.1..0.9)");
    gauss_gap->add_option("--CG", cg_list, "comma-separated link rates (default 0,0.5,1,2,10)");
    add_common(gauss_gap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Sink sink(out_path);
        if (det_region->parsed()) return run_det_region(m, n, C, format, sink);
        if (det_verify->parsed()) return run_det_verify(m, n, C, scheme_file, sink);
        if (det_curve->parsed()) return run_det_sum_curve(m, c_list, alpha_grid, format, sink);
        if (gauss_region->parsed())
            return run_gauss_region(P, hd, hc, CG, grid_density, format, sink);
        if (gauss_gdof->parsed()) return run_gauss_gdof(kappa_grid, gamma_list, format, sink);
        if (gauss_gap->parsed())
            return run_gauss_gap(p_list, hd, hc_list, cg_list, format, sink);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
