#include "fskan/emit.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>

namespace fskan {

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

std::string format_shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_number(double v) {
    if (v == 0.0) return "0";
    if (!std::isfinite(v)) return format_shortest(v);

    std::string s = format_shortest(v);
    const auto epos = s.find('e');
    std::string mantissa = epos == std::string::npos ? s : s.substr(0, epos);
    const std::string exponent = epos == std::string::npos ? "" : s.substr(epos);

    // significant digits: everything from the first nonzero digit on
    std::size_t significant = 0;
    bool seen_nonzero = false;
    for (const char ch : mantissa) {
        if (ch < '0' || ch > '9') continue;
        if (ch != '0') seen_nonzero = true;
        if (seen_nonzero) ++significant;
    }
    if (significant < 8) {
        if (mantissa.find('.') == std::string::npos) mantissa += '.';
        mantissa.append(8 - significant, '0');
    }
    return mantissa + exponent;
}

void emit_profile(const SolveReport& report, OutputFormat format, std::ostream& sink) {
    if (format == OutputFormat::json) {
        sink << report_to_json(report).dump(2) << '\n';
        return;
    }
    sink << "eta,f,fp,fpp\n";
    for (const auto& s : report.profile) {
        sink << format_number(s.eta) << ',' << format_number(s.f) << ',' << format_number(s.fp)
             << ',' << format_number(s.fpp) << '\n';
    }
}

void emit_convergence(const ConvergenceHistory& history, std::ostream& sink) {
    sink << "iteration,best_fitness,alpha,eta_inf\n";
    for (const auto& e : history) {
        sink << e.iteration << ',' << format_number(e.best_fitness) << ','
             << format_number(e.best.alpha) << ',' << format_number(e.best.eta_inf) << '\n';
    }
}

void emit_matrix(const std::vector<MatrixCell>& cells, std::ostream& sink) {
    sink << "beta0,beta,algorithm,alpha,eta_inf,residual,status\n";
    for (const auto& c : cells) {
        sink << format_number(c.params.beta0) << ',' << format_number(c.params.beta) << ','
             << algorithm_name(c.algorithm) << ',';
        if (c.ok) {
            sink << format_number(c.best.alpha) << ',' << format_number(c.best.eta_inf) << ','
                 << format_number(c.residual) << ",ok\n";
        } else {
            sink << ",,,failed\n";
        }
    }
}

nlohmann::json report_to_json(const SolveReport& report) {
    nlohmann::json j;
    j["params"] = {{"beta0", report.params.beta0}, {"beta", report.params.beta}};
    j["best"] = {{"alpha", report.best.alpha}, {"eta_inf", report.best.eta_inf}};
    j["residual"] = report.residual;
    j["history"] = nlohmann::json::array();
    for (const auto& e : report.history) {
        j["history"].push_back({{"iteration", e.iteration},
                                {"best_fitness", e.best_fitness},
                                {"alpha", e.best.alpha},
                                {"eta_inf", e.best.eta_inf}});
    }
    j["profile"] = nlohmann::json::array();
    for (const auto& s : report.profile) {
        j["profile"].push_back({{"eta", s.eta}, {"f", s.f}, {"fp", s.fp}, {"fpp", s.fpp}});
    }
    j["config"] = {{"algorithm", report.config.algorithm},
                   {"seed", report.config.seed},
                   {"population_size", report.config.population_size},
                   {"max_iterations", report.config.max_iterations},
                   {"n_steps", report.config.n_steps},
                   {"report_steps", report.config.report_steps}};
    return j;
}

SolveReport report_from_json(const nlohmann::json& j) {
    SolveReport report;
    report.params.beta0 = j.at("params").at("beta0").get<double>();
    report.params.beta = j.at("params").at("beta").get<double>();
    report.best.alpha = j.at("best").at("alpha").get<double>();
    report.best.eta_inf = j.at("best").at("eta_inf").get<double>();
    report.residual = j.at("residual").get<double>();
    for (const auto& e : j.at("history")) {
        report.history.push_back({e.at("iteration").get<std::size_t>(),
                                  e.at("best_fitness").get<double>(),
                                  {e.at("alpha").get<double>(), e.at("eta_inf").get<double>()}});
    }
    for (const auto& s : j.at("profile")) {
        report.profile.push_back({s.at("eta").get<double>(), s.at("f").get<double>(),
                                  s.at("fp").get<double>(), s.at("fpp").get<double>()});
    }
    const auto& c = j.at("config");
    report.config = {c.at("algorithm").get<std::string>(),
                     c.at("seed").get<std::uint64_t>(),
                     c.at("population_size").get<std::size_t>(),
                     c.at("max_iterations").get<std::size_t>(),
                     c.at("n_steps").get<std::size_t>(),
                     c.at("report_steps").get<std::size_t>()};
    return report;
}

}  // namespace fskan
