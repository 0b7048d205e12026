#ifndef SUPEROSC_CLI_HPP
#define SUPEROSC_CLI_HPP

// Command-line front end. `run` parses the arguments, executes one subcommand
// and returns the process exit code:
//
//   0  success
//   1  a verification check failed
//   2  usage error (unknown flag, malformed value, missing subcommand)
//   3  domain or range error (p outside (0,1), level outside 0..2j, ...)

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superosc/fourier.hpp"
#include "superosc/io.hpp"
#include "superosc/oracle.hpp"
#include "superosc/oscillator.hpp"
#include "superosc/verify.hpp"
#include "superosc/wavefunctions.hpp"

namespace superosc::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kDomain = 3 };

struct CliConfig {
    std::string command;
    int j = 1;
    double p = 0.5;
    std::vector<int> levels{0};
    std::string observable = "q";
    std::string kind = "position";
    std::string method = "analytic";
    std::string format = "csv";
    double tol = 1e-10;
    int j_max = 10;
    std::vector<double> p_list{0.1, 0.3, 0.5, 0.7, 0.9};
    double alpha = 5.0;
    int points = 15;
    std::string output;  // empty: standard output
};

namespace detail {

inline void emit_json(std::ostream& out, const io::Json& j) { out << j.dump(2) << '\n'; }

inline int cmd_spectrum(const CliConfig& cfg, std::ostream& out) {
    std::vector<double> values;
    if (cfg.observable == "H") {
        const RealMatrix h = oscillator::hamiltonian_matrix(cfg.j);
        for (Eigen::Index r = 0; r < h.rows(); ++r) values.push_back(h(r, r));
        std::sort(values.begin(), values.end());
    } else if (cfg.method == "oracle") {
        const ModelParams mp{cfg.j, cfg.p};
        const auto mq = oscillator::position_matrix(mp);
        if (cfg.observable == "q") {
            const auto eig = oracle::tridiag_eigen(mq.offdiag, mq.diag);
            values.assign(eig.values.data(), eig.values.data() + eig.values.size());
        } else {
            const ComplexMatrix m = oscillator::momentum_matrix(mp);
            std::vector<Complex> super;
            for (Eigen::Index r = 0; r + 1 < m.rows(); ++r) super.push_back(m(r, r + 1));
            const auto eig = oracle::hermitian_tridiag_eigen(super, mq.diag);
            values.assign(eig.values.data(), eig.values.data() + eig.values.size());
        }
    } else {
        ModelParams{cfg.j, cfg.p}.validate();
        values = oscillator::position_spectrum(cfg.j);
    }

    if (cfg.format == "json") {
        io::Json j;
        j["observable"] = cfg.observable;
        j["j"] = cfg.j;
        if (cfg.observable != "H") j["p"] = cfg.p;
        j["values"] = values;
        emit_json(out, j);
    } else {
        out << "value\n";
        for (double v : values) out << io::format_number(v) << '\n';
    }
    return kOk;
}

inline int cmd_wavefunction(const CliConfig& cfg, std::ostream& out) {
    const ModelParams mp{cfg.j, cfg.p};
    mp.validate();
    const bool momentum = cfg.kind == "momentum";
    std::vector<wavefunctions::WaveTable> tables;
    for (int n : cfg.levels)
        tables.push_back(momentum ? wavefunctions::momentum_wavefunction(mp, n)
                                  : wavefunctions::position_wavefunction(mp, n));
    if (cfg.format == "json") {
        io::Json arr = io::Json::array();
        for (const auto& t : tables) arr.push_back(io::to_json(t));
        emit_json(out, arr);
    } else {
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (i) out << '\n';
            io::write_csv(out, tables[i]);
        }
    }
    return kOk;
}

inline int cmd_fourier(const CliConfig& cfg, std::ostream& out) {
    const ModelParams mp{cfg.j, cfg.p};
    const auto f = cfg.method == "spectral" ? fourier::fourier_spectral(mp)
                                            : fourier::fourier_analytic(mp);
    if (cfg.format == "json") {
        io::Json j = io::to_json(f);
        j["p"] = cfg.p;
        j["method"] = cfg.method;
        emit_json(out, j);
    } else {
        io::write_csv(out, f);
    }
    return kOk;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    for (double p : cfg.p_list) ModelParams{0, p}.validate();
    verify::Tolerances tol;
    tol.matrix = cfg.tol;
    const auto report = verify::verify_sweep(cfg.j_max, cfg.p_list, tol);
    if (cfg.format == "json") {
        emit_json(out, io::to_json(report));
    } else {
        out << "# verify j=0.." << cfg.j_max << " p=";
        for (std::size_t i = 0; i < cfg.p_list.size(); ++i)
            out << (i ? "," : "") << io::format_number(cfg.p_list[i]);
        out << '\n';
        report.print(out);
        out << report.checks().size() << " checks, " << report.failures() << " failed\n";
    }
    return report.passed() ? kOk : kVerificationFailed;
}

inline int cmd_limits(const CliConfig& cfg, std::ostream& out) {
    if (cfg.levels.size() != 1) throw std::out_of_range("limits: exactly one --n level expected");
    const int level = cfg.levels.front();
    if (level < 0 || level % 2 != 0)
        throw std::out_of_range("limits: the paraboson comparison covers even levels only");
    const auto table =
        wavefunctions::paraboson_limit_table(cfg.j, cfg.p, cfg.alpha, level / 2, cfg.points);
    if (cfg.format == "json")
        emit_json(out, io::to_json(table));
    else
        io::write_csv(out, table);
    return kOk;
}

}  // namespace detail

inline int execute(const CliConfig& cfg, std::ostream& out) {
    if (cfg.command == "spectrum") return detail::cmd_spectrum(cfg, out);
    if (cfg.command == "wavefunction") return detail::cmd_wavefunction(cfg, out);
    if (cfg.command == "fourier") return detail::cmd_fourier(cfg, out);
    if (cfg.command == "verify") return detail::cmd_verify(cfg, out);
    if (cfg.command == "limits") return detail::cmd_limits(cfg, out);
    throw std::logic_error("unknown command " + cfg.command);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"sl(2|1) finite oscillator: spectra, wave functions, Fourier matrices, checks",
                 "superosc"};
    app.require_subcommand(1);
    app.allow_extras(false);

    const auto formats = CLI::IsMember({"csv", "json"});

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of q, p or H");
    spectrum->add_option("--j", cfg.j, "representation label")->required();
    spectrum->add_option("--p", cfg.p, "model parameter in (0,1)");
    spectrum->add_option("--observable", cfg.observable)->check(CLI::IsMember({"q", "p", "H"}));
    spectrum->add_option("--method", cfg.method, "analytic or oracle")
        ->check(CLI::IsMember({"analytic", "oracle"}));
    spectrum->add_option("--format", cfg.format)->check(formats);
    spectrum->add_option("--output", cfg.output);

    auto* wave = app.add_subcommand("wavefunction", "discrete wave-function tables");
    wave->add_option("--j", cfg.j)->required();
    wave->add_option("--p", cfg.p);
    wave->add_option("--n", cfg.levels, "comma-separated levels")->delimiter(',');
    wave->add_option("--kind", cfg.kind)->check(CLI::IsMember({"position", "momentum"}));
    wave->add_option("--format", cfg.format)->check(formats);
    wave->add_option("--output", cfg.output);

    auto* four = app.add_subcommand("fourier", "discrete Fourier matrix");
    four->add_option("--j", cfg.j)->required();
    four->add_option("--p", cfg.p);
    four->add_option("--method", cfg.method, "analytic or spectral")
        ->check(CLI::IsMember({"analytic", "spectral"}));
    four->add_option("--format", cfg.format)->check(formats);
    four->add_option("--output", cfg.output);

    auto* ver = app.add_subcommand("verify", "run the invariant suite over a (j, p) sweep");
    ver->add_option("--j-max", cfg.j_max);
    ver->add_option("--p-list", cfg.p_list)->delimiter(',');
    ver->add_option("--tol", cfg.tol, "tolerance of the matrix identities")
        ->envname("SUPEROSC_TOL")
        ->check(CLI::PositiveNumber);
    ver->add_option("--format", cfg.format)->check(formats);
    ver->add_option("--output", cfg.output);

    auto* lim = app.add_subcommand("limits", "paraboson comparison of an even level");
    lim->add_option("--j", cfg.j)->required();
    lim->add_option("--p", cfg.p);
    lim->add_option("--alpha", cfg.alpha);
    lim->add_option("--n", cfg.levels, "even level 2n")->delimiter(',');
    lim->add_option("--points", cfg.points, "number of grid points");
    lim->add_option("--format", cfg.format)->check(formats);
    lim->add_option("--output", cfg.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "superosc: " << e.what() << '\n';
        return kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.output.empty()) return execute(cfg, out);
        std::ofstream file(cfg.output);
        if (!file) {
            err << "superosc: cannot open " << cfg.output << '\n';
            return kUsage;
        }
        return execute(cfg, file);
    } catch (const std::domain_error& e) {
        err << "superosc: " << e.what() << '\n';
        return kDomain;
    } catch (const std::out_of_range& e) {
        err << "superosc: " << e.what() << '\n';
        return kDomain;
    }
}

}  // namespace superosc::cli

#endif  // SUPEROSC_CLI_HPP
