#ifndef SUPEROSC_IO_HPP
#define SUPEROSC_IO_HPP

// CSV and JSON forms of the tables produced by the library.
//
// Numbers are written with 17 significant digits. Complex values are [re, im]
// pairs in JSON and two adjacent columns in CSV.
//
// WaveTable CSV:
//   # j=<j> p=<p> n=<n> kind=<kind> energy=<n+0.5>
//   grid,amplitude_re[,amplitude_im]
//
// WaveTable JSON:
//   {"kind": "position"|"momentum", "j": int, "p": num, "n": int, "energy": num,
//    "grid": [num...], "amplitude": [num...] | [[re, im]...]}

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "superosc/fourier.hpp"
#include "superosc/types.hpp"
#include "superosc/wavefunctions.hpp"

namespace superosc::io {

using Json = nlohmann::ordered_json;

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // no "-0"
    return buf;
}

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

// ---------------------------------------------------------------------------
// wave tables
// ---------------------------------------------------------------------------

inline void write_csv(std::ostream& out, const wavefunctions::WaveTable& t) {
    const bool complex = t.kind == wavefunctions::WaveKind::Momentum;
    out << "# j=" << t.j << " p=" << format_number(t.p) << " n=" << t.n
        << " kind=" << wavefunctions::to_string(t.kind) << " energy=" << format_number(t.energy())
        << '\n';
    out << (complex ? "grid,amplitude_re,amplitude_im\n" : "grid,amplitude_re\n");
    for (std::size_t i = 0; i < t.size(); ++i) {
        out << format_number(t.grid[i]) << ',' << format_number(t.amplitude[i].real());
        if (complex) out << ',' << format_number(t.amplitude[i].imag());
        out << '\n';
    }
}

inline Json to_json(const wavefunctions::WaveTable& t) {
    Json out;
    out["kind"] = wavefunctions::to_string(t.kind);
    out["j"] = t.j;
    out["p"] = t.p;
    out["n"] = t.n;
    out["energy"] = t.energy();
    out["grid"] = t.grid;
    Json amp = Json::array();
    for (const auto& a : t.amplitude) {
        if (t.kind == wavefunctions::WaveKind::Momentum)
            amp.push_back(complex_to_json(a));
        else
            amp.push_back(a.real());
    }
    out["amplitude"] = std::move(amp);
    return out;
}

inline wavefunctions::WaveTable wave_table_from_json(const Json& in) {
    wavefunctions::WaveTable t;
    const auto kind = in.at("kind").get<std::string>();
    if (kind == "position")
        t.kind = wavefunctions::WaveKind::Position;
    else if (kind == "momentum")
        t.kind = wavefunctions::WaveKind::Momentum;
    else
        throw std::invalid_argument("unknown wave table kind: " + kind);
    t.j = in.at("j").get<int>();
    t.p = in.at("p").get<double>();
    t.n = in.at("n").get<int>();
    t.grid = in.at("grid").get<std::vector<double>>();
    for (const auto& a : in.at("amplitude"))
        t.amplitude.push_back(a.is_array() ? complex_from_json(a) : Complex(a.get<double>(), 0.0));
    if (t.grid.size() != t.amplitude.size())
        throw std::invalid_argument("wave table: grid and amplitude lengths differ");
    return t;
}

// ---------------------------------------------------------------------------
// Fourier matrix
// ---------------------------------------------------------------------------

/// One CSV row per label k; columns re_l, im_l for l = -j..j.
inline void write_csv(std::ostream& out, const fourier::FourierMatrix& f) {
    const int j = f.j();
    out << 'k';
    for (int l = -j; l <= j; ++l) out << ",re_" << l << ",im_" << l;
    out << '\n';
    for (int k = -j; k <= j; ++k) {
        out << k;
        for (int l = -j; l <= j; ++l) {
            const Complex z = f.at(k, l);
            out << ',' << format_number(z.real()) << ',' << format_number(z.imag());
        }
        out << '\n';
    }
}

inline Json to_json(const fourier::FourierMatrix& f) {
    const int j = f.j();
    Json rows = Json::array();
    for (int k = -j; k <= j; ++k) {
        Json row = Json::array();
        for (int l = -j; l <= j; ++l) row.push_back(complex_to_json(f.at(k, l)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["j"] = j;
    out["labels_from"] = -j;
    out["matrix"] = std::move(rows);
    return out;
}

inline fourier::FourierMatrix fourier_from_json(const Json& in) {
    const auto& rows = in.at("matrix");
    const auto dim = static_cast<Eigen::Index>(rows.size());
    ComplexMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        if (static_cast<Eigen::Index>(rows[r].size()) != dim)
            throw std::invalid_argument("fourier matrix: ragged rows");
        for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = complex_from_json(rows[r][c]);
    }
    return fourier::FourierMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// paraboson comparison
// ---------------------------------------------------------------------------

inline void write_csv(std::ostream& out, const wavefunctions::LimitTable& t) {
    out << "# j=" << t.j << " p=" << format_number(t.p) << " alpha=" << format_number(t.alpha)
        << " level=" << 2 * t.n << '\n';
    out << "k,x,discrete,continuum,alpha_gap\n";
    for (const auto& r : t.rows)
        out << r.k << ',' << format_number(r.x) << ',' << format_number(r.discrete) << ','
            << format_number(r.continuum) << ',' << format_number(r.alpha_gap) << '\n';
}

inline Json to_json(const wavefunctions::LimitTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"k", r.k},
                        {"x", r.x},
                        {"discrete", r.discrete},
                        {"continuum", r.continuum},
                        {"alpha_gap", r.alpha_gap}});
    Json out;
    out["j"] = t.j;
    out["p"] = t.p;
    out["alpha"] = t.alpha;
    out["level"] = 2 * t.n;
    out["rows"] = std::move(rows);
    return out;
}

// ---------------------------------------------------------------------------
// verification report
// ---------------------------------------------------------------------------

inline Json to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks())
        checks.push_back({{"name", c.name},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed}});
    Json out;
    out["passed"] = report.passed();
    out["failures"] = report.failures();
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace superosc::io

#endif  // SUPEROSC_IO_HPP
