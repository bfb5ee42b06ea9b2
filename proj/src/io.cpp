#include "susyhbs/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "susyhbs/errors.hpp"

namespace susyhbs {

std::string format_number(scalar_t v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    const fs::path tmp = dir / (".tmp-" + path.filename().string());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into place at " + path.string());
    }
}

std::string pair_csv(const PartnerPair& pair) {
    std::ostringstream out;
    out << "x,W,Wprime,Vminus,Vplus\n";
    for (index_t i = 0; i < pair.grid.n_points; ++i) {
        out << format_number(pair.grid.x(i)) << ',' << format_number(pair.w(i)) << ','
            << format_number(pair.w_prime(i)) << ',' << format_number(pair.v_minus(i))
            << ',' << format_number(pair.v_plus(i)) << '\n';
    }
    return out.str();
}

std::string spectrum_csv(const Spectrum& spectrum) {
    std::ostringstream out;
    out << "index,E,nodes,residual,domain_used\n";
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        out << i << ',' << format_number(spectrum.energies[i]) << ','
            << spectrum.node_counts[i] << ','
            << format_number(spectrum.diagnostics[i].mismatch_residual) << ','
            << format_number(spectrum.diagnostics[i].domain_used) << '\n';
    }
    return out.str();
}

std::string curve_csv(const ScatteringCurve& curve) {
    std::ostringstream out;
    out << "E,R,T,residual\n";
    for (const auto& p : curve.points) {
        out << format_number(p.E) << ',' << format_number(p.R) << ','
            << format_number(p.T) << ',' << format_number(p.unitarity_residual)
            << '\n';
    }
    return out.str();
}

std::string area_json(const AreaReport& report) {
    std::ostringstream out;
    out << "{\n"
        << "  \"I\": " << format_number(report.I) << ",\n"
        << "  \"I_weighted\": " << format_number(report.I_weighted) << ",\n"
        << "  \"sign\": \"" << area_sign_name(report.sign) << "\",\n"
        << "  \"prediction\": \"" << prediction_name(report.prediction) << "\"\n"
        << "}\n";
    return out.str();
}

}  // namespace susyhbs
