#include "specband/csv.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace specband {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw config_error("cannot open '" + path.string() + "' for writing");
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_spectrum_csv(const std::filesystem::path& path, const SpectrumSet& s) {
    auto out = open_out(path);
    out << "re,im,source\n";
    for (std::size_t i = 0; i < s.points.size(); ++i)
        out << format_double(s.points[i].real()) << ',' << format_double(s.points[i].imag())
            << ',' << s.source_of_point(i) << '\n';
}

void write_pseudospec_csv(const std::filesystem::path& csv_path,
                          const std::filesystem::path& header_path, const PseudospecGrid& g) {
    {
        auto out = open_out(csv_path);
        out << "z_re,z_im,sigma_min\n";
        for (std::int64_t i_im = 0; i_im < g.sigma.rows(); ++i_im)
            for (std::int64_t i_re = 0; i_re < g.sigma.cols(); ++i_re) {
                const Complex z = g.grid.node(i_re, i_im);
                out << format_double(z.real()) << ',' << format_double(z.imag()) << ','
                    << format_double(g.sigma(i_im, i_re)) << '\n';
            }
    }
    nlohmann::ordered_json h;
    h["rectangle"] = {{"re_lo", g.grid.re_lo}, {"re_hi", g.grid.re_hi},
                      {"im_lo", g.grid.im_lo}, {"im_hi", g.grid.im_hi}};
    h["step"] = g.grid.step;
    h["eps"] = g.eps;
    auto out = open_out(header_path);
    out << h.dump(2) << '\n';
}

void write_containment_csv(const std::filesystem::path& path, std::span<const Complex> zs,
                           std::span<const double> sigmas) {
    auto out = open_out(path);
    out << "z_re,z_im,sigma_min\n";
    for (std::size_t i = 0; i < zs.size(); ++i)
        out << format_double(zs[i].real()) << ',' << format_double(zs[i].imag()) << ','
            << format_double(sigmas[i]) << '\n';
}

}  // namespace specband
