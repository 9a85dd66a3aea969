#include "laghyp/catalog.hpp"

#include "laghyp/laguerre.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace laghyp {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::vector<CatalogEntry> default_catalog() {
    std::vector<CatalogEntry> out;
    for (double beta : {0.5, 1.0, 2.0}) {
        for (double eta : {0.5, 1.0, 2.0}) {
            CatalogEntry e;
            e.id = "gaussian_b" + num(beta) + "_e" + num(eta);
            e.kind = CatalogKind::gaussian;
            e.params = {{"beta", beta}, {"eta", eta}};
            out.push_back(e);
        }
    }
    out.push_back({"modulated_l2", CatalogKind::modulated_gaussian,
                   {{"beta", 1.0}, {"eta", 1.0}, {"lambda0", 2.0}}});
    out.push_back({"poly_gauss", CatalogKind::polynomial_gaussian, {{"beta", 1.0}, {"eta", 1.0}}});
    out.push_back({"shifted_bump", CatalogKind::shifted_bump, {{"rho0", 2.0}, {"width", 128.0}}});
    out.push_back({"eigen_packet", CatalogKind::eigen_packet,
                   {{"lambda0", 1.0}, {"m0", 2.0}, {"sigma", 2.0}}});
    return out;
}

std::vector<CatalogEntry> select_catalog(const std::string& selection) {
    std::vector<CatalogEntry> all = default_catalog();
    std::string sel = trim(selection);
    if (sel.empty() || sel == "all") return all;
    std::vector<CatalogEntry> out;
    std::stringstream ss(sel);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        bool found = false;
        for (const auto& e : all)
            if (e.id == tok) {
                out.push_back(e);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("unknown catalog entry: " + tok);
    }
    if (out.empty()) throw std::invalid_argument("catalog selection is empty");
    return out;
}

SampledFunction realize(const CatalogEntry& entry, std::shared_ptr<const SpaceGrid> grid,
                        const HypergroupContext& ctx) {
    auto param = [&](const std::string& key) {
        auto it = entry.params.find(key);
        if (it == entry.params.end())
            throw std::invalid_argument("catalog entry " + entry.id + " missing parameter " + key);
        return it->second;
    };
    switch (entry.kind) {
    case CatalogKind::gaussian: {
        double beta = param("beta"), eta = param("eta");
        return sample(grid, [=](double x, double t) {
            return std::complex<double>(std::exp(-beta * x * x - eta * t * t), 0.0);
        });
    }
    case CatalogKind::modulated_gaussian: {
        double beta = param("beta"), eta = param("eta"), l0 = param("lambda0");
        return sample(grid, [=](double x, double t) {
            double mag = std::exp(-beta * x * x - eta * t * t);
            return std::complex<double>(mag * std::cos(l0 * t), mag * std::sin(l0 * t));
        });
    }
    case CatalogKind::polynomial_gaussian: {
        double beta = param("beta"), eta = param("eta");
        return sample(grid, [=](double x, double t) {
            return std::complex<double>(x * x * std::exp(-beta * x * x - eta * t * t), 0.0);
        });
    }
    case CatalogKind::shifted_bump: {
        double rho0 = param("rho0"), width = param("width");
        double r4 = std::pow(rho0, 4.0);
        return sample(grid, [=](double x, double t) {
            double q = x * x * x * x + 4.0 * t * t - r4;
            return std::complex<double>(std::exp(-q * q / width), 0.0);
        });
    }
    case CatalogKind::eigen_packet: {
        double l0 = param("lambda0");
        int m0 = static_cast<int>(param("m0"));
        double sigma = param("sigma");
        return sample(grid, [&ctx, l0, m0, sigma](double x, double t) {
            std::complex<double> w = phi(DualPoint{l0, m0}, SpacePoint{x, t}, ctx);
            return w * std::exp(-(x * x + t * t) / (sigma * sigma));
        });
    }
    }
    throw std::logic_error("realize: unknown catalog kind");
}

} // namespace laghyp
