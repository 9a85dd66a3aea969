#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace laghyp {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Flat key=value configuration (section headers allowed, purely
/// cosmetic). Keys are the snake_case field names below; list values
/// are comma-separated.
struct SweepConfig {
    std::vector<double> alpha_list = {0.0, 1.0};
    std::vector<double> p_list = {1.0, 1.5, 2.0};
    std::vector<double> a_grid = {0.5, 1.0, 2.0};
    std::vector<double> b_grid = {1.0, 2.0, 3.0};

    double x_max = 10.0;
    double t_max = 16.0;
    int n_x = 288;
    int n_t = 384;
    double lambda_max = 16.0;
    int n_lambda = 176;
    int m_max = 65536;
    double nu_cap = 1024.0;

    double tol_smooth = 1e-6;
    double tol_fine = 1e-8;
    double tol_indicator = 1e-3;
    double rel_tol = 1e-10;

    std::string catalog = "all";
    std::string out_dir = "out";
    int threads = 1;
};

SweepConfig parse_config_text(const std::string& text);
SweepConfig parse_config_file(const std::string& path);

/// Effective worker count: the LAGHYP_THREADS environment variable wins
/// over the passed value; 0 means hardware concurrency.
int effective_threads(int configured);

} // namespace laghyp
