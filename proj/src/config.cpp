#include "laghyp/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace laghyp {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return r;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    double d = parse_double(key, v);
    int i = static_cast<int>(d);
    if (static_cast<double>(i) != d) throw ConfigError("config: '" + key + "' must be an integer");
    return i;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) throw ConfigError("config: empty element in list '" + key + "'");
        out.push_back(parse_double(key, tok));
    }
    if (out.empty()) throw ConfigError("config: list '" + key + "' is empty");
    return out;
}

} // namespace

SweepConfig parse_config_text(const std::string& text) {
    SweepConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("config: malformed section header at line " +
                                  std::to_string(lineno));
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key=value at line " + std::to_string(lineno));
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config: empty key or value at line " + std::to_string(lineno));

        if (key == "alpha_list") cfg.alpha_list = parse_list(key, val);
        else if (key == "p_list") cfg.p_list = parse_list(key, val);
        else if (key == "a_grid") cfg.a_grid = parse_list(key, val);
        else if (key == "b_grid") cfg.b_grid = parse_list(key, val);
        else if (key == "x_max") cfg.x_max = parse_double(key, val);
        else if (key == "t_max") cfg.t_max = parse_double(key, val);
        else if (key == "n_x") cfg.n_x = parse_int(key, val);
        else if (key == "n_t") cfg.n_t = parse_int(key, val);
        else if (key == "lambda_max") cfg.lambda_max = parse_double(key, val);
        else if (key == "n_lambda") cfg.n_lambda = parse_int(key, val);
        else if (key == "m_max") cfg.m_max = parse_int(key, val);
        else if (key == "nu_cap") cfg.nu_cap = parse_double(key, val);
        else if (key == "tol_smooth") cfg.tol_smooth = parse_double(key, val);
        else if (key == "tol_fine") cfg.tol_fine = parse_double(key, val);
        else if (key == "tol_indicator") cfg.tol_indicator = parse_double(key, val);
        else if (key == "rel_tol") cfg.rel_tol = parse_double(key, val);
        else if (key == "catalog") cfg.catalog = val;
        else if (key == "out_dir") cfg.out_dir = val;
        else if (key == "threads") cfg.threads = parse_int(key, val);
        else throw ConfigError("config: unknown key '" + key + "'");
    }
    for (double a : cfg.alpha_list)
        if (a < 0.0) throw ConfigError("config: alpha_list entries must be >= 0");
    for (double p : cfg.p_list)
        if (p < 1.0) throw ConfigError("config: p_list entries must be >= 1");
    if (cfg.threads < 0) throw ConfigError("config: threads must be >= 0");
    return cfg;
}

SweepConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

int effective_threads(int configured) {
    if (const char* env = std::getenv("LAGHYP_THREADS")) {
        try {
            configured = std::stoi(env);
        } catch (const std::exception&) {
            throw ConfigError("LAGHYP_THREADS is not an integer");
        }
    }
    if (configured <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        configured = hw == 0 ? 1 : static_cast<int>(hw);
    }
    return configured;
}

} // namespace laghyp
