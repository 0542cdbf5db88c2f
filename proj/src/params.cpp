#include "subexp/params.hpp"

#include "subexp/errors.hpp"
#include "subexp/rational.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace subexp {

Iter3Params iter3_params(long long k, double delta, double mu, double b) {
    if (k < 1) throw ArgumentError("iter3_params: k must be >= 1");
    if (!(delta > 2.0 / 3.0 && delta <= 1)) throw ArgumentError("iter3_params: delta must lie in (2/3, 1]");
    if (!(mu > 0 && mu <= 1)) throw ArgumentError("iter3_params: mu must lie in (0, 1]");
    if (!(b > 1)) throw ArgumentError("iter3_params: b must be > 1");
    const double kd = static_cast<double>(k);
    Iter3Params p;
    p.eps = 1.0 / (6.0 * std::pow(kd, 1.0 - delta) * std::log(b));
    p.m = ceil_snapped(1.0 / (2.0 * p.eps * p.eps));
    p.t = floor_snapped(std::exp(std::pow(kd, delta) / 6.0));
    return p;
}

double expansion_bound_from_witness(const WitnessFunction& g, int k) {
    if (k < 0) throw ArgumentError("expansion_bound_from_witness: k must be >= 0");
    return 2.0 * g(1.0 / (4.0 * k + 4.0), k);
}

WitnessFunction witness_function_from_spec(const std::string& spec) {
    if (spec.rfind("const:", 0) == 0) {
        double v = 0;
        try {
            v = std::stod(spec.substr(6));
        } catch (const std::exception&) {
            throw ArgumentError("witness function: bad constant in '" + spec + "'");
        }
        return [v](double, int) { return v; };
    }
    if (spec == "inverse") return [](double eps, int) { return 1.0 / eps; };
    if (spec.rfind("table:", 0) == 0) {
        const std::string path = spec.substr(6);
        std::ifstream in(path);
        if (!in) throw ArgumentError("witness function: cannot open table " + path);
        std::map<int, std::vector<std::pair<double, double>>> rows;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            double eps = 0, value = 0;
            int k = 0;
            if (!(ls >> eps >> k >> value)) throw ParseError(lineno, "expected 'eps k value'");
            rows[k].push_back({eps, value});
        }
        return [rows, path](double eps, int k) {
            if (auto it = rows.find(k); it != rows.end())
                for (const auto& [e, v] : it->second)
                    if (std::abs(e - eps) <= 1e-6 * std::abs(eps)) return v;
            throw ArgumentError("witness table " + path + " has no entry for eps=" + std::to_string(eps) +
                                ", k=" + std::to_string(k));
        };
    }
    throw ArgumentError("witness function: expected const:<v>, inverse, or table:<path>");
}

double subexponential_reference(double gamma, int k) { return gamma * std::exp(std::pow(static_cast<double>(k), 0.75)); }

}  // namespace subexp
