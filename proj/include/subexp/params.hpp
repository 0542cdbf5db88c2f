#pragma once

#include <functional>
#include <string>

namespace subexp {

struct Iter3Params {
    double eps = 0;
    long long m = 0;
    long long t = 0;
};

// eps = 1/(6 k^{1-delta} ln b), m = ceil(1/(2 eps^2)), t = floor(e^{k^delta / 6}).
Iter3Params iter3_params(long long k, double delta, double mu, double b);

using WitnessFunction = std::function<double(double eps, int k)>;

// f(k) = 2 g(1/(4k+4), k).
double expansion_bound_from_witness(const WitnessFunction& g, int k);

// g from a spec string: "const:<v>", "inverse" (g = 1/eps), or "table:<path>" where
// the file holds lines "eps k value" ('#' comments allowed). Lookups match eps to a
// relative 1e-6, so tables written with six significant digits work.
WitnessFunction witness_function_from_spec(const std::string& spec);

// gamma * e^{k^{3/4}}: the subexponential reference curve used by `profile`.
double subexponential_reference(double gamma, int k);

}  // namespace subexp
