#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace test_support {

// Composite Simpson quadrature on [a, b].
double simpson(const std::function<double(double)>& f, double a, double b, int intervals = 4096);

struct MeanVar {
    double mean = 0.0;
    double variance = 0.0;  // unbiased
};

MeanVar mean_and_variance(const std::vector<double>& samples);

// Two-sample Kolmogorov-Smirnov test; returns the asymptotic p-value.
double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b);

// Least-squares slope/intercept of y against x.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace test_support
