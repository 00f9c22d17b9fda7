#pragma once

#include <string>
#include <vector>

#include "jqd/errors.hpp"
#include "jqd/polynomial.hpp"

namespace jqd {

// Uniform probability measure on a root multiset; each atom weighs 1/n.
struct RootCountingMeasure {
    std::vector<cx> roots;

    std::size_t n() const { return roots.size(); }
    double weight() const { return roots.empty() ? 0.0 : 1.0 / double(roots.size()); }
};

struct RootFindingError : Error {
    RootFindingError(const std::string& what, std::vector<cx> best_iterate, double residual)
        : Error("nonconvergence", ErrorKind::numerical, what),
          best(std::move(best_iterate)), max_residual(residual) {}
    std::vector<cx> best;
    double max_residual;
};

struct RootDiagnostics {
    int digits = 0;          // working precision of the accepted tier (0 = double)
    int iterations = 0;      // summed over tiers
    double max_residual = 0; // max |p(r)| / (max|a| max(1,|r|)^deg)
};

// Aberth-Ehrlich with Newton polish and a-posteriori precision escalation.
// Post: every root r has |p(r)| <= tol * max|a| * max(1,|r|)^deg; roots closer
// than 1e-8 relative are merged to their mean. Output sorted by (re, im).
RootCountingMeasure find_roots(const ComplexPolynomial& poly, double tol = 1e-10,
                               RootDiagnostics* diag = nullptr);

inline constexpr double kSupportGuard = 1e-12;

// (1/n) sum 1/(z - xi). Throws on_support within 1e-12 (1 + |z|) of an atom.
cx empirical_cauchy(const RootCountingMeasure& mu, cx z);

// (1/n) sum log|z - xi|. Throws on_support as above.
double empirical_potential(const RootCountingMeasure& mu, cx z);

std::string roots_csv(const RootCountingMeasure& mu);
std::string roots_json(const RootCountingMeasure& mu);

}  // namespace jqd
