#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdeform/parallel.hpp"
#include "qdeform/rational.hpp"

namespace qdeform {

// The tuple driving the whole construction. Hypotheses:
//   a != 0 with valuation >= 1,
//   b, c, d congruent to 1 mod t, c != d,
//   z != 0 with valuation >= 1,
//   (x+w)(x+c)(x+d) = x*(x^2+a*x+b) + a   as polynomials,
//   pi(x) = x^2+a*x+b irreducible over GF(2)(t).
struct DeformationParams {
    Rational a, b, c, d, w, z;
    unsigned series_precision = 16;

    bool operator==(const DeformationParams&) const = default;

    // Key-value lines in the rational-function grammar.
    std::string str() const;
};

// The worked example: a=(t+t^2+t^3)/(1+t), b=1+t^2+t^3, c=1/(1+t),
// d=1+t+t^2, w=t; z=t is this tool's default choice of non-unit.
DeformationParams example_params();

struct ValidationEntry {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    bool ok() const;
    const ValidationEntry* find(const std::string& name) const;
    std::string str() const;
};

// Checks every hypothesis, the cubic identity both directly and through
// the coefficient system {a = w+c+d, b = wc+wd+cd, w+c+d = wcd}, and the
// irreducibility of pi. Failures are report entries, never exceptions.
ValidationReport validate(const DeformationParams& p);

struct SearchResult {
    std::vector<DeformationParams> found;
    std::size_t candidates_tested = 0;
    // Regression anchor: the example tuple must keep validating.
    bool example_reaccepted = false;
};

// Enumerates polynomial tuples (w, c, d) over GF(2) of degree <= degree_bound
// with c(0) = d(0) = 1, derives a = w+c+d and b = wc+wd+cd, and keeps the
// tuples that pass validate(). An empty result is a valid outcome.
SearchResult search_params(unsigned degree_bound, std::size_t limit,
                           ExecPolicy policy = ExecPolicy::Parallel);

// Flat key-value document: keys a, b, c, d, w, z, precision; '#' comments.
// a and b may be omitted when w, c, d are present (derived from them);
// z defaults to t, precision to 16.
DeformationParams parse_params_text(const std::string& text);
DeformationParams load_params_file(const std::string& path);

}  // namespace qdeform
