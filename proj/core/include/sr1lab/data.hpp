#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "sr1lab/linalg.hpp"
#include "sr1lab/objectives.hpp"

namespace sr1lab {

/// Dense binary-classification dataset with labels in {-1, +1}.
struct Dataset {
    DenseMatrix features;
    Vector labels;
    std::string source;
};

/// Parses the LIBSVM text format: one sample per nonempty line,
///   <label> <index>:<value> ...
/// with 1-based strictly ascending indices. Labels 0/-1 map to -1 and
/// +1/1 to +1; '#' lines are comments. Malformed input throws a
/// ParseError subtype carrying the offending line number.
Dataset parse_libsvm(std::istream& in, std::string source = "stream");
Dataset parse_libsvm_text(const std::string& text, std::string source = "text");

/// Writes a dataset back in LIBSVM form, zeros omitted, values with 17
/// significant digits so a reparse reproduces every double exactly.
void serialize_libsvm(const Dataset& d, std::ostream& out);

/// Gaussian features with a planted direction scaled by `separation`;
/// labels from the ground-truth linear rule plus logistic noise.
Dataset gen_synthetic_logistic(int m, int n, std::uint64_t seed, double separation);

/// SPD test problem with log-uniform spectrum on [1, kappa]; the extreme
/// eigenvalues are placed at 1 and kappa exactly, the right-hand side is
/// Gaussian.
QuadraticProblem gen_quadratic(int n, double kappa, std::uint64_t seed);

/// Logistic problem from a dataset with the default ridge gamma = 1/(10m)
/// unless overridden.
LogisticProblem make_logistic_problem(const Dataset& d, double gamma = -1.0);

}  // namespace sr1lab
