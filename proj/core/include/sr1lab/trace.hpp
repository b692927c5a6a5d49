#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace sr1lab {

enum class DenomSign { Pos, Neg, Zero };

/// One row of a solver trace. Optional entries are only present when the
/// run was made with diagnostics enabled.
struct IterationRecord {
    int k = 0;
    double f_value = 0.0;
    double grad_norm = 0.0;
    double lambda_f = 0.0;
    double g_norm = 0.0;
    double r_k = 0.0;
    double a_k = 1.0;
    std::optional<double> nu;
    std::optional<double> theta;
    std::optional<double> sigma;
    std::optional<double> v_potential;
    bool skipped = false;
    DenomSign denom_sign = DenomSign::Zero;
};

/// Everything needed to reproduce a run bit for bit. The timestamp is
/// informational only and is never written into trace files.
struct RunManifest {
    std::string method;
    std::string config;
    int n = 0;
    double kappa = 0.0;
    double mu = 0.0;
    double lip = 0.0;
    double m_const = 0.0;
    double gamma = 0.0;
    std::uint64_t seed = 0;
    std::string timestamp;
};

}  // namespace sr1lab
