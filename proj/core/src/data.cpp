#include "sr1lab/data.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "sr1lab/errors.hpp"
#include "sr1lab/rng.hpp"

namespace sr1lab {

namespace {

double parse_label(const std::string& tok, int line_no) {
    double v = 0.0;
    std::size_t pos = 0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw MalformedLine("unreadable label '" + tok + "'", line_no);
    }
    if (pos != tok.size()) throw MalformedLine("trailing characters in label '" + tok + "'", line_no);
    if (v == 1.0) return 1.0;
    if (v == -1.0 || v == 0.0) return -1.0;
    throw NonBinaryLabel("label must be one of {+1, 1, -1, 0}, got '" + tok + "'", line_no);
}

}  // namespace

Dataset parse_libsvm(std::istream& in, std::string source) {
    std::vector<std::map<int, double>> rows;
    std::vector<double> labels;
    int width = 0;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream is(line);
        std::string tok;
        is >> tok;
        labels.push_back(parse_label(tok, line_no));

        std::map<int, double> row;
        int prev_index = 0;
        while (is >> tok) {
            const std::size_t colon = tok.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.size())
                throw MalformedLine("expected <index>:<value>, got '" + tok + "'", line_no);
            int index = 0;
            double value = 0.0;
            try {
                std::size_t pos = 0;
                index = std::stoi(tok.substr(0, colon), &pos);
                if (pos != colon) throw std::invalid_argument("index");
                value = std::stod(tok.substr(colon + 1), &pos);
                if (pos != tok.size() - colon - 1) throw std::invalid_argument("value");
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw MalformedLine("unreadable feature '" + tok + "'", line_no);
            }
            if (index < 1) throw NonAscendingIndex("indices are 1-based", line_no);
            if (index <= prev_index)
                throw NonAscendingIndex("index " + std::to_string(index) + " not ascending", line_no);
            if (!std::isfinite(value))
                throw MalformedLine("non-finite feature value", line_no);
            prev_index = index;
            row[index] = value;
            width = std::max(width, index);
        }
        rows.push_back(std::move(row));
    }

    const int m = static_cast<int>(rows.size());
    Dataset d;
    d.source = std::move(source);
    d.features = DenseMatrix(m, width);
    d.labels = std::move(labels);
    for (int i = 0; i < m; ++i)
        for (const auto& [index, value] : rows[i]) d.features(i, index - 1) = value;
    return d;
}

Dataset parse_libsvm_text(const std::string& text, std::string source) {
    std::istringstream in(text);
    return parse_libsvm(in, std::move(source));
}

void serialize_libsvm(const Dataset& d, std::ostream& out) {
    char buf[64];
    for (int i = 0; i < d.features.rows(); ++i) {
        out << (d.labels[i] > 0.0 ? "+1" : "-1");
        for (int j = 0; j < d.features.cols(); ++j) {
            const double v = d.features(i, j);
            if (v == 0.0) continue;
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << ' ' << (j + 1) << ':' << buf;
        }
        out << '\n';
    }
    if (!out) throw SinkFailure("serialize_libsvm: write failed");
}

Dataset gen_synthetic_logistic(int m, int n, std::uint64_t seed, double separation) {
    if (m < 1 || n < 1) throw DimensionMismatch("gen_synthetic_logistic: m, n >= 1");
    SplitMix64 rng(seed);

    Vector w(n);
    double wn = 0.0;
    for (int j = 0; j < n; ++j) {
        w[j] = rng.gaussian();
        wn += w[j] * w[j];
    }
    wn = std::sqrt(wn);
    for (int j = 0; j < n; ++j) w[j] /= wn;

    Dataset d;
    d.source = "synthetic(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
               ",seed=" + std::to_string(seed) + ")";
    d.features = DenseMatrix(m, n);
    d.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        double score = 0.0;
        for (int j = 0; j < n; ++j) {
            const double v = rng.gaussian();
            d.features(i, j) = v;
            score += v * w[j];
        }
        score *= separation;
        const double p = 1.0 / (1.0 + std::exp(-score));
        d.labels[i] = rng.uniform() < p ? 1.0 : -1.0;
    }
    return d;
}

QuadraticProblem gen_quadratic(int n, double kappa, std::uint64_t seed) {
    if (n < 1) throw DimensionMismatch("gen_quadratic: n >= 1");
    if (kappa < 1.0) throw NegativeArgument("gen_quadratic: kappa >= 1 required");
    SplitMix64 rng(seed);

    Vector spectrum(n, 1.0);
    if (kappa == 1.0) {
        // conditioned perfectly: the matrix is the identity
    } else {
        spectrum[n - 1] = kappa;
        const double lk = std::log(kappa);
        for (int i = 1; i + 1 < n; ++i) spectrum[i] = std::exp(rng.uniform() * lk);
    }
    SymMatrix a = SymMatrix::diagonal(spectrum);

    if (kappa > 1.0) {
        // Random orthogonal similarity built from Householder reflectors,
        // applied two-sided so the spectrum is preserved to rounding.
        for (int r = 0; r < n; ++r) {
            Vector v(n);
            double vv = 0.0;
            for (int j = 0; j < n; ++j) {
                v[j] = rng.gaussian();
                vv += v[j] * v[j];
            }
            if (vv == 0.0) continue;
            const Vector av = a.matvec(v);
            const double vav = dot(v, av);
            // H a H with H = I - 2 vv'/v'v:
            //   a - 2/vv (av v' + v av') + 4 vav/vv^2 v v'
            SymMatrix next = a;
            const double c = 2.0 / vv;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j)
                    next.add(i, j, -c * (av[i] * v[j] + v[i] * av[j]) + c * c * vav * v[i] * v[j]);
            a = std::move(next);
        }
    }

    Vector b(n);
    for (int j = 0; j < n; ++j) b[j] = rng.gaussian();
    return {std::move(a), std::move(b)};
}

LogisticProblem make_logistic_problem(const Dataset& d, double gamma) {
    const double g = gamma >= 0.0 ? gamma : 1.0 / (10.0 * d.features.rows());
    return {d.features, d.labels, g};
}

}  // namespace sr1lab
