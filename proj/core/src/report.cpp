#include "sr1lab/report.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sr1lab/errors.hpp"

namespace sr1lab {

namespace {

constexpr const char* kTraceHeader =
    "k,f_value,grad_norm,lambda_f,g_norm,r_k,a_k,nu,theta,sigma,v_potential,skipped,denom_sign";

const char* denom_sign_name(DenomSign s) {
    switch (s) {
        case DenomSign::Pos: return "pos";
        case DenomSign::Neg: return "neg";
        case DenomSign::Zero: return "zero";
    }
    return "zero";
}

DenomSign parse_denom_sign(const std::string& s, int line_no) {
    if (s == "pos") return DenomSign::Pos;
    if (s == "neg") return DenomSign::Neg;
    if (s == "zero") return DenomSign::Zero;
    throw MalformedLine("unknown denom_sign '" + s + "'", line_no);
}

std::string opt_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

void emit_rows(const std::vector<IterationRecord>& records, std::ostream& out) {
    out << kTraceHeader << '\n';
    for (const IterationRecord& r : records) {
        out << r.k << ',' << format_double(r.f_value) << ',' << format_double(r.grad_norm) << ','
            << format_double(r.lambda_f) << ',' << format_double(r.g_norm) << ','
            << format_double(r.r_k) << ',' << format_double(r.a_k) << ',' << opt_field(r.nu) << ','
            << opt_field(r.theta) << ',' << opt_field(r.sigma) << ',' << opt_field(r.v_potential)
            << ',' << (r.skipped ? "true" : "false") << ',' << denom_sign_name(r.denom_sign)
            << '\n';
    }
    if (!out) throw SinkFailure("trace write failed");
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["method"] = m.method;
    j["config"] = m.config;
    j["n"] = m.n;
    j["kappa"] = m.kappa;
    j["mu"] = m.mu;
    j["lip"] = m.lip;
    j["m_const"] = m.m_const;
    j["gamma"] = m.gamma;
    j["seed"] = m.seed;
    return j.dump();
}

void write_trace_csv(const SolveResult& result, const RunManifest& manifest, std::ostream& out) {
    out << "# " << manifest_json(manifest) << '\n';
    emit_rows(result.records, out);
}

void write_trace_csv(const TraceFile& trace, std::ostream& out) {
    out << trace.manifest_line << '\n';
    emit_rows(trace.records, out);
}

TraceFile read_trace_csv(std::istream& in) {
    TraceFile tf;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            tf.manifest_line = line;
            continue;
        }
        if (!header_seen) {
            if (line != kTraceHeader) throw MalformedLine("unexpected trace header", line_no);
            header_seen = true;
            continue;
        }
        const std::vector<std::string> f = split_csv(line);
        if (f.size() != 13) throw MalformedLine("expected 13 fields", line_no);
        IterationRecord r;
        try {
            r.k = std::stoi(f[0]);
            r.f_value = std::stod(f[1]);
            r.grad_norm = std::stod(f[2]);
            r.lambda_f = std::stod(f[3]);
            r.g_norm = std::stod(f[4]);
            r.r_k = std::stod(f[5]);
            r.a_k = std::stod(f[6]);
            if (!f[7].empty()) r.nu = std::stod(f[7]);
            if (!f[8].empty()) r.theta = std::stod(f[8]);
            if (!f[9].empty()) r.sigma = std::stod(f[9]);
            if (!f[10].empty()) r.v_potential = std::stod(f[10]);
        } catch (const std::exception&) {
            throw MalformedLine("unreadable numeric field", line_no);
        }
        if (f[11] == "true")
            r.skipped = true;
        else if (f[11] == "false")
            r.skipped = false;
        else
            throw MalformedLine("skipped must be true/false", line_no);
        r.denom_sign = parse_denom_sign(f[12], line_no);
        tf.records.push_back(r);
    }
    return tf;
}

void write_envelopes_csv(const std::vector<RateEnvelope>& envelopes, std::ostream& out) {
    int k_lo = 0;
    int k_hi = -1;
    bool any = false;
    for (const RateEnvelope& env : envelopes) {
        for (std::size_t i = 1; i < env.values.size(); ++i)
            if (env.values[i].first != env.values[i - 1].first + 1)
                throw GridMismatch("envelope k values must be consecutive");
        if (env.values.empty()) continue;
        if (!any) {
            k_lo = env.values.front().first;
            k_hi = env.values.back().first;
            any = true;
        } else {
            k_lo = std::min(k_lo, env.values.front().first);
            k_hi = std::max(k_hi, env.values.back().first);
        }
    }

    out << 'k';
    for (const RateEnvelope& env : envelopes) out << ',' << envelope_kind_name(env.kind);
    out << '\n';
    for (int k = k_lo; k <= k_hi; ++k) {
        out << k;
        for (const RateEnvelope& env : envelopes) {
            out << ',';
            if (!env.values.empty() && k >= env.values.front().first &&
                k <= env.values.back().first)
                out << format_double(env.values[k - env.values.front().first].second);
        }
        out << '\n';
    }
    if (!out) throw SinkFailure("envelope write failed");
}

std::string verify_summary_json(const std::vector<SuiteResult>& suites) {
    nlohmann::ordered_json root = nlohmann::ordered_json::array();
    for (const SuiteResult& s : suites) {
        nlohmann::ordered_json j;
        j["suite"] = s.suite;
        j["cases"] = s.cases;
        j["passes"] = s.passes;
        nlohmann::ordered_json fails = nlohmann::ordered_json::array();
        for (const CaseFailure& f : s.failures) {
            fails.push_back({{"case", f.case_id}, {"violation", f.violation}});
        }
        j["failures"] = fails;
        if (!s.notes.empty()) j["notes"] = s.notes;
        root.push_back(j);
    }
    return root.dump(2);
}

}  // namespace sr1lab
