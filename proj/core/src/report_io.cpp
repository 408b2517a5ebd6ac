#include "uflab/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include <json.hpp>

#include "uflab/error.hpp"

namespace uflab {
namespace {

using Json = nlohmann::ordered_json;

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json optional_number(const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); }

Json pairs(const std::vector<std::pair<std::string, double>>& items) {
    Json out = Json::object();
    for (const auto& [k, v] : items) {
        out[k] = number(v);
    }
    return out;
}

Json norm(const NormEstimate& n) {
    return Json{{"value", number(n.value)},
                {"method", to_string(n.method)},
                {"abs_error_estimate", number(n.abs_error_estimate)},
                {"q", number(n.q)}};
}

Json report_header(std::string_view kind) { return Json{{"schema", kSchemaVersion}, {"kind", kind}}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json row_json(const SweepRow& r) {
    return Json{{"family", to_string(r.family)},
                {"param", number(r.param)},
                {"q", number(r.q)},
                {"p", number(r.p)},
                {"norm_f_q", number(r.norm_f_q)},
                {"norm_fhat_q", number(r.norm_fhat_q)},
                {"norm_f_p", number(r.norm_f_p)},
                {"norm_fhat_p", number(r.norm_fhat_p)},
                {"value", number(r.value)},
                {"method", to_string(r.method)},
                {"err_est", number(r.err_est)}};
}

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

double parse_field(std::string_view s, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("sweep csv line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::string to_json(const FunctionalReport& r) {
    Json j = report_header("functional");
    j["q"] = number(r.q);
    j["p"] = number(r.p);
    j["norm_f_q"] = norm(r.norm_f_q);
    j["norm_fhat_q"] = norm(r.norm_fhat_q);
    j["norm_f_p"] = norm(r.norm_f_p);
    j["norm_fhat_p"] = norm(r.norm_fhat_p);
    j["value"] = number(r.value);
    j["method"] = to_string(r.method);
    j["discrepancy"] = optional_number(r.discrepancy);
    j["quadrature_value"] = optional_number(r.quadrature_value);
    return dump(j);
}

std::string to_json(const BoundReport& r) {
    Json j = report_header("bound");
    j["c"] = number(r.c);
    j["q"] = number(r.q);
    j["p"] = optional_number(r.p);
    j["bound_value"] = number(r.bound_value);
    j["bound_kind"] = to_string(r.kind);
    j["case_tag"] = r.case_tag;
    return dump(j);
}

std::string to_json(const SweepResult& result) {
    Json j = report_header("sweep");
    Json rows = Json::array();
    for (const auto& r : result.rows) {
        rows.push_back(row_json(r));
    }
    j["rows"] = std::move(rows);
    return dump(j);
}

std::string to_json(const IntervalReport& r) {
    Json j = report_header("interval");
    j["q"] = number(r.q);
    j["p"] = optional_number(r.p);
    j["observed_min"] = number(r.observed_min);
    j["observed_max"] = number(r.observed_max);
    j["divergence_flag"] = r.divergence_flag;
    j["vanishing_flag"] = r.vanishing_flag;
    j["proved_lower_bound"] = optional_number(r.proved_lower_bound);
    j["evaluations"] = r.evaluations;
    return dump(j);
}

std::string to_json(const MinimizeReport& r) {
    Json j = report_header("minimize");
    j["q"] = number(r.q);
    j["family"] = Json{{"terms", r.family.terms}, {"chirp", r.family.chirp}};
    j["best_value"] = number(r.best_value);
    Json params = Json::array();
    for (double v : r.best_parameters) {
        params.push_back(number(v));
    }
    j["best_parameters"] = std::move(params);
    j["best_restart"] = r.best_restart;
    j["iterations"] = r.iterations;
    j["evaluations"] = r.evaluations;
    j["restarts"] = r.restarts;
    j["converged"] = r.converged;
    j["comparison"] = Json{{"one", number(r.comparison_one)},
                           {"inverse_beckner", optional_number(r.comparison_inverse_beckner)},
                           {"gaussian", number(r.comparison_gaussian)}};
    return dump(j);
}

std::string to_json(const FtCheckReport& r) {
    Json j = report_header("ftcheck");
    j["family"] = r.family;
    j["param"] = number(r.param);
    j["n"] = r.n;
    j["dx"] = number(r.dx);
    j["max_abs_error"] = number(r.max_abs_error);
    return dump(j);
}

std::string verify_report_json(std::string_view suite, const SuiteConfig& config,
                               std::span<const CheckResult> results) {
    Json j = report_header("verify");
    j["suite"] = suite;
    j["seed"] = config.seed;
    j["samples_override"] = config.samples ? Json(*config.samples) : Json(nullptr);
    j["quad_tol"] = number(config.options.quad_tol);
    j["passed"] = all_passed(results);
    Json checks = Json::array();
    for (const auto& r : results) {
        checks.push_back(Json{{"check_name", r.check_name},
                              {"parameters", pairs(r.parameters)},
                              {"samples", r.samples},
                              {"worst_slack", number(r.worst_slack)},
                              {"tolerance", number(r.tolerance)},
                              {"pass", r.pass},
                              {"seed", r.seed},
                              {"metrics", pairs(r.metrics)}});
    }
    j["checks"] = std::move(checks);
    return dump(j);
}

std::string to_csv(const SweepResult& result) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    for (const auto& r : result.rows) {
        out += kSchemaVersion;
        out += ',';
        out += to_string(r.family);
        for (double v : {r.param, r.q, r.p, r.norm_f_q, r.norm_fhat_q, r.norm_f_p, r.norm_fhat_p, r.value}) {
            out += ',';
            append_number(out, v);
        }
        out += ',';
        out += to_string(r.method);
        out += ',';
        append_number(out, r.err_est);
        out += '\n';
    }
    return out;
}

SweepResult parse_sweep_csv(std::string_view text) {
    SweepResult result;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kSweepCsvHeader) {
                throw DomainError("sweep csv: unexpected header");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string_view> f;
        std::size_t pos = 0;
        while (true) {
            const auto comma = line.find(',', pos);
            f.push_back(line.substr(pos, comma - pos));
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
        if (f.size() != 12) {
            throw DomainError("sweep csv line " + std::to_string(line_no) + ": expected 12 fields");
        }
        if (f[0] != kSchemaVersion) {
            throw DomainError("sweep csv line " + std::to_string(line_no) + ": unknown schema '" +
                              std::string(f[0]) + "'");
        }
        SweepRow r;
        r.family = parse_family(f[1]);
        r.param = parse_field(f[2], line_no);
        r.q = parse_field(f[3], line_no);
        r.p = parse_field(f[4], line_no);
        r.norm_f_q = parse_field(f[5], line_no);
        r.norm_fhat_q = parse_field(f[6], line_no);
        r.norm_f_p = parse_field(f[7], line_no);
        r.norm_fhat_p = parse_field(f[8], line_no);
        r.value = parse_field(f[9], line_no);
        r.method = parse_eval_method(f[10]);
        r.err_est = parse_field(f[11], line_no);
        result.rows.push_back(r);
    }
    if (!header_seen) {
        throw DomainError("sweep csv: missing header");
    }
    return result;
}

}  // namespace uflab
