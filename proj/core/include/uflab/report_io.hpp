#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "uflab/explorer.hpp"
#include "uflab/functionals.hpp"
#include "uflab/optimizer.hpp"
#include "uflab/verifier.hpp"

namespace uflab {

/// Written into every JSON report and every CSV row.
inline constexpr std::string_view kSchemaVersion = "uflab/1";

/// Numeric Fourier check of one family member: max |dft_approx - f^| on the grid.
struct FtCheckReport {
    std::string family;
    double param = 0.0;
    std::size_t n = 0;
    double dx = 0.0;
    double max_abs_error = 0.0;
};

// JSON, pretty-printed with fields in declaration order. Doubles are written
// in shortest round-trip form; non-finite values become null.
std::string to_json(const FunctionalReport& report);
std::string to_json(const BoundReport& report);
std::string to_json(const SweepResult& result);
std::string to_json(const IntervalReport& report);
std::string to_json(const MinimizeReport& report);
std::string to_json(const FtCheckReport& report);
std::string verify_report_json(std::string_view suite, const SuiteConfig& config,
                               std::span<const CheckResult> results);

/// Sweep CSV with the header below, numbers as %.17g so parsing is exact.
inline constexpr std::string_view kSweepCsvHeader =
    "schema,family,param,q,p,norm_f_q,norm_fhat_q,norm_f_p,norm_fhat_p,value,method,err_est";

std::string to_csv(const SweepResult& result);
SweepResult parse_sweep_csv(std::string_view text);

}  // namespace uflab
