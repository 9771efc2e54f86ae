#pragma once

#include <iosfwd>
#include <span>
#include <string_view>

#include "dglcl/montecarlo.hpp"

namespace dglcl {

inline constexpr std::string_view kCsvHeader =
    "experiment,n,N,alpha,M,alphabet,trials,errors,error_rate,ci_low,ci_high,map_error_rate,"
    "bound_thm1,bound_cor1,bound_thm2,bound_cor2,min_tv_nominal,min_tv_true";

// Header line followed by one line per row; absent optional values are left empty.
void write_csv(std::ostream& out, std::span<const ResultRow> rows);

// Experiment config document (JSON). Keys mirror ExperimentConfig; see README for the schema.
ExperimentConfig parse_experiment_config(std::istream& in);

}  // namespace dglcl
