#pragma once

// Self-check suites behind `tricomplex verify`. Each row compares an
// independently computed expectation with what the library produces.

#include <string>
#include <string_view>
#include <vector>

#include "tricomplex/io.hpp"

namespace tricomplex {

struct CheckRow {
    std::string check_name;
    std::string expected;
    std::string observed;
    std::string tolerance;
    bool pass = false;
};

/// algebra, roots, dynamics, sets, raster.
const std::vector<std::string_view>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown name.
std::vector<CheckRow> run_suite(std::string_view suite, unsigned threads = 0);

bool all_pass(const std::vector<CheckRow>& rows);
CsvWriter to_csv(const std::vector<CheckRow>& rows);

}  // namespace tricomplex
