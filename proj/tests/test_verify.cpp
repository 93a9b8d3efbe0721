#include <doctest.h>

#include "tricomplex/verify.hpp"

using namespace tricomplex;

TEST_CASE("every suite passes") {
    for (std::string_view suite : suite_names()) {
        const auto rows = run_suite(suite, 2);
        CAPTURE(suite);
        CHECK_FALSE(rows.empty());
        for (const CheckRow& row : rows) {
            INFO(row.check_name << " expected " << row.expected << " observed " << row.observed);
            CHECK(row.pass);
        }
    }
}

TEST_CASE("suite names") {
    CHECK(suite_names().size() == 5);
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("CSV layout") {
    const CsvWriter csv = to_csv({{"x", "1", "1", "0", true}, {"y", "2", "3", "0.5", false}});
    CHECK(csv.str() == "check_name,expected,observed,tolerance,pass\nx,1,1,0,true\ny,2,3,0.5,false\n");
    CHECK_FALSE(all_pass({{"y", "2", "3", "0.5", false}}));
}
