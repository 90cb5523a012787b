#pragma once

#include <string>
#include <vector>

namespace qentropy::verify {

struct Check {
    std::string name;
    bool passed;
    double observed;
    double expected;
    double tolerance;
};

struct Criterion {
    int id;  // 1..13
    std::string title;
    std::vector<Check> checks;
    bool passed;
};

// named suites: "ho" (1-5), "robin" (6), "q1d" (7-8), "wells" (9-10),
// "dualpath" (11), "expansions" (12), "thermo" (13), "all";
// throws std::invalid_argument for anything else
std::vector<Criterion> run_suite(const std::string& suite);

}  // namespace qentropy::verify
