#ifndef TILECOUNT_VERIFY_HPP
#define TILECOUNT_VERIFY_HPP

#include <string>
#include <vector>

#include "tilecount/lattice.hpp"

namespace tilecount {

// One grid point of a verification suite: the methods compared and their
// values, printed as decimal strings (or coefficient lists for polynomials).
struct VerifyInstance {
    std::string params;
    std::vector<std::string> methods;
    std::vector<std::string> values;
    bool equal = false;
    bool experimental = false;
    bool skipped = false;
    std::string note;
    double elapsed_ms = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::string grid;
    std::vector<VerifyInstance> instances;

    int pass_count() const;
    int fail_count() const;  // non-experimental inequalities
    int skip_count() const;
    int experimental_count() const;
    // Pass unless a non-experimental instance failed (strict mode also
    // gates on experimental ones).
    bool ok(bool strict) const;
    std::string to_json(bool with_timings = true) const;
};

struct VerifyOptions {
    int jobs = 1;
    MatchBudget budget;
    long xmax = 2, ymax = 2, zmax = 2, tmax = 1;  // flashlight-style grids
    bool strict = false;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace tilecount

#endif
