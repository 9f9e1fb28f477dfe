#pragma once

#include <string>
#include <vector>

namespace easygram {

struct VerifyItem {
    std::string id;       // criterion number
    std::string name;
    std::string suite;    // gram | weingarten | oracle | laws | cumulants | jones
    bool pass = false;
    std::string detail;   // first failure, or a short summary
    double seconds = 0;
};

// Runs the acceptance checks of the requested suite ("all" for every one).
// Items may evaluate concurrently up to the EASYGRAM_THREADS cap; the ledger
// keeps the declared order regardless.
std::vector<VerifyItem> run_verification(const std::string& suite);

bool all_passed(const std::vector<VerifyItem>& items);

} // namespace easygram
