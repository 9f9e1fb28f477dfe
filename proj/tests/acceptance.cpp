// Acceptance suite: runs every verification item and prints one line per
// criterion. The process exits nonzero if any item fails.

#include "easygram/verify.hpp"

#include <chrono>
#include <cstdio>

int main() {
    auto start = std::chrono::steady_clock::now();
    auto items = easygram::run_verification("all");
    bool ok = easygram::all_passed(items);
    for (const auto& item : items) {
        std::printf("[%s] criterion %-2s  %-62s (%.2fs) %s\n", item.pass ? "PASS" : "FAIL",
                    item.id.c_str(), item.name.c_str(), item.seconds,
                    item.pass ? "" : item.detail.c_str());
    }
    auto stop = std::chrono::steady_clock::now();
    std::printf("%s: %zu criteria in %.1fs\n", ok ? "ALL PASSED" : "FAILURES PRESENT",
                items.size(), std::chrono::duration<double>(stop - start).count());
    return ok ? 0 : 1;
}
