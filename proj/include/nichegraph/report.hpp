#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace niche {

enum class LawStatus { Pass, Fail, Skipped };

struct LawEntry {
    std::string law;
    LawStatus status = LawStatus::Pass;
    std::string detail;  // witness on failure, reason on skip
};

struct LawReport {
    std::vector<LawEntry> entries;

    bool all_passed() const {
        for (const auto& e : entries)
            if (e.status == LawStatus::Fail) return false;
        return true;
    }

    std::size_t failures() const {
        std::size_t c = 0;
        for (const auto& e : entries)
            if (e.status == LawStatus::Fail) ++c;
        return c;
    }

    // one `LAW <name> PASS|FAIL|SKIPPED [detail]` line per entry
    std::string to_text() const;
};

}  // namespace niche
