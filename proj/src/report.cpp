#include "nichegraph/report.hpp"

namespace niche {

std::string LawReport::to_text() const {
    std::string out;
    for (const auto& e : entries) {
        out += "LAW " + e.law + " ";
        switch (e.status) {
            case LawStatus::Pass: out += "PASS"; break;
            case LawStatus::Fail: out += "FAIL"; break;
            case LawStatus::Skipped: out += "SKIPPED"; break;
        }
        if (!e.detail.empty()) out += " " + e.detail;
        out += "\n";
    }
    return out;
}

}  // namespace niche
