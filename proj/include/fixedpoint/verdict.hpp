#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

namespace fixedpoint {

enum class Status { Pass, Fail, NotApplicable };

constexpr std::string_view to_string(Status s) {
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::NotApplicable:
        return "n/a";
    }
    return "?";
}

/// Result of one check. Failing checks always carry a JSON witness that
/// pins down the failure (index, weight, total, modulus, ...); passing
/// checks may carry one as well.
struct Verdict {
    Status status = Status::Pass;
    nlohmann::ordered_json witness;

    bool failed() const { return status == Status::Fail; }

    static Verdict pass(nlohmann::ordered_json witness = nullptr) {
        return {Status::Pass, std::move(witness)};
    }
    static Verdict fail(nlohmann::ordered_json witness) { return {Status::Fail, std::move(witness)}; }
    static Verdict not_applicable() { return {Status::NotApplicable, nullptr}; }
};

} // namespace fixedpoint
