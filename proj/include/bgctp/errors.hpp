#ifndef BGCTP_ERRORS_HPP
#define BGCTP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace bgctp {

enum class Errc {
    Disconnected,
    SelfLoop,
    DuplicateEdge,
    NegativeCost,
    CostOverflow,
    NotSpanningTree,
    Infeasible,
    InfeasibleDensity,
    BudgetExceeded,
    ParseError,
    InvalidArgument,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::Disconnected: return "Disconnected";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::NegativeCost: return "NegativeCost";
    case Errc::CostOverflow: return "CostOverflow";
    case Errc::NotSpanningTree: return "NotSpanningTree";
    case Errc::Infeasible: return "Infeasible";
    case Errc::InfeasibleDensity: return "InfeasibleDensity";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace bgctp

#endif // BGCTP_ERRORS_HPP
