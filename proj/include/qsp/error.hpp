#pragma once

#include <stdexcept>
#include <string>

namespace qsp {

// Failure categories surfaced by the library. The CLI maps `usage` to exit
// code 2 and everything else to exit code 1.
enum class Errc {
    layout,
    unitarity,
    normalization,
    impossible_outcome,
    partition,
    degenerate_preparation,
    degenerate_problem,
    capacity,
    size,
    parse,
    unsupported_depth,
    cancellation,
    separation,
    label_incoherence,
    rank,
    model_mismatch,
    non_termination,
    usage,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::layout: return "layout";
    case Errc::unitarity: return "unitarity";
    case Errc::normalization: return "normalization";
    case Errc::impossible_outcome: return "impossible-outcome";
    case Errc::partition: return "partition";
    case Errc::degenerate_preparation: return "degenerate-preparation";
    case Errc::degenerate_problem: return "degenerate-problem";
    case Errc::capacity: return "capacity";
    case Errc::size: return "size";
    case Errc::parse: return "parse";
    case Errc::unsupported_depth: return "unsupported-depth";
    case Errc::cancellation: return "cancellation";
    case Errc::separation: return "separation";
    case Errc::label_incoherence: return "label-incoherence";
    case Errc::rank: return "rank";
    case Errc::model_mismatch: return "model-mismatch";
    case Errc::non_termination: return "non-termination";
    case Errc::usage: return "usage";
    }
    return "error";
}

} // namespace qsp
