#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

// malformed or contract-violating input (dimension mismatch, duplicate
// points, bad document); the CLI maps this to exit code 1
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// a predicate precondition failed (e.g. reducing a non-hollow polytope);
// carries a printable witness and maps to exit code 2
struct precondition_error : std::runtime_error {
    std::string witness;
    explicit precondition_error(const std::string& what, std::string witness = "")
        : std::runtime_error(what), witness(std::move(witness)) {}
};

// a run produced an example contradicting a proven bound; this is the
// strongest available bug detector, so the whole run aborts and dumps the
// offending artifact
struct theorem_violation : std::runtime_error {
    std::string artifact;
    explicit theorem_violation(const std::string& what, std::string artifact = "")
        : std::runtime_error(what), artifact(std::move(artifact)) {}
};

} // namespace latpoly
