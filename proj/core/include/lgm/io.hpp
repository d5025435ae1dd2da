#pragma once

// JSON input/output.
//
//   sequence:        {"re": [...], "im": [...]}
//   step function:   {"breakpoints": [...], "re": [...], "im": [...]}
//   headed function: {"head": {"c": c, "gamma": g}, "breakpoints": [x0, x1, ...],
//                     "re": [...], "im": [...]}
//
// For a headed function the first breakpoint is the end of the head and
// re/im hold the values of the steps that follow it (one fewer entry).
// "im" may be omitted for real data.

#include <stdexcept>
#include <string>
#include <string_view>

#include "lgm/gm.hpp"
#include "lgm/interpolate.hpp"
#include "lgm/report.hpp"
#include "lgm/types.hpp"

namespace lgm {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ComplexSeq parse_sequence(std::string_view json);
HeadedStepFunction parse_function(std::string_view json);

// Read and parse a file; I/O failures are reported as InputError.
std::string read_text_file(const std::string& path);
ComplexSeq load_sequence(const std::string& path);
HeadedStepFunction load_function(const std::string& path);

std::string to_json(const ComplexSeq& a);
std::string to_json(const HeadedStepFunction& f);
std::string to_json(const GMReport& r);
std::string to_json(const Decomposition& d);
std::string to_json(const VerificationReport& r);

}  // namespace lgm
