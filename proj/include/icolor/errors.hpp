#pragma once

#include <stdexcept>
#include <string>

namespace icolor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a structural precondition (self-loop, dangling endpoint, ...).
struct GraphError : Error {
    using Error::Error;
};

// A coloring is unusable as such (missing/unknown edges), as opposed to a
// coloring that is merely not interval (those produce violation reports).
struct ColoringError : Error {
    using Error::Error;
};

struct GadgetError : Error {
    using Error::Error;
};

struct ScheduleError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace icolor
