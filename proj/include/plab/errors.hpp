#ifndef PLAB_ERRORS_HPP
#define PLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plab {

// Structured error codes; every throwing operation names one of these.
enum class Errc {
    missing_pair,
    duplicate_pair,
    self_pair,
    out_of_range,
    equal_branches,
    length_mismatch,
    palette_too_large,
    cap_exceeded,
    bad_colors,
    already_present,
    validity_lost,
    no_room,
    bad_h,
    not_below,
    infeasible,
    bad_ladder,
    config_invalid,
};

const char* errc_name(Errc code);

struct Error : std::runtime_error {
    Errc code;

    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

} // namespace plab

#endif
