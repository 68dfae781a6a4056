#pragma once

#include <stdexcept>
#include <string>

namespace weylzeta {

// Bad input (unknown group, malformed flags, out-of-range arguments).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A request that is well-formed but outside what the engine can compute
// (dimension too high, divergent series, cap exceeded, ...).
struct computation_error : std::runtime_error {
    explicit computation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct unsupported_type_error : input_error {
    explicit unsupported_type_error(const std::string& msg) : input_error(msg) {}
};
struct unknown_group_error : input_error {
    explicit unknown_group_error(const std::string& msg) : input_error(msg) {}
};
struct unsupported_residue_error : input_error {
    explicit unsupported_residue_error(const std::string& msg) : input_error(msg) {}
};
struct odd_component_error : input_error {
    explicit odd_component_error(const std::string& msg) : input_error(msg) {}
};
struct length_class_error : input_error {
    explicit length_class_error(const std::string& msg) : input_error(msg) {}
};

struct dimension_error : computation_error {
    explicit dimension_error(const std::string& msg) : computation_error(msg) {}
};
struct variable_mismatch_error : computation_error {
    explicit variable_mismatch_error(const std::string& msg) : computation_error(msg) {}
};
struct non_integral_pairing_error : computation_error {
    explicit non_integral_pairing_error(const std::string& msg) : computation_error(msg) {}
};
struct divergent_error : computation_error {
    explicit divergent_error(const std::string& msg) : computation_error(msg) {}
};
struct not_provably_convergent_error : computation_error {
    explicit not_provably_convergent_error(const std::string& msg) : computation_error(msg) {}
};
struct slow_convergence_error : computation_error {
    explicit slow_convergence_error(const std::string& msg) : computation_error(msg) {}
};
struct undetermined_error : computation_error {
    explicit undetermined_error(const std::string& msg) : computation_error(msg) {}
};

} // namespace weylzeta
