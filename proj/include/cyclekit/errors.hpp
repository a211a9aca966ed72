#pragma once

#include <stdexcept>
#include <string>

namespace cyclekit {

enum class errc {
    self_loop,
    duplicate_edge,
    index_out_of_range,
    empty_graph,
    not_a_cycle,
    not_simple_loop,
    rank_deficient,
    disjoint_cycles,
    multi_path_pair,
    not_applicable,
    not_converged,
    too_large,
    insufficient_data,
    parse_error,
    invalid_argument,
};

/* Single exception type carrying a machine-checkable error code. */
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace cyclekit
