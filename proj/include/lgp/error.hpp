#pragma once

#include <stdexcept>
#include <string>

namespace lgp {

enum class Errc {
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    edge_out_of_range,
    size_limit,
    budget_exceeded,
    parse_error,
    illegal_move,
    bad_parameter,
    not_connected,
    isolated_vertex_in_pattern,
    no_winning_move,
    invariant_violation,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace lgp
