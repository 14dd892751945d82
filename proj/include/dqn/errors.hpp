#ifndef DQN_ERRORS_HPP
#define DQN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dqn {

struct inversion_of_zero : std::domain_error {
    inversion_of_zero() : std::domain_error("inversion of zero scalar") {}
};

struct zero_polynomial : std::domain_error {
    zero_polynomial() : std::domain_error("leading term of the zero polynomial") {}
};

struct zero_element : std::domain_error {
    zero_element() : std::domain_error("leading monomial of the zero element") {}
};

struct bad_dimension : std::invalid_argument {
    explicit bad_dimension(int n)
        : std::invalid_argument("matrix size must be at least 2, got " + std::to_string(n)) {}
};

struct zero_q : std::invalid_argument {
    zero_q() : std::invalid_argument("the quantum parameter q must be nonzero") {}
};

struct not_normal_form : std::invalid_argument {
    explicit not_normal_form(const std::string& what)
        : std::invalid_argument("word is not in normal form: " + what) {}
};

struct order_not_solvable : std::runtime_error {
    explicit order_not_solvable(const std::string& what)
        : std::runtime_error("ordering fails the solvability check: " + what) {}
};

struct order_not_degree_compatible : std::invalid_argument {
    order_not_degree_compatible()
        : std::invalid_argument("operation requires a degree-compatible ordering") {}
};

struct index_out_of_range : std::out_of_range {
    index_out_of_range(int i, int j, int n)
        : std::out_of_range("generator index d[" + std::to_string(i) + "," + std::to_string(j) +
                            "] out of range for n=" + std::to_string(n)) {}
};

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(std::size_t pos, const std::string& expected)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": expected " +
                             expected),
          position(pos) {}
};

}  // namespace dqn

#endif
