#ifndef PALIN_ERRORS_HPP
#define PALIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palin {

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct order_too_large : domain_error {
    using domain_error::domain_error;
};

struct vertex_out_of_range : domain_error {
    using domain_error::domain_error;
};

struct not_a_tree : domain_error {
    using domain_error::domain_error;
};

struct not_a_forest : domain_error {
    using domain_error::domain_error;
};

struct not_bipartite_input : domain_error {
    using domain_error::domain_error;
};

struct zero_polynomial : domain_error {
    using domain_error::domain_error;
};

struct degree_mismatch : domain_error {
    using domain_error::domain_error;
};

struct missing_report : domain_error {
    using domain_error::domain_error;
};

struct seed_not_palindromic : domain_error {
    using domain_error::domain_error;
};

// A theorem-backed runtime assertion failed; this should never fire.
struct emission_failed_verification : domain_error {
    using domain_error::domain_error;
};

// graph6 codec errors carry the byte offset of the offending byte.
struct graph6_error : domain_error {
    graph6_error(const std::string& what, std::size_t offset)
        : domain_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

struct malformed_header : graph6_error {
    using graph6_error::graph6_error;
};

struct trailing_bits : graph6_error {
    using graph6_error::graph6_error;
};

struct non_canonical_padding : graph6_error {
    using graph6_error::graph6_error;
};

struct sparse6_rejected : graph6_error {
    sparse6_rejected(std::size_t offset)
        : graph6_error("sparse6 input rejected: only graph6 is accepted", offset) {}
};

} // namespace palin

#endif
