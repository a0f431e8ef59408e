#pragma once

#include <stdexcept>
#include <string>

namespace cusplab {

// Base for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct nonsquare_error : error { using error::error; };
struct rank_deficient_error : error { using error::error; };
struct pole_error : error { using error::error; };
struct bad_prime_error : error { using error::error; };
struct degenerate_error : error { using error::error; };
struct zero_scale_error : error { using error::error; };
struct not_positive_definite_error : error { using error::error; };
struct not_in_commutant_error : error { using error::error; };
struct not_in_g_error : error { using error::error; };
struct precondition_error : error { using error::error; };
struct not_decomposable_error : error { using error::error; };
struct zero_form_error : error { using error::error; };
struct not_in_domain_error : error { using error::error; };
struct zero_vector_error : error { using error::error; };
struct not_representable_error : error { using error::error; };
struct unknown_variable_error : error { using error::error; };
struct registry_mismatch_error : error { using error::error; };
struct not_linear_in_pair_error : error { using error::error; };
struct center_of_projection_error : error { using error::error; };
struct indeterminate_point_error : error { using error::error; };
struct degenerate_parameter_error : error { using error::error; };
struct not_sqh_error : error { using error::error; };
struct bad_parameter_error : error { using error::error; };
struct colliding_points_error : error { using error::error; };
struct io_error : error { using error::error; };

// Parse failure with the offending input position (0-based byte offset).
struct syntax_error : error {
    std::size_t position;
    syntax_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace cusplab
