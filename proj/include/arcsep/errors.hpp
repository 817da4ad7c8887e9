#pragma once

#include <stdexcept>
#include <string>

namespace arcsep {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct bad_marks_error : error {
  using error::error;
};
struct inessential_error : error {
  using error::error;
};
struct not_embedded_error : error {
  using error::error;
};
struct not_a_path_error : error {
  using error::error;
};
struct kind_mismatch_error : error {
  using error::error;
};
struct same_endpoint_error : error {
  using error::error;
};
struct membership_error : error {
  using error::error;
};
struct internal_error : error {
  using error::error;
};

// Engine self-checks; these fire on contract violations inside the engine,
// never on bad user input.
#define ARCSEP_CHECK(cond, msg)                                           \
  do {                                                                    \
    if (!(cond)) throw ::arcsep::internal_error(std::string("internal: ") + (msg)); \
  } while (0)

}  // namespace arcsep
