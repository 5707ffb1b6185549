#ifndef APOLAR_ERRORS_HPP
#define APOLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apolar {

// Malformed or out-of-domain user input.  The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical invariant that the library guarantees failed to hold.
// Always a bug or an impossible input state; the CLI maps this to exit code 3.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw invariant_error(what);
}

}  // namespace apolar

#endif  // APOLAR_ERRORS_HPP
