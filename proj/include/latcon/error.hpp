#pragma once

#include <stdexcept>
#include <string>

namespace latcon {

enum class errc {
  not_a_poset,
  no_meet,
  no_join,
  mixed_lattices,
  not_in_lattice,
  not_distributive,
  not_meet_preserving,
  not_join_preserving,
  not_bounded,
  misaligned,
  theorem_violation,
  regression_failure,
  unknown_fixture,
  unknown_property,
  size_too_large,
  trivial_algebra,
  bad_input,
};

const char* errc_name(errc c);

/// All failures surface as this one type; `code` carries the violated
/// contract and `a`,`b` a witness pair where one exists.
struct error : std::runtime_error {
  errc code;
  int a = -1;
  int b = -1;

  error(errc c, std::string msg, int wa = -1, int wb = -1)
      : std::runtime_error(std::string(errc_name(c)) + ": " + std::move(msg)),
        code(c), a(wa), b(wb) {}
};

}  // namespace latcon
