#pragma once

// Canonical text syntax for linear systems.
//
//   system   := "L(" "r=" INT "," "d=" INT [ ";" [ item { "," item } ] ] ")"
//   item     := points | group
//   points   := INT [ "^" INT ]                 multiplicity ^ count (count 1 if omitted)
//   group    := "{" [ INT ] ID ":" "codim" INT { "," points "on" ID } "}"
//
// A leading INT on a group is the multiplicity along the subspace ("2L" style);
// it defaults to 1, meaning the members contain the subspace. Points inside a
// group must name the group's own ID. Whitespace between tokens is ignored.
//
// Canonical output puts groups first (in declaration order) and then general
// points by descending multiplicity, e.g.
//
//   L(r=3,d=5; 2^14)
//   L(r=7,d=3; {L1:codim3, 2^5 on L1}, 2^10)
//   L(r=7,d=3; {2L1:codim4}, 2^10)
//   L(r=3,d=4; 3, 2^5)
//   L(r=3,d=5)
//
// format(parse(s)) == s for every canonical s, and parse(format(x)) == x.

#include "ahc/linear_system.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ahc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

LinearSystem parse_system(std::string_view text);
std::string format_system(const LinearSystem& system);

}  // namespace ahc
