#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace magspec {

enum class Errc {
  NonPositiveWeight,
  DuplicateEdge,
  DuplicateVertex,
  SelfLoop,
  Disconnected,
  EmptyGraph,
  UnknownVertex,
  GeneratorFailure,
  InvalidTree,
  NotAnEdge,
  MissingTarget,
  NoConvergence,
  NotASolution,
  DisconnectedSubgraph,
  InvalidArgument,
  ParseError,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above; the
// message names the offending vertex, edge or argument.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace magspec
