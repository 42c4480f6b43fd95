#pragma once

#include <stdexcept>
#include <string>

namespace pmg {

enum class Errc {
  Parse,         // malformed input document
  Lookup,        // unknown vertex/edge/cut id
  Domain,        // argument outside its contract
  Degenerate,    // vertex hit, tangent crossing, degenerate sweep
  NoCut,         // no sweep offset produced a nonempty cut
  InvalidInput,  // structured input violating an operation precondition
  Io,            // file system failure
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace pmg
