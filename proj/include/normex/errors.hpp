#pragma once

#include <stdexcept>
#include <string>

namespace normex {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument universe would be infinite.
struct CyclicDependencies : Error {
  using Error::Error;
};

// D-frame preconditions violated (superiority closure or dependency graph cyclic).
struct CyclicSetup : Error {
  using Error::Error;
};

struct WorldCapExceeded : Error {
  using Error::Error;
};

// D-extension contains a literal and its complement; no consistent worlds exist.
struct InconsistentExtension : Error {
  using Error::Error;
};

struct UnknownWorld : Error {
  using Error::Error;
};

struct ForeignArgument : Error {
  using Error::Error;
};

struct NotASubset : Error {
  using Error::Error;
};

struct NotAnExplanation : Error {
  using Error::Error;
};

struct InconsistentFPlus : Error {
  using Error::Error;
};

struct InvalidTheory : Error {
  using Error::Error;
};

}  // namespace normex
