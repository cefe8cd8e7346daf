#pragma once

#include <stdexcept>
#include <string>

namespace curvechain {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct BadParameter : Error {
  explicit BadParameter(const std::string& what) : Error(what) {}
};

struct InvalidPartition : Error {
  explicit InvalidPartition(const std::string& what) : Error(what) {}
};

struct NotCuttable : Error {
  explicit NotCuttable(const std::string& what) : Error(what) {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& what) : Error(what) {}
};

struct MalformedSystem : Error {
  explicit MalformedSystem(const std::string& what) : Error(what) {}
};

struct IncompatibleTriangulation : Error {
  explicit IncompatibleTriangulation(const std::string& what) : Error(what) {}
};

struct NotDisjoint : Error {
  explicit NotDisjoint(const std::string& what) : Error(what) {}
};

struct NoRoute : Error {
  explicit NoRoute(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace curvechain
