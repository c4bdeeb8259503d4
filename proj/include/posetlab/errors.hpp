#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace posetlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relation closure found a directed cycle; `cycle` lists the offending elements in order.
struct CycleDetected : Error {
  std::vector<int> cycle;
  CycleDetected(const std::string& msg, std::vector<int> c)
      : Error(msg), cycle(std::move(c)) {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct CapacityExceeded : Error {
  using Error::Error;
};

struct NotJoinSemilattice : Error {
  using Error::Error;
};

struct NotALattice : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

struct InvalidArgs : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct PhiNotEmbedding : Error {
  using Error::Error;
};

struct PsiNotEmbedding : Error {
  using Error::Error;
};

struct FactorizationInvalid : Error {
  using Error::Error;
};

// An internal consistency check failed (a bug, never a caller error).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace posetlab
