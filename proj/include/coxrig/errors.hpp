#pragma once

#include <stdexcept>
#include <string>

namespace coxrig {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRank : Error {
  using Error::Error;
};

struct RankMismatch : Error {
  using Error::Error;
};

struct EqualIndices : Error {
  using Error::Error;
};

struct NotInvolution : Error {
  using Error::Error;
};

struct NotInverse : Error {
  using Error::Error;
};

struct PermutationNotBijective : Error {
  using Error::Error;
};

struct OrderExceedsBound : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct NotNormalizing : Error {
  using Error::Error;
};

struct OddLength : Error {
  using Error::Error;
};

struct IllegalCollapse : Error {
  using Error::Error;
};

struct OriginNotLabeled : Error {
  using Error::Error;
};

struct OriginIsLeaf : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace coxrig
