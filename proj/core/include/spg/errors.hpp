#pragma once

#include <stdexcept>
#include <string>

namespace spg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: non-square image, grid count that does not divide
/// the image side, malformed scale list, bad repetition count.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition (e.g. path endpoints in
/// different layers, empty training set, vector length mismatch).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The target vertex is unreachable. Grid graphs built by this library are
/// always connected, so this indicates a hand-assembled inconsistent graph.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// Corpus ingestion, decoding and cache I/O failures.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace spg
