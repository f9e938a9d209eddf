#pragma once
// Shared vocabulary: element indices, witnesses, structured errors.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicat {

// Group elements are indices into a Cayley table; index 0 is the identity.
using elem = int32_t;

// A counterexample, encoded as the tuple of indices that violates a law.
// Comparisons are lexicographic, so "least witness" is well defined.
using Witness = std::vector<int64_t>;

enum class ErrKind {
  NotClosed,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotHomomorphism,
  ActionInvalid,
  PreconditionFailed,
  NotComposable,
  DecompositionFailed,
  InvariantViolation,
  P1Fails,
  SearchBudgetExceeded,
  ParseError,
  UsageError,
};

const char* to_string(ErrKind k);

struct EngineError : std::runtime_error {
  ErrKind kind;
  Witness witness;

  EngineError(ErrKind k, const std::string& msg, Witness w = {})
      : std::runtime_error(std::string(to_string(k)) + ": " + msg),
        kind(k),
        witness(std::move(w)) {}
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg,
                              Witness w = {}) {
  throw EngineError(k, msg, std::move(w));
}

std::string witness_string(const Witness& w);

}  // namespace bicat
