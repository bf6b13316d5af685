#pragma once

#include <stdexcept>
#include <string>

namespace bts {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad or mathematically inadmissible input (exit class 1 in the CLI).
class DomainError : public Error {
public:
  using Error::Error;
};

// A certified decision could not be reached within the configured work
// bound (exit class 2 in the CLI). These are loud "don't know" outcomes,
// never silent guesses.
class CertificationError : public Error {
public:
  using Error::Error;
};

class ParseError : public DomainError {
public:
  using DomainError::DomainError;
};

// A floor/ceil decision straddled an integer at the refinement cap.
class UndecidableDigit : public CertificationError {
public:
  using CertificationError::CertificationError;
};

// Two enclosures could be neither separated nor proven identical.
class UndecidableComparison : public CertificationError {
public:
  using CertificationError::CertificationError;
};

class RefinementCapExceeded : public CertificationError {
public:
  using CertificationError::CertificationError;
};

// An admissibility or orbit question ran past the configured digit depth
// (only possible when alpha(beta) is a lazy stream or an orbit does not
// close up).
class InconclusiveAtDepth : public CertificationError {
public:
  using CertificationError::CertificationError;
};

// The tau rewriting step would increment a digit that is already 1.
class DigitOverflow : public DomainError {
public:
  using DomainError::DomainError;
};

// The theta rewriting step would decrement a digit that is already 0.
class DigitUnderflow : public DomainError {
public:
  using DomainError::DomainError;
};

// Input word is not the finite greedy expansion of any beta-rational.
class NotGreedyRational : public DomainError {
public:
  using DomainError::DomainError;
};

// Period cap too small to enumerate a zero-entropy subshift completely.
class CapTooSmall : public DomainError {
public:
  using DomainError::DomainError;
};

class IdenticalInputs : public DomainError {
public:
  using DomainError::DomainError;
};

}  // namespace bts
