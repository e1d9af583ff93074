#pragma once

#include <stdexcept>
#include <string>

namespace wordrep {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed arguments outside an operation's contract.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A CirculantSpec (or 5-regular shape) violates its invariants.
class SpecError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input that its theorem does not cover.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NoUniqueSolution : public Error {
 public:
  using Error::Error;
};

class NoInverse : public Error {
 public:
  using Error::Error;
};

// Neither a nor b is a unit modulo 2n.
class NotNormalizable : public Error {
 public:
  using Error::Error;
};

// A coloring does not map the graph homomorphically onto its color dag.
class HomomorphismError : public Error {
 public:
  using Error::Error;
};

class SchemeNotApplicable : public Error {
 public:
  using Error::Error;
};

// A constructed certificate failed its own machine check.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

// A morphism word failed to represent its graph. Always a bug.
class ConstructionBug : public Error {
 public:
  using Error::Error;
};

class NotFactorizable : public Error {
 public:
  using Error::Error;
};

// The 5-regular spec is disconnected; decompose before calling.
class Disconnected : public Error {
 public:
  using Error::Error;
};

}  // namespace wordrep
