#pragma once

#include <stdexcept>
#include <string>

namespace oat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct NotAGroup : Error {
  using Error::Error;
};

struct NoUnit : Error {
  using Error::Error;
};

struct NotASubalgebra : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

struct NotInTotalAlgebra : Error {
  using Error::Error;
};

struct NotSaturated : Error {
  using Error::Error;
};

struct NotSaturatedAt : NotSaturated {
  int element;
  NotSaturatedAt(int t, const std::string& msg) : NotSaturated(msg), element(t) {}
};

struct DegenerateForm : Error {
  using Error::Error;
};

struct MiddleAlgebraMismatch : Error {
  using Error::Error;
};

struct AssemblyFailure : Error {
  using Error::Error;
};

struct IncompatibleActions : Error {
  using Error::Error;
};

struct IllDefinedExtension : Error {
  using Error::Error;
};

struct IsomorphismFailure : Error {
  using Error::Error;
};

struct CovarianceViolation : Error {
  using Error::Error;
};

struct EmptyFiber : Error {
  using Error::Error;
};

struct NoAutomorphismFound : Error {
  using Error::Error;
};

struct WrongGroup : Error {
  using Error::Error;
};

struct IllDefinedInvolution : Error {
  using Error::Error;
};

struct NotAnInvolutiveIsomorphism : Error {
  using Error::Error;
};

struct ClosureFailure : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct UnresolvedReference : Error {
  using Error::Error;
};

struct UnknownDemo : Error {
  using Error::Error;
};

}  // namespace oat
