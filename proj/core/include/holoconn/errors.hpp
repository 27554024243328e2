#pragma once

#include <stdexcept>
#include <string>

namespace holoconn {

// Base class of every error thrown by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction of an expression whose denominator is the zero polynomial.
struct DivisionByZero : Error {
  using Error::Error;
};

// A substitution made a denominator vanish identically.
struct PoleCreated : Error {
  using Error::Error;
};

// A denominator vanishes at the requested base point.
struct PoleAtBase : Error {
  using Error::Error;
};

// Two connections/tensors live on charts with different variable names.
struct ChartMismatch : Error {
  using Error::Error;
};

// An operation that presumes a torsion-free connection received one with torsion.
struct NotTorsionFree : Error {
  using Error::Error;
};

// trace decomposition requires a tensor symmetric in its lower slots.
struct NotSymmetric : Error {
  using Error::Error;
};

// A Moebius group element with determinant != 1.
struct NotUnimodular : Error {
  using Error::Error;
};

// An integer matrix without the required eigenvalue pattern
// (one real eigenvalue > 1 plus a non-real conjugate pair, determinant 1).
struct BadSpectrum : Error {
  using Error::Error;
};

// Elliptic family data must depend on the second chart variable only.
struct DependsOnFirstVariable : Error {
  using Error::Error;
};

// Lexical/grammatical error in an expression or input file, with position.
struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

// An identifier that is neither `i` nor a declared chart variable.
struct UnknownVariable : SyntaxError {
  using SyntaxError::SyntaxError;
};

// Wrong, missing or non-constant parameters for a family constructor or request.
struct ArityError : Error {
  using Error::Error;
};

// A module error re-thrown by the report runner with the analysis name attached.
struct AnalysisError : Error {
  std::string analysis;
  AnalysisError(const std::string& analysis_, const std::string& msg)
      : Error(analysis_ + ": " + msg), analysis(analysis_) {}
};

}  // namespace holoconn
