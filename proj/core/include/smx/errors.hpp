#pragma once

#include <stdexcept>
#include <string>

namespace smx {

// Base class for every error thrown by the library. Catching smx::Error is
// always sufficient; the concrete types below exist so callers can branch on
// the failure mode (the CLI maps singularity errors to exit code 3).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- special-function kernel -------------------------------------------------

class PoleAtNonPositiveInteger : public Error {
public:
  using Error::Error;
};

class SeriesNotConverged : public Error {
public:
  using Error::Error;
};

class DomainTooSmall : public Error {
public:
  using Error::Error;
};

class OverflowGuard : public Error {
public:
  using Error::Error;
};

// --- scattering objects ------------------------------------------------------

// Base for "you asked for a value exactly on a singular lattice point" errors;
// the CLI reports these with exit code 3.
class SingularEvaluation : public Error {
public:
  using Error::Error;
};

class EvaluationAtOrigin : public SingularEvaluation {
public:
  using SingularEvaluation::SingularEvaluation;
};

class PoleProximity : public SingularEvaluation {
public:
  using SingularEvaluation::SingularEvaluation;
};

class SingularAtRedundantZeroPoint : public SingularEvaluation {
public:
  using SingularEvaluation::SingularEvaluation;
};

class SingularAtRedundantPole : public SingularEvaluation {
public:
  using SingularEvaluation::SingularEvaluation;
};

class UnwrapAmbiguity : public Error {
public:
  using Error::Error;
};

// --- spectrum ----------------------------------------------------------------

class NotABoundState : public Error {
public:
  using Error::Error;
};

class DegenerateZero : public Error {
public:
  using Error::Error;
};

class CoincidentPhysicalPole : public Error {
public:
  using Error::Error;
};

// --- oracle ------------------------------------------------------------------

class GridTooCoarse : public Error {
public:
  using Error::Error;
};

class MaxDepthExceeded : public Error {
public:
  using Error::Error;
};

class PoleOnContour : public Error {
public:
  using Error::Error;
};

class ProbeFailure : public Error {
public:
  using Error::Error;
};

}  // namespace smx
