#pragma once
// Exception hierarchy for the clipvol library.
//
// The CLI maps these onto stable exit codes:
//   PreconditionError and subclasses  -> 2   (formula/identity preconditions,
//                                             good-clipping violations)
//   InvalidSpec and subclasses        -> 3   (parse errors, unknown identity,
//                                             structurally invalid input)
//   DimensionCapExceeded              -> 4
//   anything else derived from Error  -> 1

#include <stdexcept>
#include <string>
#include <vector>

namespace clipvol {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- arithmetic -----------------------------------------------------------

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error(what) {}
};

// epsilon_limit on a function with a pole at 0 after cancellation.
class PoleAtZero : public Error {
 public:
  explicit PoleAtZero(const std::string& what = "pole at epsilon = 0")
      : Error(what) {}
};

// ---- index algebra --------------------------------------------------------

class InvalidIndexSet : public Error {
 public:
  explicit InvalidIndexSet(const std::string& what) : Error(what) {}
};

class MismatchedSets : public Error {
 public:
  explicit MismatchedSets(const std::string& what) : Error(what) {}
};

// ---- linear algebra -------------------------------------------------------

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class SingularSystem : public Error {
 public:
  explicit SingularSystem(const std::string& what = "singular linear system")
      : Error(what) {}
};

// ---- preconditions (CLI exit code 2) ---------------------------------------

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Good-clipping conditions (A)/(B) fail for the given spec.
class GoodClippingViolated : public PreconditionError {
 public:
  explicit GoodClippingViolated(const std::string& what)
      : PreconditionError(what) {}
};

// Vertex enumeration hit a singular but consistent face system: the
// intersection with the chosen stratum is not an isolated point.
class NonGenericFace : public GoodClippingViolated {
 public:
  NonGenericFace(const std::string& what, std::vector<int> planes,
                 std::vector<int> vstar)
      : GoodClippingViolated(what),
        planes_(std::move(planes)),
        vstar_(std::move(vstar)) {}
  const std::vector<int>& planes() const { return planes_; }
  const std::vector<int>& vstar() const { return vstar_; }

 private:
  std::vector<int> planes_;
  std::vector<int> vstar_;
};

// A specialized formula's own precondition fails (e.g. one-plane formula
// with a zero coefficient).
class FormulaPreconditionViolated : public PreconditionError {
 public:
  explicit FormulaPreconditionViolated(const std::string& what)
      : PreconditionError(what) {}
};

class IdentityPreconditionViolated : public PreconditionError {
 public:
  explicit IdentityPreconditionViolated(const std::string& what)
      : PreconditionError(what) {}
};

// A non-degenerate vertex of the polytope has more than n tight facets.
class NotSimple : public PreconditionError {
 public:
  explicit NotSimple(const std::string& what) : PreconditionError(what) {}
};

// A denominator minor vanished: an edge at the vertex is parallel to the
// level sets of the auxiliary function.
class ParallelEdge : public PreconditionError {
 public:
  explicit ParallelEdge(const std::string& what) : PreconditionError(what) {}
};

// ---- input (CLI exit code 3) -----------------------------------------------

class InvalidSpec : public Error {
 public:
  explicit InvalidSpec(const std::string& what) : Error(what) {}
};

class ParseError : public InvalidSpec {
 public:
  explicit ParseError(const std::string& what) : InvalidSpec(what) {}
};

class UnknownIdentity : public InvalidSpec {
 public:
  explicit UnknownIdentity(const std::string& what) : InvalidSpec(what) {}
};

// ---- resource caps (CLI exit code 4) ----------------------------------------

class DimensionCapExceeded : public Error {
 public:
  explicit DimensionCapExceeded(const std::string& what) : Error(what) {}
};

// ---- geometry ----------------------------------------------------------------

class Unbounded : public Error {
 public:
  explicit Unbounded(const std::string& what = "polytope is unbounded")
      : Error(what) {}
};

}  // namespace clipvol
