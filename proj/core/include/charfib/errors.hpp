#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charfib {

// Root of the library's exception taxonomy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad parameters or unusable inputs.  The CLI maps these to exit code 1.
struct ParamError : Error {
  using Error::Error;
};

// Results that contradict the algebra's guaranteed structure.  Raised when a
// computation detects that its input cannot be a character partition, or when
// an exact solve is impossible.  The CLI maps these to exit code 3.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct NotPrimeError : ParamError {
  explicit NotPrimeError(std::int64_t p)
      : ParamError("p = " + std::to_string(p) + " is not prime") {}
};

struct NotPrimitiveError : ParamError {
  explicit NotPrimitiveError(const std::string& what) : ParamError(what) {}
};

struct BinaryDegreeOneError : ParamError {
  BinaryDegreeOneError()
      : ParamError("p = 2, m = 1 is excluded: F_2 has a trivial unit group") {}
};

struct FieldTooLargeError : ParamError {
  FieldTooLargeError(std::int64_t p, int m, std::int64_t cap)
      : ParamError("field size " + std::to_string(p) + "^" + std::to_string(m) +
                    " exceeds the cap " + std::to_string(cap)) {}
};

struct OrderDoesNotDivideError : ParamError {
  OrderDoesNotDivideError(std::int64_t n, std::int64_t group_order)
      : ParamError("character order " + std::to_string(n) +
                    " does not divide the group order " +
                    std::to_string(group_order)) {}
};

struct TrivialOrderError : ParamError {
  explicit TrivialOrderError(std::int64_t n)
      : ParamError("character order must be at least 2, got " +
                    std::to_string(n)) {}
};

struct MixedRingsError : ParamError {
  MixedRingsError() : ParamError("operands live in different residue rings") {}
};

struct ArityMismatchError : ParamError {
  ArityMismatchError(int expected, int got)
      : ParamError("evaluation point has " + std::to_string(got) +
                    " coordinates, expected " + std::to_string(expected)) {}
};

struct MixedFieldsError : ParamError {
  MixedFieldsError()
      : ParamError("operands are cyclotomic numbers for different primes") {}
};

struct EvenPrimeError : ParamError {
  EvenPrimeError() : ParamError("p must be an odd prime") {}
};

struct NotOddCharacteristicError : ParamError {
  NotOddCharacteristicError()
      : ParamError("field characteristic must be odd") {}
};

// Linear system has rank below the number of unknowns.  Callers accumulate
// rows from further evaluation tuples before retrying.
struct RankDeficientError : InternalInconsistency {
  explicit RankDeficientError(int rank, int unknowns)
      : InternalInconsistency("system rank " + std::to_string(rank) +
                              " below " + std::to_string(unknowns) +
                              " unknowns") {}
};

struct InconsistentSystemError : InternalInconsistency {
  explicit InconsistentSystemError(const std::string& what)
      : InternalInconsistency(what) {}
};

// The coefficients of a product are not constant across a fiber's monomials:
// the input partition is not the fiber partition of any order-n character.
struct NonUniformFiberCoefficientsError : InternalInconsistency {
  explicit NonUniformFiberCoefficientsError(const std::string& what)
      : InternalInconsistency(what) {}
};

}  // namespace charfib
