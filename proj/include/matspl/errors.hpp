#pragma once

#include <stdexcept>
#include <string>

#include "matspl/bits.hpp"

namespace matspl {

// Base class for all domain errors; the CLI maps these to exit code 1.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class AxiomViolation : public Error {
  public:
    enum class Kind { normalization, unit_increase, submodularity };

    AxiomViolation(Kind kind, Mask x, Mask y, const std::string& detail)
        : Error("rank axiom violated: " + detail), kind_(kind), x_(x), y_(y) {}

    Kind kind() const { return kind_; }
    Mask witness_x() const { return x_; }
    Mask witness_y() const { return y_; }

  private:
    Kind kind_;
    Mask x_;
    Mask y_;
};

class EmptyFamily : public Error {
  public:
    EmptyFamily() : Error("family of subsets is empty") {}
};

class CyclicFlatMismatch : public Error {
  public:
    CyclicFlatMismatch(Mask witness, const std::string& detail)
        : Error("cyclic-flat system mismatch: " + detail), witness_(witness) {}
    Mask witness() const { return witness_; }

  private:
    Mask witness_;
};

class LabelCollision : public Error {
  public:
    explicit LabelCollision(const std::string& label)
        : Error("label occurs in both ground sets: " + label) {}
};

class GroundMismatch : public Error {
  public:
    GroundMismatch() : Error("operands live on different ground sets") {}
};

class NotAQuotient : public Error {
  public:
    NotAQuotient() : Error("second matroid is not a quotient of the first") {}
};

class NotMatched : public Error {
  public:
    explicit NotMatched(const std::string& detail = "")
        : Error("matroids are not matched" + (detail.empty() ? "" : ": " + detail)) {}
};

class CapExceeded : public Error {
  public:
    explicit CapExceeded(const std::string& detail) : Error("cap exceeded: " + detail) {}
};

class CoverageGap : public Error {
  public:
    CoverageGap() : Error("the two sets do not cover the ground set") {}
};

class GpcPreconditionFailed : public Error {
  public:
    GpcPreconditionFailed(const std::string& which, const std::string& witness)
        : Error("generalized parallel connection precondition failed (" + which + "): " + witness) {}
};

class NotRepresentable : public Error {
  public:
    explicit NotRepresentable(const std::string& detail) : Error("not representable: " + detail) {}
};

class SizeCapExceeded : public Error {
  public:
    explicit SizeCapExceeded(const std::string& detail) : Error("size cap exceeded: " + detail) {}
};

}  // namespace matspl
