#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bicomplex {

/// Result of testing a bicomplex scalar against the null cone.
///
/// Component k (1 or 2) is listed in `vanishing_components` when its
/// idempotent coordinate is zero under the tolerance used by `classify`.
struct SingularityReport {
  bool is_singular = false;
  std::vector<int> vanishing_components;
  double magnitude1 = 0.0;
  double magnitude2 = 0.0;
};

// Base class of every domain error raised by the library. The CLI maps these
// to exit status 1; `kind()` is the stable identifier used in its JSON output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(long expected, long actual)
      : Error("DimensionMismatch", "dimension mismatch: expected " + std::to_string(expected) +
                                       ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  long expected() const noexcept { return expected_; }
  long actual() const noexcept { return actual_; }

 private:
  long expected_;
  long actual_;
};

class NonFiniteValue : public Error {
 public:
  explicit NonFiniteValue(const std::string& where)
      : Error("NonFiniteValue", "non-finite coefficient in " + where) {}
};

class SingularElement : public Error {
 public:
  explicit SingularElement(SingularityReport report)
      : Error("SingularElement", "bicomplex scalar lies in the null cone and has no inverse"),
        report_(std::move(report)) {}
  const SingularityReport& report() const noexcept { return report_; }

 private:
  SingularityReport report_;
};

class NotSquare : public Error {
 public:
  NotSquare(long rows, long cols)
      : Error("NotSquare", "operator is " + std::to_string(rows) + "x" + std::to_string(cols) +
                               ", expected a square matrix") {}
};

/// Raised by solve/invert. `components` lists the rank-deficient (or too
/// badly conditioned) idempotent components; `conditions` holds the
/// condition number of each component (infinity when exactly singular).
class SingularOperator : public Error {
 public:
  SingularOperator(std::vector<int> components, double cond1, double cond2)
      : Error("SingularOperator", "operator is singular in idempotent component(s)"),
        components_(std::move(components)),
        cond1_(cond1),
        cond2_(cond2) {}
  const std::vector<int>& components() const noexcept { return components_; }
  double condition1() const noexcept { return cond1_; }
  double condition2() const noexcept { return cond2_; }

 private:
  std::vector<int> components_;
  double cond1_;
  double cond2_;
};

class EmptyCollection : public Error {
 public:
  EmptyCollection() : Error("EmptyCollection", "collection is empty") {}
};

class InconsistentFunctional : public Error {
 public:
  explicit InconsistentFunctional(double residual)
      : Error("InconsistentFunctional",
              "functional values disagree on dependent generators (residual " +
                  std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class ComponentInNullDistance : public Error {
 public:
  ComponentInNullDistance(double d1, double d2)
      : Error("ComponentInNullDistance",
              "an idempotent component of the point lies in the submodule; no functional can take "
              "the value 1 there"),
        d1_(d1),
        d2_(d2) {}
  double d1() const noexcept { return d1_; }
  double d2() const noexcept { return d2_; }

 private:
  double d1_;
  double d2_;
};

class NullConeVector : public Error {
 public:
  NullConeVector()
      : Error("NullConeVector",
              "vector has a vanishing idempotent component; its functional values are confined "
              "to an ideal") {}
};

class UnknownCheckId : public Error {
 public:
  explicit UnknownCheckId(const std::string& id)
      : Error("UnknownCheckId", "unknown check id: " + id) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

}  // namespace bicomplex
