#pragma once

// Exact scalar types and the formal-cardinality arithmetic shared by every
// module.  All sizes of finite groups flow through FormalCardinality (a
// positive rational kept as a prime -> exponent map); machine integers never
// carry a cardinality across a module boundary.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

#include <Eigen/Core>

namespace Eigen {

// mpz_class / mpq_class as Eigen scalars (the documented custom-scalar hook).
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace euchar {

using Int = mpz_class;
using Rat = mpq_class;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using I64Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Engine-level failure: a precondition of a computation was violated.  The
// code string is stable and machine-checkable ("NotPrime", "SizeCapExceeded",
// ...); the CLI maps these to exit code 3.
class EngineError : public std::runtime_error {
 public:
  EngineError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Malformed scenario input (unparseable JSON, bad references, limit
// violations).  The CLI maps these to exit code 2.
class SchemaError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime(std::int64_t n);

// p-adic valuation of n (n != 0).
std::int64_t valuation(Int n, std::int64_t p);

// Positive rational number represented multiplicatively as a map
// prime -> nonzero exponent.  The empty map is 1.
class FormalCardinality {
 public:
  FormalCardinality() = default;

  static FormalCardinality one() { return {}; }

  // p^e; requires p prime.  e == 0 gives 1.
  static FormalCardinality prime_power(std::int64_t p, std::int64_t e);

  FormalCardinality& operator*=(const FormalCardinality& o);
  friend FormalCardinality operator*(FormalCardinality a,
                                     const FormalCardinality& b) {
    a *= b;
    return a;
  }

  FormalCardinality inverse() const;
  FormalCardinality pow(std::int64_t k) const;

  bool is_one() const { return exps_.empty(); }
  // True when the value is an integer (no negative exponents).
  bool is_integral() const;

  std::int64_t exponent_of(std::int64_t p) const;

  Rat to_rational() const;

  // Comparisons are exact rational comparisons.
  friend bool operator==(const FormalCardinality& a,
                         const FormalCardinality& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const FormalCardinality& a,
                         const FormalCardinality& b) {
    return !(a == b);
  }
  bool operator<=(const FormalCardinality& o) const;
  bool operator<(const FormalCardinality& o) const;

  const std::map<std::int64_t, std::int64_t>& exponents() const {
    return exps_;
  }

  // "1", "3^-1", "2 * 5^2": primes ascending, exponent 1 omitted.
  std::string str() const;

 private:
  std::map<std::int64_t, std::int64_t> exps_;
};

// A cardinality that may only be known up to bounds.  Exact and UpperBound
// carry one value; Interval carries lo <= hi.
class ValueOrBound {
 public:
  enum class Kind { Exact, UpperBound, Interval };

  static ValueOrBound exact(FormalCardinality v);
  static ValueOrBound upper_bound(FormalCardinality v);
  static ValueOrBound interval(FormalCardinality lo, FormalCardinality hi);

  Kind kind() const { return kind_; }
  // Exact value, or the upper end for bounds.
  const FormalCardinality& value() const { return hi_; }
  const FormalCardinality& lo() const { return lo_; }
  const FormalCardinality& hi() const { return hi_; }

  // Multiply both ends by a fixed positive factor (kind preserved).
  ValueOrBound scaled(const FormalCardinality& f) const;

  std::string str() const;

 private:
  ValueOrBound(Kind k, FormalCardinality lo, FormalCardinality hi)
      : kind_(k), lo_(std::move(lo)), hi_(std::move(hi)) {}
  Kind kind_;
  FormalCardinality lo_, hi_;
};

}  // namespace euchar
