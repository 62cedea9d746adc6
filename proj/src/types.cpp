#include "euchar/types.hpp"

#include <sstream>

namespace euchar {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  mpz_class z(static_cast<long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

std::int64_t valuation(Int n, std::int64_t p) {
  if (n == 0) throw EngineError("InternalInvariant", "valuation of zero");
  if (p < 2) throw EngineError("NotPrime", "valuation base must be >= 2");
  std::int64_t v = 0;
  Int q, r;
  Int pz(static_cast<long>(p));
  n = abs(n);
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
    if (r != 0) break;
    ++v;
    n = q;
  }
  return v;
}

FormalCardinality FormalCardinality::prime_power(std::int64_t p,
                                                 std::int64_t e) {
  if (!is_prime(p))
    throw EngineError("NotPrime",
                      "cardinality base " + std::to_string(p) + " not prime");
  FormalCardinality c;
  if (e != 0) c.exps_[p] = e;
  return c;
}

FormalCardinality& FormalCardinality::operator*=(const FormalCardinality& o) {
  for (const auto& [p, e] : o.exps_) {
    auto it = exps_.find(p);
    if (it == exps_.end()) {
      exps_[p] = e;
    } else {
      it->second += e;
      if (it->second == 0) exps_.erase(it);
    }
  }
  return *this;
}

FormalCardinality FormalCardinality::inverse() const { return pow(-1); }

FormalCardinality FormalCardinality::pow(std::int64_t k) const {
  FormalCardinality c;
  if (k == 0) return c;
  for (const auto& [p, e] : exps_) c.exps_[p] = e * k;
  return c;
}

bool FormalCardinality::is_integral() const {
  for (const auto& [p, e] : exps_) {
    (void)p;
    if (e < 0) return false;
  }
  return true;
}

std::int64_t FormalCardinality::exponent_of(std::int64_t p) const {
  auto it = exps_.find(p);
  return it == exps_.end() ? 0 : it->second;
}

Rat FormalCardinality::to_rational() const {
  Int num = 1, den = 1;
  for (const auto& [p, e] : exps_) {
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    if (e > 0)
      num *= pw;
    else
      den *= pw;
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool FormalCardinality::operator<=(const FormalCardinality& o) const {
  return to_rational() <= o.to_rational();
}

bool FormalCardinality::operator<(const FormalCardinality& o) const {
  return to_rational() < o.to_rational();
}

std::string FormalCardinality::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : exps_) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

ValueOrBound ValueOrBound::exact(FormalCardinality v) {
  return ValueOrBound(Kind::Exact, v, v);
}

ValueOrBound ValueOrBound::upper_bound(FormalCardinality v) {
  return ValueOrBound(Kind::UpperBound, FormalCardinality::one(),
                      std::move(v));
}

ValueOrBound ValueOrBound::interval(FormalCardinality lo,
                                    FormalCardinality hi) {
  if (!(lo <= hi))
    throw EngineError("InternalInvariant", "interval with lo > hi");
  return ValueOrBound(Kind::Interval, std::move(lo), std::move(hi));
}

ValueOrBound ValueOrBound::scaled(const FormalCardinality& f) const {
  switch (kind_) {
    case Kind::Exact:
      return exact(hi_ * f);
    case Kind::UpperBound:
      return upper_bound(hi_ * f);
    case Kind::Interval:
    default:
      return interval(lo_ * f, hi_ * f);
  }
}

std::string ValueOrBound::str() const {
  switch (kind_) {
    case Kind::Exact:
      return hi_.str();
    case Kind::UpperBound:
      return "<= " + hi_.str();
    case Kind::Interval:
    default:
      return "in [" + lo_.str() + ", " + hi_.str() + "]";
  }
}

}  // namespace euchar
