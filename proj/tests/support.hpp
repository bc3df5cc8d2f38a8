#pragma once

#include <doctest.h>

#include <string>

#include "qsc/error.hpp"
#include "qsc/expr.hpp"
#include "qsc/polyring.hpp"

namespace qsc::testing {

inline QRat dsl(const std::string& text, const Bindings& b = {}) { return eval_expr(*parse_expr(text), b); }

inline ZPoly zp(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long x : coeffs) c.emplace_back(x);
  return ZPoly(std::move(c));
}

inline QPoly qp(std::initializer_list<long> coeffs) {
  std::vector<BigRat> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPoly(std::move(c));
}

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a qsc::Error");
  return Errc::OutOfRange;
}

}  // namespace qsc::testing

#define CHECK_ERRC(expr, code) CHECK(::qsc::testing::error_code([&] { (void)(expr); }) == (code))
