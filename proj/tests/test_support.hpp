#pragma once

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>

namespace testsup {

inline int failures = 0;
inline int checks = 0;

inline void expect(bool cond, const std::string& msg) {
  ++checks;
  if (!cond) {
    ++failures;
    std::cerr << "[FAIL] " << msg << "\n";
  }
}

template <class A, class B>
void expect_eq(const A& a, const B& b, const std::string& msg) {
  std::ostringstream os;
  os << msg << " (got " << a << ", want " << b << ")";
  expect(a == static_cast<A>(b), os.str());
}

inline void expect_near(double a, double b, double eps, const std::string& msg) {
  std::ostringstream os;
  os << msg << " (got " << a << ", want " << b << " +- " << eps << ")";
  expect(std::abs(a - b) <= eps, os.str());
}

inline int finish(const char* name) {
  if (failures != 0) {
    std::cerr << name << ": " << failures << " of " << checks << " checks failed\n";
    return 1;
  }
  std::cout << name << ": " << checks << " checks passed\n";
  return 0;
}

}  // namespace testsup
