// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_ERRORS_HPP
#define SBFD_ERRORS_HPP

#include <cstdio>
#include <stdexcept>
#include <string>

namespace sbfd
{

namespace detail
{
inline std::string scientific(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}
}  // namespace detail

// Base for every numerical or modelling failure raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NonPositiveJacobian : public Error
{
public:
  NonPositiveJacobian(double det, double eta)
    : Error("non-positive boundary Jacobian |J| = " + detail::scientific(det) +
            " at eta = " + std::to_string(eta) +
            " (element orientation or scaling-centre placement)"),
      det_(det), eta_(eta)
  {
  }
  double det() const { return det_; }
  double eta() const { return eta_; }

private:
  double det_;
  double eta_;
};

class SingularE0 : public Error
{
public:
  explicit SingularE0(double condition)
    : Error("E0 is numerically singular (condition " + detail::scientific(condition) +
            "); degenerate subdomain geometry"),
      condition_(condition)
  {
  }
  double condition() const { return condition_; }

private:
  double condition_;
};

// A block pivot in the radial sweep is numerically singular. `index` is the radial
// row (-1 and n+1 denote the ghost rows).
class SingularPivot : public Error
{
public:
  SingularPivot(int index, double rcond)
    : Error("singular pivot block at radial row " + std::to_string(index) +
            " (reciprocal condition " + detail::scientific(rcond) + ")"),
      index_(index), rcond_(rcond)
  {
  }
  int index() const { return index_; }
  double rcond() const { return rcond_; }

private:
  int index_;
  double rcond_;
};

class OutOfRange : public Error
{
public:
  using Error::Error;
};

class DuplicateNode : public Error
{
public:
  using Error::Error;
};

class DanglingNode : public Error
{
public:
  using Error::Error;
};

class InconsistentFrequency : public Error
{
public:
  using Error::Error;
};

class UnmatchedInterfaceNodes : public Error
{
public:
  using Error::Error;
};

class LoadOutsideMesh : public Error
{
public:
  using Error::Error;
};

class SingularGlobalMatrix : public Error
{
public:
  using Error::Error;
};

class NonConvergence : public Error
{
public:
  using Error::Error;
};

// Reading or writing a file failed.
class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Invalid user input. `line` is 1-based, 0 when unknown.
class ConfigError : public std::runtime_error
{
public:
  ConfigError(const std::string &what, int line = 0)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line)
  {
  }
  int line() const { return line_; }

private:
  int line_;
};

}  // namespace sbfd

#endif  // SBFD_ERRORS_HPP
