#pragma once

#include <stdexcept>
#include <string>

namespace landau_paraxial {

/// Precondition on a physical or numerical parameter was violated.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// A computation produced or met a non-finite or singular value.
class NumericError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Arguments are individually valid but incompatible (e.g. fields on different grids).
class UsageError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Transverse eigenvalue too large for the paraxial expansion (lambda >= k^2).
class ParaxialityError : public DomainError
{
  public:
    using DomainError::DomainError;
};

/// Least-squares fit could not be formed.
class FitError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Phase extraction failed because the overlap or axis amplitude vanished.
class ExtractionError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// The propagating beam reached the Dirichlet wall at r_max.
class WallContactError : public std::runtime_error
{
  public:
    WallContactError(double z, double ratio)
        : std::runtime_error("beam reached the grid wall at z=" + std::to_string(z) +
                             " (boundary/peak amplitude " + std::to_string(ratio) + ")")
        , z_(z)
        , ratio_(ratio)
    {
    }

    double z() const noexcept { return z_; }
    double ratio() const noexcept { return ratio_; }

  private:
    double z_;
    double ratio_;
};

/// Malformed key-value input; carries the 1-based line and the offending key.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(int line, std::string key, const std::string& what)
        : std::runtime_error(format(line, key, what))
        , line_(line)
        , key_(std::move(key))
    {
    }

    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

  private:
    static std::string format(int line, const std::string& key, const std::string& what)
    {
        std::string out;
        if (line > 0) {
            out += "line " + std::to_string(line) + ": ";
        }
        if (!key.empty()) {
            out += "key '" + key + "': ";
        }
        return out + what;
    }

    int line_;
    std::string key_;
};

/// Unknown fixture name.
class LookupError : public std::out_of_range
{
  public:
    using std::out_of_range::out_of_range;
};

} // namespace landau_paraxial
