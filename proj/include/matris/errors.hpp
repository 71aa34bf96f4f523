// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace matris {

/// Bad argument or violated type invariant.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A propagation distance collapsed to zero (endpoint on a TRIS element).
class SingularGeometry : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Every MA candidate was excluded; nothing left to optimize over.
class InfeasibleRegion : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Scenario-file problem. `key()` is the dotted path of the offending entry,
/// empty when the failure is not tied to one key (missing file, bad syntax).
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key))
    {
    }

    const std::string& key() const noexcept { return key_; }

  private:
    std::string key_;
};

} // namespace matris
