#pragma once

#include <stdexcept>
#include <string>

namespace sextic {

/// A sieve run would need more working memory than the configured budget.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two routes that must agree produced different answers. Always a bug.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sextic
