// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace nuceft {

// Precondition violations that map to CLI exit code 2.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct dimension_error : domain_error {
    using domain_error::domain_error;
};

// Dense backends refuse requests beyond their qubit/mode cap.
struct size_error : domain_error {
    using domain_error::domain_error;
};

struct geometry_error : domain_error {
    using domain_error::domain_error;
};

struct unsupported_error : domain_error {
    using domain_error::domain_error;
};

struct contract_error : domain_error {
    using domain_error::domain_error;
};

struct precision_error : domain_error {
    using domain_error::domain_error;
};

}  // namespace nuceft
