// Copyright 2026 The qlistdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLD_ERRORS_H
#define QLD_ERRORS_H

#include <stdexcept>
#include <string>

namespace qld {

/// Argument outside an operation's documented domain.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A modulus that is not prime, or is 2 where an odd prime is required.
struct InvalidModulus : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// Two objects whose dimensions or lengths must agree do not.
struct DimensionMismatch : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// Instance exceeds a brute-force or memory guard.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Amplitude table rejected (normalization or format).
struct InvalidTable : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// Predictor unitary moves amplitude across index values.
struct InvalidPredictor : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// Gram matrix of the codeword states is rank deficient.
struct DegenerateCode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Johnson bound precondition (eps above threshold) not met.
struct BoundInapplicable : std::domain_error {
    BoundInapplicable(const std::string &what, double threshold_value)
        : std::domain_error(what), threshold(threshold_value) {
    }
    double threshold;
};

/// sigma <= 0, so the list decoder has no per-iteration guarantee.
struct DecoderInapplicable : std::domain_error {
    DecoderInapplicable(const std::string &what, double sigma_value)
        : std::domain_error(what), sigma(sigma_value) {
    }
    double sigma;
};

/// Malformed config file or flag combination.
struct ConfigError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

}  // namespace qld

#endif
