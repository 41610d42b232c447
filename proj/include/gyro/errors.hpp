#pragma once

#include <stdexcept>
#include <string>

namespace gyro {

/// Bad arguments or out-of-domain inputs: malformed files, radii outside
/// (0,1), elements outside the model's domain.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A Cayley table failed exhaustive axiom validation.
class table_error : public std::runtime_error {
public:
    table_error(std::string axiom, std::string witness)
        : std::runtime_error("table invalid: " + axiom + " violated at " + witness),
          axiom(std::move(axiom)),
          witness(std::move(witness)) {}

    std::string axiom;
    std::string witness;
};

/// A table handed to the group adapter is not associative.
class not_associative_error : public std::runtime_error {
public:
    explicit not_associative_error(std::string witness)
        : std::runtime_error("table not associative at " + witness), witness(std::move(witness)) {}

    std::string witness;
};

/// Left cosets of a candidate subset failed to partition the element set.
class partition_error : public std::runtime_error {
public:
    explicit partition_error(std::string witness)
        : std::runtime_error("cosets do not partition the element set: " + witness),
          witness(std::move(witness)) {}

    std::string witness;
};

} // namespace gyro
