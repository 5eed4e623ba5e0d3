#pragma once

#include <stdexcept>
#include <string>

namespace qlag {

/// Parameter outside its admissible domain (q outside (0,1), bad precision, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters outside the orthogonal regime required by an operation.
class regime_error : public std::runtime_error {
public:
    explicit regime_error(const std::string& what) : std::runtime_error(what) {}
};

/// A presumed root bracket showed no sign change.  Surfaced, never papered over:
/// if one of the theorem-derived brackets fails, that is a reportable finding.
class bracket_error : public std::runtime_error {
public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

/// Iteration budget exhausted (precision too low for the requested tolerance).
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two points that every statement requires to be distinct coincide within
/// tolerance even after doubling precision.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// Truncated sum cannot reach the requested tail bound within the given range.
class truncation_error : public std::runtime_error {
public:
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Unknown relation / pattern identifier.
class unknown_id_error : public std::runtime_error {
public:
    explicit unknown_id_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlag
