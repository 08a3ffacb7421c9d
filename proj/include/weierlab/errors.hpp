#ifndef WEIERLAB_ERRORS_HPP
#define WEIERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weierlab
{

/// Raised when a lattice parameter is not in the upper half-plane.
class NotInUpperHalfPlane : public std::domain_error
{
public:
    explicit NotInUpperHalfPlane(const std::string &what) : std::domain_error(what) {}
};

/// Raised by the q-series evaluators when Im(tau) is below the configured guard.
class TauBelowGuard : public std::domain_error
{
public:
    explicit TauBelowGuard(const std::string &what) : std::domain_error(what) {}
};

/// Raised when a function with a pole on the lattice is evaluated at (or within
/// the pole guard of) a lattice point.
class PoleAtLatticePoint : public std::domain_error
{
public:
    explicit PoleAtLatticePoint(const std::string &what) : std::domain_error(what) {}
};

class UnknownCheckName : public std::invalid_argument
{
public:
    explicit UnknownCheckName(const std::string &name)
        : std::invalid_argument("unknown check name: " + name), m_name(name)
    {
    }
    const std::string &name() const noexcept { return m_name; }

private:
    std::string m_name;
};

} // namespace weierlab

#endif
