#pragma once

#include <stdexcept>
#include <string>

namespace isoasym {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An elementary function was applied outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed expression text. `offset()` is the byte offset of the failure.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownIdentifier : public SyntaxError {
public:
    UnknownIdentifier(const std::string& name, std::size_t offset)
        : SyntaxError("unknown identifier '" + name + "'", offset), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// The curve speed is at or below the regularity threshold.
class DegenerateCurve : public Error {
public:
    DegenerateCurve(const std::string& what, double omega) : Error(what), omega_(omega) {}
    double omega() const noexcept { return omega_; }

private:
    double omega_;
};

/// Curvature vanishes, so the Frenet frame does not exist.
class FrameUndefined : public Error {
public:
    FrameUndefined(const std::string& what, double omega) : Error(what), omega_(omega) {}
    double omega() const noexcept { return omega_; }

private:
    double omega_;
};

/// Surface tangents are parallel; no normal exists at this point.
class DegenerateSurfacePoint : public Error {
public:
    using Error::Error;
};

class DuplicateEta : public Error {
public:
    using Error::Error;
};

class EtaEqualsEta0 : public Error {
public:
    using Error::Error;
};

/// Pivot underflow during elimination.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Scene file problems. `path()` names the offending key, e.g. `points[1].omega`.
class ConfigError : public Error {
public:
    ConfigError(const std::string& path, const std::string& what)
        : Error(path.empty() ? what : path + ": " + what), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace isoasym
