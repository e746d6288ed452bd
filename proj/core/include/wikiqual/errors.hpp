#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wikiqual {

/// Base class for all wikiqual errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad threshold/weight/boundary data or an empty calibration dataset.
class CalibrationError : public Error {
public:
    using Error::Error;
};

/// Malformed caller input: unknown labels, mismatched lengths, bad CSV schema.
class InputError : public Error {
public:
    using Error::Error;
};

/// Config file syntax or semantic problem.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// I/O failure while reading an input or writing an output.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed XML in a dump stream. Carries the byte offset of the problem.
class XmlParseError : public Error {
public:
    XmlParseError(const std::string& what, std::uint64_t byte_offset)
        : Error(what + " at byte " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::uint64_t byte_offset() const { return byte_offset_; }

private:
    std::uint64_t byte_offset_;
};

/// Dump stream ended mid-document. Complete records before the cut were
/// already yielded.
class TruncatedDumpError : public Error {
public:
    using Error::Error;
};

}  // namespace wikiqual
