// Error taxonomy shared by the estimators, the synthetic benchmark and the
// ingestion pipeline. Every validation failure maps to one of these types so
// callers (and the CLI exit-code contract) can tell usage errors apart from
// internal ones.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bayeserr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyDatasetError : public Error {
public:
    EmptyDatasetError() : Error("empty dataset: at least one sample is required") {}
    explicit EmptyDatasetError(const std::string& what) : Error(what) {}
};

class InvalidLabelError : public Error {
public:
    InvalidLabelError(std::size_t index, double value, const std::string& constraint)
        : Error("invalid label at index " + std::to_string(index) + ": value " +
                std::to_string(value) + " violates " + constraint),
          index(index), value(value) {}
    std::size_t index;
    double value;
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t lhs, std::size_t rhs)
        : Error("length mismatch: " + std::to_string(lhs) + " values vs " +
                std::to_string(rhs) + " signs") {}
};

class InvalidSignError : public Error {
public:
    InvalidSignError(std::size_t index, int value)
        : Error("invalid sign at index " + std::to_string(index) + ": " +
                std::to_string(value) + " is not +1 or -1"),
          index(index), value(value) {}
    std::size_t index;
    int value;
};

class InvalidPriorError : public Error {
public:
    explicit InvalidPriorError(double value)
        : Error("invalid class prior " + std::to_string(value) + ": must lie in (0, 1]") {}
};

class InvalidDeltaError : public Error {
public:
    explicit InvalidDeltaError(double value)
        : Error("invalid delta " + std::to_string(value) + ": must lie in (0, 1)") {}
};

class UnsupportedKindError : public Error {
public:
    explicit UnsupportedKindError(const std::string& what) : Error(what) {}
};

class TooFewSamplesError : public Error {
public:
    explicit TooFewSamplesError(std::size_t n)
        : Error("too few samples: got " + std::to_string(n) + ", need at least 2") {}
};

class DimensionMismatchError : public Error {
public:
    DimensionMismatchError(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

class UnknownPresetError : public Error {
public:
    explicit UnknownPresetError(const std::string& name)
        : Error("unknown preset: \"" + name + "\"") {}
};

class NotApplicableError : public Error {
public:
    explicit NotApplicableError(const std::string& what) : Error(what) {}
};

class InvalidSetupError : public Error {
public:
    explicit InvalidSetupError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

class DuplicateSampleError : public Error {
public:
    explicit DuplicateSampleError(const std::string& id)
        : Error("duplicate sample id: \"" + id + "\""), id(id) {}
    std::string id;
};

class ZeroVotesError : public Error {
public:
    explicit ZeroVotesError(const std::string& id)
        : Error("sample \"" + id + "\" has zero total votes"), id(id) {}
    std::string id;
};

class UncoveredClassError : public Error {
public:
    explicit UncoveredClassError(const std::string& name)
        : Error("class \"" + name + "\" is not covered by the grouping"), name(name) {}
    std::string name;
};

class MissingHardLabelError : public Error {
public:
    explicit MissingHardLabelError(const std::string& id)
        : Error("no hard label for sample id \"" + id + "\""), id(id) {}
    std::string id;
};

class MissingLabelError : public Error {
public:
    explicit MissingLabelError(const std::string& id)
        : Error("no label for predicted sample id \"" + id + "\""), id(id) {}
    std::string id;
};

} // namespace bayeserr
