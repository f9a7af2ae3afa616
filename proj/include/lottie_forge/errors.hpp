#pragma once

#include <stdexcept>
#include <string>

namespace lottie_forge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text is not valid JSON / SVG / token text.
class SyntaxError : public Error {
public:
    using Error::Error;
};

// JSON parses but violates the accepted Lottie schema subset.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Structurally valid input using a feature outside the supported set.
class UnsupportedFeature : public Error {
public:
    using Error::Error;
};

// Token stream violates the stream grammar (unknown token, arity
// mismatch, unbalanced blocks, trailing tokens).
class MalformedStream : public Error {
public:
    using Error::Error;
};

// Token stream ends in the middle of a block.
class TruncatedStream : public MalformedStream {
public:
    using MalformedStream::MalformedStream;
};

// Numeric argument outside the function's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class UnsupportedSvgFeature : public UnsupportedFeature {
public:
    using UnsupportedFeature::UnsupportedFeature;
};

} // namespace lottie_forge
