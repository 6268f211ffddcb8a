#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vecap {

// Base for every error this library throws on purpose.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// --- shardio ---
class BadMagic : public Error {
  public:
    using Error::Error;
};
class DimMismatch : public Error {
  public:
    using Error::Error;
};
class TruncatedPayload : public Error {
  public:
    using Error::Error;
};

// --- llmclient ---
// Transport failed after all retry attempts were exhausted.
class TransportError : public Error {
  public:
    TransportError(const std::string & msg, int attempts)
        : Error(msg), attempts(attempts) {}
    int attempts = 0;
};
// Server spoke the wrong protocol (bad JSON, length mismatch, fatal status).
// Never retried.
class ProtocolError : public Error {
  public:
    using Error::Error;
};

// --- recaption ---
class EmptyVec : public Error {
  public:
    using Error::Error;
};
class PipelineError : public Error {
  public:
    PipelineError(std::string record_id, const std::string & msg)
        : Error("record '" + record_id + "': " + msg),
          record_id(std::move(record_id)) {}
    std::string record_id;
};

// --- sampler ---
class MissingScores : public Error {
  public:
    using Error::Error;
};
class MissingVeCap : public Error {
  public:
    using Error::Error;
};

// --- loss ---
class NormViolation : public Error {
  public:
    using Error::Error;
};
class DivergenceDetected : public Error {
  public:
    DivergenceDetected(const std::string & msg, std::size_t step)
        : Error(msg), step(step) {}
    std::size_t step = 0;
};

// --- eval ---
class EmptyIndex : public Error {
  public:
    using Error::Error;
};
class DegenerateMean : public Error {
  public:
    using Error::Error;
};
class SingletonClass : public Error {
  public:
    SingletonClass(const std::string & msg, int label)
        : Error(msg), label(label) {}
    int label = 0;
};

// --- mockllm ---
class BindError : public Error {
  public:
    using Error::Error;
};

}  // namespace vecap
