#pragma once

#include <stdexcept>
#include <string>

namespace gdinfo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class NotPsd : public Error {
public:
    NotPsd(const std::string& what, double worst_eigenvalue)
        : Error(what), worst_eigenvalue_(worst_eigenvalue) {}
    double worst_eigenvalue() const { return worst_eigenvalue_; }

private:
    double worst_eigenvalue_;
};

class BreakpointOrder : public Error {
public:
    using Error::Error;
};

class NegativeTime : public Error {
public:
    using Error::Error;
};

/// Structural hypothesis H1..H5 failed; `hypothesis()` is the index 1..5.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(int hypothesis, const std::string& what, double residual = 0.0)
        : Error(what), hypothesis_(hypothesis), residual_(residual) {}
    int hypothesis() const { return hypothesis_; }
    double residual() const { return residual_; }

private:
    int hypothesis_;
    double residual_;
};

class BlowUp : public Error {
public:
    using Error::Error;
};

class PsdLost : public Error {
public:
    using Error::Error;
};

class NoStabilizingSolution : public Error {
public:
    using Error::Error;
};

class StepMisaligned : public Error {
public:
    using Error::Error;
};

class SizeCap : public Error {
public:
    using Error::Error;
};

class DegenerateBeyondJitter : public Error {
public:
    using Error::Error;
};

}  // namespace gdinfo
