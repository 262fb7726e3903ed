#pragma once

#include <stdexcept>
#include <string>

namespace paramp {

/// Base class for all library errors.
class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter violates its positivity (or stated bound) invariant.
/// Carries the offending field name so callers can report it.
class NonPositiveParameter : public Error {
public:
    explicit NonPositiveParameter(std::string field, std::string detail = "must be > 0")
        : Error(field + ": " + detail), field_(std::move(field)) {}

    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Drive harmonic inconsistent with the cavity resonance.
class FrequencyMismatch : public Error {
    using Error::Error;
};

/// DC-bias drive outside the strong-bias regime (e_dc <= e_p).
class BiasRegimeViolation : public Error {
    using Error::Error;
};

/// The capacitor gap closed (d0 + x <= 0) during a simulation.
class GapClosure : public Error {
public:
    explicit GapClosure(double time_s)
        : Error("capacitor gap closed at t = " + std::to_string(time_s) + " s"),
          time_s_(time_s) {}

    [[nodiscard]] double time_s() const noexcept { return time_s_; }

private:
    double time_s_;
};

/// Invalid run configuration or violated operation precondition.
class ConfigError : public Error {
    using Error::Error;
};

/// Bisection bracket does not straddle zero growth.
class NoSignChange : public Error {
    using Error::Error;
};

/// Trace energies are all below the floor or non-finite; no rate can be fitted.
class DegenerateTrace : public Error {
    using Error::Error;
};

}  // namespace paramp
