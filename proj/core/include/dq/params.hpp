#pragma once

#include "dq/error.hpp"

#include <cmath>

namespace dq {

/// Physical constants of the oscillator problem. All strictly positive.
struct PhysParams {
    double hbar = 1.0;
    double mass = 1.0;
    double omega = 1.0;

    PhysParams() = default;
    PhysParams(double hbar_, double mass_, double omega_) : hbar(hbar_), mass(mass_), omega(omega_) {
        validate();
    }

    void validate() const {
        if (!(hbar > 0.0) || !(mass > 0.0) || !(omega > 0.0) || !std::isfinite(hbar) ||
            !std::isfinite(mass) || !std::isfinite(omega)) {
            throw DomainError("physical parameters must be finite and strictly positive");
        }
    }

    /// m*omega, the scale that enters the holomorphic change of variables.
    double m_omega() const noexcept { return mass * omega; }

    /// Natural position width sqrt(hbar / (m omega)).
    double length_scale() const noexcept { return std::sqrt(hbar / m_omega()); }

    /// Natural momentum width sqrt(hbar m omega).
    double momentum_scale() const noexcept { return std::sqrt(hbar * m_omega()); }
};

}  // namespace dq
