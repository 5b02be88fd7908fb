#pragma once

// Typographical corrections applied to the published closed forms.

#include <array>
#include <string_view>

namespace gtsf::errata {

struct Entry {
  std::string_view where;
  std::string_view stated;
  std::string_view used;
};

inline constexpr std::array<Entry, 12> kEntries{{
    {"laplace transform", "Wright argument -cx/(4 s^k)",
     "-cx/(4 s^2), forced by the term Gamma(p+2+2k) s^-(p+2+2k)"},
    {"laplace transform", "labelled 2Psi3 with two lower pairs", "2Psi2"},
    {"laplace transform, H_{p,b,c} reduction", "Wright argument -cx/(4 s^k)", "-cx/(4 s^2)"},
    {"laplace transform, derivation", "kernel e^{zs}", "e^{-sz}"},
    {"euler transform, derivation", "power (-cx/2)^k", "(-cx/4)^k"},
    {"whittaker transform, derivation", "power (-cx/2)^{2k}", "(-cx/4)^k"},
    {"whittaker transform, derivation", "first numerator factor without Gamma",
     "Gamma(1/2 + omega + zeta + p + 2k + 1)"},
    {"whittaker transform", "condition Re(e) > |Re(omega)| - 1/2 (undefined e)",
     "zeta +- omega + p + 3/2 > 0"},
    {"whittaker base integral", "condition Re(w +- zeta) > -1/2", "Re(zeta +- omega) > -1/2"},
    {"k-transform", "prefactor 2^(rho+p-1) omega^(1-rho-p)",
     "2^(rho+p-1) omega^-(rho+p+1); the stated form is omega^2 too large"},
    {"fractional fourier transform", "term factor 1/(i^(2k+p+2) Omega^(2k+p+2) (-1)^(2k+p+1))",
     "kept as stated; equals -exp(-2 pi i p) times the one-sided regularized transform "
     "(-1 for integer p, +1 for half-integer p)"},
    {"fractional fourier transform, H_{p,b,c} reduction", "Gamma(k + P + (b+2)/2)",
     "Gamma(k + p + (b+2)/2)"},
}};

}  // namespace gtsf::errata
