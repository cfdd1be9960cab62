#pragma once

namespace helixforge {

// Tolerances for the floating-point layer, collected in one place so tests
// and library checks agree on the same constants. The exact integer layer
// never consults these.
struct Tolerances {
    double recurrence_rel = 1e-8;      // continued g/h against the three-term recurrence
    double integer_match_rel = 1e-9;   // g(k) vs L_k, h(k) vs F_k, float Binet vs exact
    double integer_imag_abs = 1e-12;   // imaginary residue of lambda2^t at integer t
    double closed_form_rel = 1e-6;     // map definition vs closed form, scaled by the radius
    double pitch_abs = 1e-9;           // displacement error over one turn, per component
    double csv_roundtrip_abs = 1e-11;  // per coordinate after export and re-import
};

inline const Tolerances& tolerances() {
    static const Tolerances t;
    return t;
}

}  // namespace helixforge
