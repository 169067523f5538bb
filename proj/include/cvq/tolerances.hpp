#pragma once

namespace cvq {

/// Numerical thresholds for every pass/fail decision. Defaults follow the
/// documented per-operation contracts; `scaled` multiplies all of them.
struct Tolerances {
    double hermitian = 1e-10;       // max |A - A^dagger|
    double unitary = 1e-10;         // max |U^dagger U - I|
    double reconstruction = 1e-8;   // spectral round trip
    double degeneracy_gap = 1e-8;   // eigenvalues closer than this share a cluster
    double projective = 1e-8;       // U(a)U(b) vs phase * U(ab)
    double distinct_states = 1e-6;  // min distance between coherent states
    double overlap = 1e-8;          // |<g|h>| must stay below 1 - overlap
    double orthogonality = 1e-8;    // cross-value overlaps of coherent states
    double eigenvalue = 1e-8;       // eigenvalue vs value-set comparison
    double conjugation = 1e-8;      // T(t)^dagger A T(t) vs A'
    double expansion = 1e-10;       // basis resolution and normalisation
    double commutant = 1e-8;        // irreducibility diagnostic
    double singlet = 1e-10;         // singlet eigen-equation and anticorrelation

    Tolerances scaled(double factor) const {
        Tolerances t = *this;
        for (double* v : {&t.hermitian, &t.unitary, &t.reconstruction, &t.degeneracy_gap, &t.projective,
                          &t.distinct_states, &t.overlap, &t.orthogonality, &t.eigenvalue, &t.conjugation,
                          &t.expansion, &t.commutant, &t.singlet}) {
            *v *= factor;
        }
        return t;
    }
};

}  // namespace cvq
