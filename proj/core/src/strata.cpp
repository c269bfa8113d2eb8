#include "lg36/strata.hpp"

namespace lg36 {

template StratumLabel<Fp> stratum(const SymplecticSpace<Fp>&, CSpan<Fp>);
template StratumLabel<Rational> stratum(const SymplecticSpace<Rational>&, CSpan<Rational>);
template BisecantWitness<Fp> bisecant_decompose(const SymplecticSpace<Fp>&, CSpan<Fp>);
template BisecantWitness<Rational> bisecant_decompose(const SymplecticSpace<Rational>&, CSpan<Rational>);
template QuadricIdeal<Fp> build_quadric_ideal(const SymplecticSpace<Fp>&, std::uint64_t);
template OmegaWitness<Fp> omega_witness(const SymplecticSpace<Fp>&, const QuadricIdeal<Fp>&, CSpan<Fp>);

}  // namespace lg36
