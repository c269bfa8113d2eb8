#include "lg36/segre.hpp"

namespace lg36 {

template ConjugateLines<Fp> segre_from_beta(const SymplecticSpace<Fp>&, const Matrix<Fp>&);
template ConjugateLines<Rational> segre_from_beta(const SymplecticSpace<Rational>&, const Matrix<Rational>&);
template SegreThreefold<Fp> segre_through(const SymplecticSpace<Fp>&, const TwistedCubic<Fp>&,
                                          const TangentHyperplaneSample<Fp>&);
template SegreThreefold<Rational> segre_through(const SymplecticSpace<Rational>&, const TwistedCubic<Rational>&,
                                                const TangentHyperplaneSample<Rational>&);
template Matrix<Fp> beta_for_mark(const SymplecticSpace<Fp>&, const TwistedCubic<Fp>&, const Matrix<Fp>&);
template Matrix<Rational> beta_for_mark(const SymplecticSpace<Rational>&, const TwistedCubic<Rational>&,
                                        const Matrix<Rational>&);

}  // namespace lg36
