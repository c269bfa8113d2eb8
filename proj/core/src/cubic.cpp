#include "lg36/cubic.hpp"

namespace lg36 {

template struct ParamCubic<Fp>;
template struct ParamCubic<Rational>;
template struct TwistedCubic<Fp>;
template struct TwistedCubic<Rational>;
template TwistedCubic<Fp> cubic_through_triple(const SymplecticSpace<Fp>&, const SigmaPoint<Fp>&,
                                               const SigmaPoint<Fp>&, const SigmaPoint<Fp>&);
template TwistedCubic<Rational> cubic_through_triple(const SymplecticSpace<Rational>&, const SigmaPoint<Rational>&,
                                                     const SigmaPoint<Rational>&, const SigmaPoint<Rational>&);
template CurveIntersection<Fp> curve_intersection(const TwistedCubic<Fp>&, const TwistedCubic<Fp>&, const PrimeField&);
template CurveIntersection<Rational> curve_intersection(const TwistedCubic<Rational>&, const TwistedCubic<Rational>&,
                                                        const RationalField&);
template std::vector<VcHit<Fp>> plane_meets_vc(const SymplecticSpace<Fp>&, const TwistedCubic<Fp>&,
                                               const Matrix<Fp>&);
template std::vector<VcHit<Rational>> plane_meets_vc(const SymplecticSpace<Rational>&, const TwistedCubic<Rational>&,
                                                     const Matrix<Rational>&);

}  // namespace lg36
