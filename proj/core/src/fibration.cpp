#include "lg36/fibration.hpp"

namespace lg36 {

template SectionTower<Fp> section_through(const SymplecticSpace<Fp>&, const std::vector<Vec<Fp>>&, int,
                                          std::uint64_t);
template SectionTower<Rational> section_through(const SymplecticSpace<Rational>&, const std::vector<Vec<Rational>>&,
                                                int, std::uint64_t);
template std::array<SigmaPoint<Fp>, 3> intersect_with_section(const SymplecticSpace<Fp>&, const TwistedCubic<Fp>&,
                                                              const SectionTower<Fp>&);
template std::array<SigmaPoint<Rational>, 3> intersect_with_section(const SymplecticSpace<Rational>&,
                                                                    const TwistedCubic<Rational>&,
                                                                    const SectionTower<Rational>&);
template FiberPoint<Fp> fibration_value(const SymplecticSpace<Fp>&, const std::array<SigmaPoint<Fp>, 3>&,
                                        const SectionTower<Fp>&);
template FiberPoint<Rational> fibration_value(const SymplecticSpace<Rational>&,
                                              const std::array<SigmaPoint<Rational>, 3>&,
                                              const SectionTower<Rational>&);

}  // namespace lg36
