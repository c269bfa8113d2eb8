#include "lg36/group.hpp"

namespace lg36 {

template MarkedFano<Fp> marked_fano_setup(const SymplecticSpace<Fp>&, std::uint64_t, const QuadricIdeal<Fp>&, int,
                                          int*);
template TwistedCubic<Fp> chain_apply(const SymplecticSpace<Fp>&, const MarkedFano<Fp>&, const TwistedCubic<Fp>&,
                                      const std::string&);
template ChainPoint<Fp> find_chain_point(const SymplecticSpace<Fp>&, const MarkedFano<Fp>&, const TwistedCubic<Fp>&,
                                         const TwistedCubic<Fp>&, const QuarticForm<Fp>*, std::uint64_t);
template std::vector<Vec<Fp>> common_horizontal_lines(const SymplecticSpace<Fp>&, const TwistedCubic<Fp>&,
                                                      const TwistedCubic<Fp>&, std::uint64_t);
template std::vector<Vec<Rational>> common_horizontal_lines(const SymplecticSpace<Rational>&,
                                                            const TwistedCubic<Rational>&,
                                                            const TwistedCubic<Rational>&, std::uint64_t);
template SigmaPoint<Fp> recover_tangency(const SymplecticSpace<Fp>&, CSpan<Fp>);

}  // namespace lg36
