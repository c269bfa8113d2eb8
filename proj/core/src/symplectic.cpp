#include "lg36/symplectic.hpp"

namespace lg36 {

template class SymplecticSpace<Fp>;
template class SymplecticSpace<Rational>;

}  // namespace lg36
