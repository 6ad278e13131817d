#include "pfdimers/pfaffian.hpp"

namespace pfdimers {

template Matrix<Complex> build_adjacency<Complex>(const CombinatorialMap&, const Cochain1&, const Orientation&);
template Matrix<GaussRational> build_adjacency<GaussRational>(const CombinatorialMap&, const Cochain1&,
                                                               const Orientation&);
template Complex pfaffian<Complex>(Matrix<Complex>, PfaffianDiagnostics*, double);
template GaussRational pfaffian<GaussRational>(Matrix<GaussRational>, PfaffianDiagnostics*, double);

}  // namespace pfdimers
