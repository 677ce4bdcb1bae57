// fplab - factorpower semigroups and their simple modules
//
// Irreducible complex representations of an abstract finite group given by
// its multiplication table, found numerically by splitting the regular
// representation.

#ifndef FPLAB_IRREDUCIBLES_HPP_
#define FPLAB_IRREDUCIBLES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fplab/exact.hpp"
#include "fplab/permgroup.hpp"

namespace fplab {

  struct GroupIrreducible {
    std::size_t dim = 0;
    //! Unitary matrices indexed like the table.
    std::vector<CMatrix> matrices;
    std::vector<Complex> character;
  };

  //! One representative per isomorphism class, sorted by dimension and then
  //! by character values, so the order does not depend on the seed.
  //!
  //! A random Hermitian element of the centre splits the regular
  //! representation into isotypic components; a random Hermitian element of
  //! the commuting right action then splits each component into irreducible
  //! left submodules. Throws NumericalError when the eigenvalue clusters do
  //! not have the expected sizes after a few attempts.
  std::vector<GroupIrreducible> numeric_irreducibles(GroupTable const& table,
                                                     std::uint64_t     seed = 0);

}  // namespace fplab

#endif  // FPLAB_IRREDUCIBLES_HPP_
