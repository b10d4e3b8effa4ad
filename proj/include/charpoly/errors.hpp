#ifndef CHARPOLY_ERRORS_HPP
#define CHARPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charpoly {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CHARPOLY_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                                  \
        explicit Name(const std::string& what = #Name) : Error(what) {}    \
    }

// graphs
CHARPOLY_DEFINE_ERROR(DisconnectedGraph);
CHARPOLY_DEFINE_ERROR(NotATree);
CHARPOLY_DEFINE_ERROR(NotTrivalentInterior);
CHARPOLY_DEFINE_ERROR(NotTreeEdge);
CHARPOLY_DEFINE_ERROR(NotLoopTree);
CHARPOLY_DEFINE_ERROR(GenusOutOfRange);
CHARPOLY_DEFINE_ERROR(InvalidTree);

// lattices
CHARPOLY_DEFINE_ERROR(DimensionMismatch);
CHARPOLY_DEFINE_ERROR(ZeroVector);

// polyhedra
CHARPOLY_DEFINE_ERROR(Infeasible);
CHARPOLY_DEFINE_ERROR(NonPositiveFactor);
CHARPOLY_DEFINE_ERROR(OriginNotInterior);
CHARPOLY_DEFINE_ERROR(Unbounded);
CHARPOLY_DEFINE_ERROR(UnknownLabel);

// constructors
CHARPOLY_DEFINE_ERROR(NotTrivalent);
CHARPOLY_DEFINE_ERROR(NotTrivalentTree);

// analysis
CHARPOLY_DEFINE_ERROR(ResourceLimit);
CHARPOLY_DEFINE_ERROR(NoDecomposition);
CHARPOLY_DEFINE_ERROR(ObstructionNotApplicable);

#undef CHARPOLY_DEFINE_ERROR

}  // namespace charpoly

#endif  // CHARPOLY_ERRORS_HPP
