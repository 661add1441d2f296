#ifndef SLOCC_ERRORS_HPP
#define SLOCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slocc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SLOCC_ERROR(name)                                   \
    class name : public Error {                             \
    public:                                                 \
        explicit name(const std::string& what) : Error(what) {} \
    }

SLOCC_ERROR(SingularMatrix);
SLOCC_ERROR(DimensionMismatch);
SLOCC_ERROR(NotInField);
SLOCC_ERROR(OrderMismatch);
SLOCC_ERROR(NotInvertible);
SLOCC_ERROR(NotReversible);
SLOCC_ERROR(NotToeplitz);
SLOCC_ERROR(PatternViolation);
SLOCC_ERROR(NotFullRank);
SLOCC_ERROR(NotCommuting);
SLOCC_ERROR(NoSplitFound);
SLOCC_ERROR(DegenerateParameter);
SLOCC_ERROR(ZeroScale);
SLOCC_ERROR(BadProfile);
SLOCC_ERROR(ParseError);
SLOCC_ERROR(InvalidArgument);

#undef SLOCC_ERROR

} // namespace slocc

#endif
